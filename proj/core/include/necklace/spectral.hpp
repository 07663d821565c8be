#pragma once

#include "necklace/curve_matrix.hpp"

#include <utility>
#include <vector>

namespace necklace {

/// Perron root and L1-normalized Perron (probability) vector.
struct PerronData {
    double root = 0.0;
    std::vector<double> vec;
    double residual = 0.0;  // ||M v - root v||_1 at the returned vector
    long iterations = 0;
};

struct PerronOptions {
    double tol = 1e-12;
    long max_iter = 1'000'000;
    /// Optional strictly positive start; empty means the uniform vector.
    std::vector<double> initial;
};

/// Power iteration with L1 renormalization; the root estimate is ||M v||_1 at
/// the normalized fixed point.  Throws ConvergenceError when the budget runs
/// out (the necklace matrices have subdominant modulus approaching the root
/// like 1 - O(1/K^2), so budgets must grow with K^2), and invalid_argument on
/// a zero or negative matrix.
PerronData perron(const CurveMatrix& m, const PerronOptions& opts);
PerronData perron(const CurveMatrix& m, double tol = 1e-12, long max_iter = 1'000'000);

/// (min column sum, max column sum); brackets the Perron root of a
/// nonnegative matrix.
std::pair<double, double> column_sum_bounds(const CurveMatrix& m);

/// Both eigenvalues of a 2x2 matrix by the quadratic formula, larger first.
std::pair<double, double> spectrum_2x2(const CurveMatrix& m);

}  // namespace necklace
