#include "necklace/spectral.hpp"

#include "necklace/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace necklace {

namespace {

double l1_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

}  // namespace

PerronData perron(const CurveMatrix& m, const PerronOptions& opts) {
    const long dim = m.dim();
    if (!m.nonnegative()) throw std::invalid_argument("perron: matrix must be nonnegative");
    if (m.nonzero_count() == 0) throw std::invalid_argument("perron: zero matrix");
    if (opts.tol <= 0) throw std::invalid_argument("perron: tolerance must be positive");
    if (opts.max_iter < 1) throw std::invalid_argument("perron: max_iter must be >= 1");

    std::vector<double> v;
    if (opts.initial.empty()) {
        v.assign(static_cast<std::size_t>(dim), 1.0 / static_cast<double>(dim));
    } else {
        if (static_cast<long>(opts.initial.size()) != dim) {
            throw DimensionError("perron: initial vector size mismatch");
        }
        v = opts.initial;
        double s = 0.0;
        for (double x : v) {
            if (x < 0) throw std::invalid_argument("perron: initial vector must be nonnegative");
            s += x;
        }
        if (s <= 0) throw std::invalid_argument("perron: initial vector must be nonzero");
        for (double& x : v) x /= s;
    }

    std::vector<double> u(static_cast<std::size_t>(dim));
    double residual = 0.0;
    for (long it = 1; it <= opts.max_iter; ++it) {
        m.apply(v, u);
        double rho = l1_norm(u);
        if (rho == 0.0) throw std::invalid_argument("perron: iterate annihilated (nilpotent pattern)");
        residual = 0.0;
        for (std::size_t k = 0; k < u.size(); ++k) residual += std::abs(u[k] - rho * v[k]);
        if (residual <= opts.tol) {
            return PerronData{rho, v, residual, it};
        }
        for (std::size_t k = 0; k < u.size(); ++k) v[k] = u[k] / rho;
    }
    throw ConvergenceError("perron: no convergence within max_iter", residual, opts.max_iter);
}

PerronData perron(const CurveMatrix& m, double tol, long max_iter) {
    PerronOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;
    return perron(m, opts);
}

std::pair<double, double> column_sum_bounds(const CurveMatrix& m) {
    std::vector<BigInt> sums = m.column_sums();
    BigInt lo = sums.front(), hi = sums.front();
    for (const BigInt& s : sums) {
        if (s < lo) lo = s;
        if (s > hi) hi = s;
    }
    return {to_double(lo), to_double(hi)};
}

std::pair<double, double> spectrum_2x2(const CurveMatrix& m) {
    if (m.dim() != 2) throw DimensionError("spectrum_2x2: matrix must be 2x2");
    BigInt tr = m.at(0, 0) + m.at(1, 1);
    BigInt det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    double t = to_double(tr), d = to_double(det);
    double disc = t * t - 4.0 * d;
    if (disc < 0) throw std::domain_error("spectrum_2x2: complex eigenvalues");
    double s = std::sqrt(disc);
    return {(t + s) / 2.0, (t - s) / 2.0};
}

}  // namespace necklace
