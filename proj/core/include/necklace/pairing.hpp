#pragma once

#include "necklace/cover.hpp"

#include <vector>

namespace necklace {

/// Nonnegative weights indexed by lifted curves of one family.
using WeightVector = std::vector<double>;

struct AveragedWeights {
    double a_sum = 0.0;  // total weight on the c-lifts
    double b_sum = 0.0;  // total weight on the d-lifts
};

/// Intersection pairing in curve coordinates: sum over incident pairs (i, j)
/// of upsilon(c_i) * omega(d_j) * i(c_i, d_j).  The intersection multiplicity
/// is part of the sum.
double pairing_weights(const WeightVector& upsilon, const WeightVector& omega,
                       const IncidenceMap& inc);

/// Pushes d-side weights onto the c-side: out(i) = sum_j omega(j) * i(c_i, d_j),
/// so that pairing_weights(u, w, inc) == sum_i u(i) * reweight(w, inc)(i).
WeightVector reweight(const WeightVector& omega, const IncidenceMap& inc);

/// Normalizes a surface-level pairing by the covering degree.
double solenoid_pairing(double surface_value, long degree);

/// Block sums of a full weight vector (c-block then d-block, each of size K).
AveragedWeights averaged_vector(const std::vector<double>& full, long K);

}  // namespace necklace
