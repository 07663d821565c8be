#include "necklace/pairing.hpp"

#include "necklace/errors.hpp"

#include <stdexcept>

namespace necklace {

double pairing_weights(const WeightVector& upsilon, const WeightVector& omega,
                       const IncidenceMap& inc) {
    if (static_cast<long>(upsilon.size()) != inc.K() ||
        static_cast<long>(omega.size()) != inc.K()) {
        throw DimensionError("pairing_weights: vector sizes must equal K");
    }
    double acc = 0.0;
    for (long i = 1; i <= inc.K(); ++i) {
        for (long j : inc.d_neighbors_of_c(i)) {
            acc += upsilon[static_cast<std::size_t>(i - 1)] *
                   omega[static_cast<std::size_t>(j - 1)] *
                   static_cast<double>(inc.weight(i, j));
        }
    }
    return acc;
}

WeightVector reweight(const WeightVector& omega, const IncidenceMap& inc) {
    if (static_cast<long>(omega.size()) != inc.K()) {
        throw DimensionError("reweight: vector size must equal K");
    }
    WeightVector out(static_cast<std::size_t>(inc.K()), 0.0);
    for (long i = 1; i <= inc.K(); ++i) {
        double acc = 0.0;
        for (long j : inc.d_neighbors_of_c(i)) {
            acc += omega[static_cast<std::size_t>(j - 1)] * static_cast<double>(inc.weight(i, j));
        }
        out[static_cast<std::size_t>(i - 1)] = acc;
    }
    return out;
}

double solenoid_pairing(double surface_value, long degree) {
    if (degree < 1) throw std::invalid_argument("solenoid_pairing: degree must be >= 1");
    return surface_value / static_cast<double>(degree);
}

AveragedWeights averaged_vector(const std::vector<double>& full, long K) {
    if (K < 1 || static_cast<long>(full.size()) != 2 * K) {
        throw DimensionError("averaged_vector: need a labeled vector of size 2K");
    }
    AveragedWeights out;
    for (long i = 0; i < K; ++i) out.a_sum += full[static_cast<std::size_t>(i)];
    for (long j = K; j < 2 * K; ++j) out.b_sum += full[static_cast<std::size_t>(j)];
    return out;
}

}  // namespace necklace
