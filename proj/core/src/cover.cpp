#include "necklace/cover.hpp"

#include "necklace/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace necklace {

void FillingPairConfig::validate() const {
    if (r < 1) throw std::invalid_argument("FillingPairConfig: r must be >= 1");
    if (N < 1) throw std::invalid_argument("FillingPairConfig: N must be >= 1");
    if (n < 2) throw std::invalid_argument("FillingPairConfig: n must be >= 2");
}

NecklaceConfig NecklaceConfig::make(const FillingPairConfig& base, long m) {
    base.validate();
    return make(m, base.n);
}

NecklaceConfig NecklaceConfig::make(long m, long n) {
    NecklaceConfig cfg;
    cfg.m = m;
    cfg.n = n;
    cfg.K = m * m * n;
    cfg.shift = m;
    cfg.validate();
    return cfg;
}

void NecklaceConfig::validate() const {
    if (m < 2) throw std::invalid_argument("NecklaceConfig: m must be >= 2");
    if (n < 2) throw std::invalid_argument("NecklaceConfig: n must be >= 2");
    if (K != m * m * n) throw std::invalid_argument("NecklaceConfig: K must equal m^2 n");
    if (shift != m || shift < 1 || shift >= K) {
        throw std::invalid_argument("NecklaceConfig: shift must equal m, 1 <= shift < K");
    }
}

IncidenceMap::IncidenceMap(long K, long r, std::array<long, 2> offsets)
    : K_(K), r_(r), offsets_(offsets) {
    if (K_ < 1) throw std::invalid_argument("IncidenceMap: K must be >= 1");
    if (r_ < 1) throw std::invalid_argument("IncidenceMap: r must be >= 1");
}

long IncidenceMap::wrap(long i) const {
    long z = (i - 1) % K_;
    if (z < 0) z += K_;
    return z + 1;
}

long IncidenceMap::weight(long i, long j) const {
    if (i < 1 || i > K_ || j < 1 || j > K_) throw DimensionError("IncidenceMap: index out of range");
    for (long o : offsets_) {
        if (wrap(i + o) == j) return r_;
    }
    return 0;
}

std::vector<long> IncidenceMap::d_neighbors_of_c(long i) const {
    if (i < 1 || i > K_) throw DimensionError("IncidenceMap: index out of range");
    std::vector<long> out;
    for (long o : offsets_) {
        long j = wrap(i + o);
        bool dup = false;
        for (long seen : out) dup = dup || (seen == j);
        if (!dup) out.push_back(j);
    }
    return out;
}

std::vector<long> IncidenceMap::c_neighbors_of_d(long j) const {
    if (j < 1 || j > K_) throw DimensionError("IncidenceMap: index out of range");
    std::vector<long> out;
    for (long o : offsets_) {
        long i = wrap(j - o);
        bool dup = false;
        for (long seen : out) dup = dup || (seen == i);
        if (!dup) out.push_back(i);
    }
    return out;
}

long IncidenceMap::total_mass() const {
    long mass = 0;
    for (long i = 1; i <= K_; ++i) {
        mass += r_ * static_cast<long>(d_neighbors_of_c(i).size());
    }
    return mass;
}

long ChiPermutation::apply(long i, long power) const {
    long z = (i - 1 + power * shift) % K;
    if (z < 0) z += K;
    return z + 1;
}

long ChiPermutation::order() const { return K / std::gcd(K, shift); }

ChiPermutation chi_permutation(const NecklaceConfig& cfg) {
    cfg.validate();
    return ChiPermutation{cfg.K, cfg.shift};
}

IncidenceMap necklace_incidence(const NecklaceConfig& cfg, long r) {
    cfg.validate();
    return IncidenceMap(cfg.K, r);
}

}  // namespace necklace
