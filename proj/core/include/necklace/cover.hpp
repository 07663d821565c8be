#pragma once

#include <array>
#include <vector>

namespace necklace {

/// Base datum: a filling pair c, d on a surface Z with |c ∩ d| = r, the
/// downstairs map being the composition of a 2N-fold right twist about c
/// and a 2N-fold inverse twist about d, and a requested root degree n.
struct FillingPairConfig {
    long r = 1;  // geometric intersection count |c ∩ d|
    long N = 1;  // half the downstairs twist exponent
    long n = 2;  // root degree

    void validate() const;
};

/// Parameters of the m-th necklace cover used for the n-th root sequence:
/// the cover is glued from 2K copies of Z, K = m^2 n, and carries K lifts
/// of c and K lifts of d.  The rotation chi shifts lift indices by m.
struct NecklaceConfig {
    long m = 2;
    long n = 2;
    long K = 0;      // m^2 n
    long shift = 0;  // m

    static NecklaceConfig make(const FillingPairConfig& base, long m);
    static NecklaceConfig make(long m, long n);

    long cover_degree() const { return 2 * K; }
    void validate() const;
};

/// The cyclic bipartite intersection pattern of the lifted curves:
/// i(c_i, d_j) = r exactly for j in {i + o : o in offsets} mod K (1-based).
/// The canonical necklace has offsets {-1, 0}; the flipped variant {0, +1}
/// exists as a negative control.  K = 1 degenerates to the single base pair.
class IncidenceMap {
public:
    IncidenceMap(long K, long r, std::array<long, 2> offsets = {-1, 0});

    long K() const { return K_; }
    long r() const { return r_; }
    std::array<long, 2> offsets() const { return offsets_; }

    /// 1-based index wrap into 1..K.
    long wrap(long i) const;

    long weight(long i, long j) const;  // i(c_i, d_j)
    std::vector<long> d_neighbors_of_c(long i) const;
    std::vector<long> c_neighbors_of_d(long j) const;

    long total_mass() const;  // sum of all i(c_i, d_j)

private:
    long K_;
    long r_;
    std::array<long, 2> offsets_;
};

IncidenceMap necklace_incidence(const NecklaceConfig& cfg, long r);

/// The index shift i -> i + m mod K induced by the rotation chi, acting the
/// same way on c-indices and d-indices.
struct ChiPermutation {
    long K = 0;
    long shift = 0;

    long apply(long i, long power = 1) const;  // 1-based
    long order() const;
};

ChiPermutation chi_permutation(const NecklaceConfig& cfg);

}  // namespace necklace
