#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace necklace {

/// A mod-2 first homology class of a closed genus-g surface, written in a
/// fixed symplectic basis (a_1, b_1, ..., a_g, b_g).  Coordinate 2k is the
/// a_{k+1} component, coordinate 2k+1 the b_{k+1} component.
class HomologyClass {
public:
    HomologyClass() = default;
    explicit HomologyClass(std::vector<std::uint8_t> coords);

    /// Class with a single basis coordinate set, e.g. a_k or b_k.
    static HomologyClass basis(long genus, long coordinate);
    static HomologyClass zero(long genus);

    /// Parses a bit-string like "1000" (leftmost character = a_1).
    static HomologyClass from_bit_string(std::string_view bits);

    long genus() const { return static_cast<long>(coords_.size()) / 2; }
    long size() const { return static_cast<long>(coords_.size()); }
    bool is_zero() const;
    std::uint8_t coord(long k) const { return coords_[static_cast<std::size_t>(k)]; }

    HomologyClass operator+(const HomologyClass& other) const;  // mod-2 sum
    bool operator==(const HomologyClass& other) const { return coords_ == other.coords_; }

    std::string to_bit_string() const;

private:
    std::vector<std::uint8_t> coords_;
};

/// Symplectic mod-2 intersection pairing: sum_k (x_{a_k} y_{b_k} + x_{b_k} y_{a_k}).
int mod2_pairing(const HomologyClass& x, const HomologyClass& y);

/// Whether the preimage of c in the double cover dual to gamma is connected,
/// i.e. whether c crosses gamma an odd number of times mod 2.
/// gamma must be nonzero (a separating or trivial class defines no such cover).
bool preimage_is_connected(const HomologyClass& c, const HomologyClass& gamma);

struct InterlacingPair {
    HomologyClass alpha;
    HomologyClass beta;
};

/// Lexicographically first pair (alpha, beta) of nonzero classes with
///   <c,alpha> = 1, <d,alpha> = 0, <d,beta> = 1, <c,beta> = 0,
/// or nullopt if none exists.  The search runs over all 2^{2g}-1 nonzero
/// classes in bit-string order.
std::optional<InterlacingPair> find_interlacing(const HomologyClass& c,
                                                const HomologyClass& d);

}  // namespace necklace
