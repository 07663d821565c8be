#include "necklace/homology.hpp"

#include "necklace/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace necklace {

HomologyClass::HomologyClass(std::vector<std::uint8_t> coords) : coords_(std::move(coords)) {
    if (coords_.empty() || coords_.size() % 2 != 0) {
        throw DimensionError("homology class needs an even, positive number of coordinates");
    }
    for (auto& c : coords_) c = static_cast<std::uint8_t>(c & 1u);
}

HomologyClass HomologyClass::basis(long genus, long coordinate) {
    if (genus < 1 || coordinate < 0 || coordinate >= 2 * genus) {
        throw DimensionError("basis coordinate out of range");
    }
    std::vector<std::uint8_t> v(static_cast<std::size_t>(2 * genus), 0);
    v[static_cast<std::size_t>(coordinate)] = 1;
    return HomologyClass(std::move(v));
}

HomologyClass HomologyClass::zero(long genus) {
    if (genus < 1) throw DimensionError("genus must be positive");
    HomologyClass h;
    h.coords_.assign(static_cast<std::size_t>(2 * genus), 0);
    return h;
}

HomologyClass HomologyClass::from_bit_string(std::string_view bits) {
    if (bits.empty() || bits.size() % 2 != 0) {
        throw ParseError("bit-string length must be even and positive");
    }
    std::vector<std::uint8_t> v;
    v.reserve(bits.size());
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw ParseError("bit-string may contain only 0 and 1");
        v.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return HomologyClass(std::move(v));
}

bool HomologyClass::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::uint8_t c) { return c == 0; });
}

HomologyClass HomologyClass::operator+(const HomologyClass& other) const {
    if (coords_.size() != other.coords_.size()) {
        throw DimensionError("homology classes live on different surfaces");
    }
    std::vector<std::uint8_t> v(coords_.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = static_cast<std::uint8_t>(coords_[k] ^ other.coords_[k]);
    }
    return HomologyClass(std::move(v));
}

std::string HomologyClass::to_bit_string() const {
    std::string s;
    s.reserve(coords_.size());
    for (auto c : coords_) s.push_back(static_cast<char>('0' + c));
    return s;
}

int mod2_pairing(const HomologyClass& x, const HomologyClass& y) {
    if (x.size() != y.size()) {
        throw DimensionError("mod2_pairing: classes live on different surfaces");
    }
    int acc = 0;
    for (long k = 0; k < x.genus(); ++k) {
        acc ^= x.coord(2 * k) & y.coord(2 * k + 1);
        acc ^= x.coord(2 * k + 1) & y.coord(2 * k);
    }
    return acc;
}

bool preimage_is_connected(const HomologyClass& c, const HomologyClass& gamma) {
    if (gamma.is_zero()) {
        throw InvalidCoverError("gamma must be nonseparating (nonzero mod-2 class)");
    }
    return mod2_pairing(c, gamma) == 1;
}

namespace {

// All nonzero classes of the given size in bit-string order (the bit-string
// read as a binary number, leftmost character most significant).
HomologyClass class_from_rank(unsigned long rank, long size) {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(size), 0);
    for (long k = size - 1; k >= 0; --k) {
        v[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(rank & 1u);
        rank >>= 1u;
    }
    return HomologyClass(std::move(v));
}

}  // namespace

std::optional<InterlacingPair> find_interlacing(const HomologyClass& c,
                                                const HomologyClass& d) {
    if (c.size() != d.size()) {
        throw DimensionError("find_interlacing: classes live on different surfaces");
    }
    if (c.is_zero() || d.is_zero()) {
        throw InvalidCurveError("find_interlacing: input classes must be nonzero");
    }
    const long size = c.size();
    const unsigned long count = (1ul << static_cast<unsigned long>(size)) - 1ul;

    std::optional<HomologyClass> alpha, beta;
    for (unsigned long rank = 1; rank <= count; ++rank) {
        HomologyClass w = class_from_rank(rank, size);
        if (!alpha && mod2_pairing(c, w) == 1 && mod2_pairing(d, w) == 0) alpha = w;
        if (!beta && mod2_pairing(d, w) == 1 && mod2_pairing(c, w) == 0) beta = w;
        if (alpha && beta) break;
    }
    if (!alpha || !beta) return std::nullopt;
    return InterlacingPair{*alpha, *beta};
}

}  // namespace necklace
