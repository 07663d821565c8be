#pragma once

#include "necklace/cover.hpp"
#include "necklace/curve_matrix.hpp"

#include <variant>
#include <vector>

namespace necklace {

enum class CurveKind { c, d };
enum class Side { unstable, stable };

/// One Dehn twist in a composition.  Positive twists act on the c-family and
/// negative twists on the d-family; both become nonnegative unipotent factors
/// in curve coordinates, so only the kind and the (positive) exponent are kept.
struct TwistLetter {
    CurveKind kind;
    long index;     // 1-based lift index
    long exponent;  // >= 1
};

/// A power of the necklace rotation chi.
struct ChiLetter {
    long power;  // any nonzero integer; negative for the inverse rotation
};

using WordLetter = std::variant<TwistLetter, ChiLetter>;

/// Letters in application order: letters[0] acts first.  The matrix of the
/// word is the product of the letter matrices with later letters on the left.
struct TwistWord {
    std::vector<WordLetter> letters;
};

/// Identity plus, for kind c: row c_i gains exponent * i(c_i, d_j) in column
/// d_j over the incident j; dually for kind d.
CurveMatrix elementary_twist_matrix(CurveKind kind, long index, long exponent,
                                    const IncidenceMap& inc);

/// Weight-update matrix of chi^power: (P w)(x_i) = w(x_{i + power*shift}),
/// simultaneously on c- and d-labels.  This orientation is the one under
/// which the Perron entries follow the geometric progression along
/// chi-orbits (a_{m+im} = xi^{i-1} a_{2m}).
CurveMatrix chi_matrix(const ChiPermutation& chi, long power = 1);

CurveMatrix compose(const TwistWord& word, const IncidenceMap& inc,
                    const ChiPermutation& chi);
/// Word without chi letters (base-surface compositions).
CurveMatrix compose(const TwistWord& word, const IncidenceMap& inc);

/// Words of the standard constructions, exposed for tests.
TwistWord lifted_full_word(const NecklaceConfig& cfg, long N, Side side = Side::unstable);
TwistWord necklace_root_word(const NecklaceConfig& cfg, long N, Side side = Side::unstable);

/// The 2x2 curve matrix of the downstairs map: [[1, 2rN], [2rN, (2rN)^2+1]].
CurveMatrix base_curve_matrix(const FillingPairConfig& cfg);
/// Curve matrix of the inverse downstairs map: [[(2rN)^2+1, 2rN], [2rN, 1]].
CurveMatrix base_curve_matrix_stable(const FillingPairConfig& cfg);

/// Full lift of the downstairs map: all K c-twists (exponent N), then all K
/// d-twists (exponent N).  Shares its Perron root with base_curve_matrix.
CurveMatrix lifted_full_matrix(const NecklaceConfig& cfg, long r, long N,
                               Side side = Side::unstable);

/// The necklace root: c-twists 1..m, d-twists 1..m, then chi.  The stable
/// side is the inverse word (chi^{-1} first, then d-twists, then c-twists).
CurveMatrix necklace_root_matrix(const NecklaceConfig& cfg, long r, long N,
                                 Side side = Side::unstable);

/// m-th power of the necklace root matrix.
CurveMatrix psi_matrix(const NecklaceConfig& cfg, long r, long N,
                       Side side = Side::unstable);

/// True iff some power <= max_power of the nonnegative matrix is entrywise
/// positive; max_power <= 0 means the default dim^2.  With the default bound
/// this is exactly primitivity (Wielandt's index bound (dim-1)^2 + 1 < dim^2),
/// decided graph-theoretically; small explicit bounds are checked by direct
/// boolean powers.
bool is_primitive(const CurveMatrix& m, long max_power = 0);

}  // namespace necklace
