#include "necklace/twist.hpp"

#include "necklace/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace necklace {

CurveMatrix elementary_twist_matrix(CurveKind kind, long index, long exponent,
                                    const IncidenceMap& inc) {
    if (index < 1 || index > inc.K()) {
        throw DimensionError("elementary_twist_matrix: index out of range");
    }
    if (exponent < 1) {
        throw std::invalid_argument("elementary_twist_matrix: exponent must be >= 1");
    }
    CurveMatrix m = CurveMatrix::identity(inc.K());
    if (kind == CurveKind::c) {
        for (long j : inc.d_neighbors_of_c(index)) {
            m.add_at(m.c_index(index), m.d_index(j), BigInt(exponent * inc.weight(index, j)));
        }
    } else {
        for (long i : inc.c_neighbors_of_d(index)) {
            m.add_at(m.d_index(index), m.c_index(i), BigInt(exponent * inc.weight(i, index)));
        }
    }
    return m;
}

CurveMatrix chi_matrix(const ChiPermutation& chi, long power) {
    CurveMatrix m(chi.K);
    for (long i = 1; i <= chi.K; ++i) {
        long t = chi.apply(i, power);
        m.add_at(m.c_index(i), m.c_index(t), BigInt(1));
        m.add_at(m.d_index(i), m.d_index(t), BigInt(1));
    }
    return m;
}

namespace {

CurveMatrix letter_matrix(const WordLetter& letter, const IncidenceMap& inc,
                          const ChiPermutation* chi) {
    if (const auto* t = std::get_if<TwistLetter>(&letter)) {
        return elementary_twist_matrix(t->kind, t->index, t->exponent, inc);
    }
    const auto& x = std::get<ChiLetter>(letter);
    if (chi == nullptr) throw std::invalid_argument("word contains chi but no rotation given");
    return chi_matrix(*chi, x.power);
}

CurveMatrix compose_impl(const TwistWord& word, const IncidenceMap& inc,
                         const ChiPermutation* chi) {
    CurveMatrix m = CurveMatrix::identity(inc.K());
    for (const WordLetter& letter : word.letters) {
        m = letter_matrix(letter, inc, chi) * m;  // later letters multiply on the left
    }
    return m;
}

}  // namespace

CurveMatrix compose(const TwistWord& word, const IncidenceMap& inc, const ChiPermutation& chi) {
    return compose_impl(word, inc, &chi);
}

CurveMatrix compose(const TwistWord& word, const IncidenceMap& inc) {
    return compose_impl(word, inc, nullptr);
}

namespace {

TwistWord invert_word(const TwistWord& word) {
    TwistWord out;
    out.letters.reserve(word.letters.size());
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        if (const auto* x = std::get_if<ChiLetter>(&*it)) {
            out.letters.push_back(ChiLetter{-x->power});
        } else {
            out.letters.push_back(*it);
        }
    }
    return out;
}

}  // namespace

TwistWord lifted_full_word(const NecklaceConfig& cfg, long N, Side side) {
    cfg.validate();
    TwistWord word;
    for (long i = 1; i <= cfg.K; ++i) word.letters.push_back(TwistLetter{CurveKind::c, i, N});
    for (long j = 1; j <= cfg.K; ++j) word.letters.push_back(TwistLetter{CurveKind::d, j, N});
    return side == Side::unstable ? word : invert_word(word);
}

TwistWord necklace_root_word(const NecklaceConfig& cfg, long N, Side side) {
    cfg.validate();
    TwistWord word;
    for (long i = 1; i <= cfg.m; ++i) word.letters.push_back(TwistLetter{CurveKind::c, i, N});
    for (long j = 1; j <= cfg.m; ++j) word.letters.push_back(TwistLetter{CurveKind::d, j, N});
    word.letters.push_back(ChiLetter{1});
    return side == Side::unstable ? word : invert_word(word);
}

CurveMatrix base_curve_matrix(const FillingPairConfig& cfg) {
    cfg.validate();
    BigInt t(2 * cfg.r * cfg.N);
    CurveMatrix m(1);
    m.add_at(0, 0, BigInt(1));
    m.add_at(0, 1, t);
    m.add_at(1, 0, t);
    m.add_at(1, 1, t * t + 1);
    return m;
}

CurveMatrix base_curve_matrix_stable(const FillingPairConfig& cfg) {
    cfg.validate();
    BigInt t(2 * cfg.r * cfg.N);
    CurveMatrix m(1);
    m.add_at(0, 0, t * t + 1);
    m.add_at(0, 1, t);
    m.add_at(1, 0, t);
    m.add_at(1, 1, BigInt(1));
    return m;
}

CurveMatrix lifted_full_matrix(const NecklaceConfig& cfg, long r, long N, Side side) {
    IncidenceMap inc = necklace_incidence(cfg, r);
    return compose(lifted_full_word(cfg, N, side), inc, chi_permutation(cfg));
}

CurveMatrix necklace_root_matrix(const NecklaceConfig& cfg, long r, long N, Side side) {
    IncidenceMap inc = necklace_incidence(cfg, r);
    return compose(necklace_root_word(cfg, N, side), inc, chi_permutation(cfg));
}

CurveMatrix psi_matrix(const NecklaceConfig& cfg, long r, long N, Side side) {
    return necklace_root_matrix(cfg, r, N, side).pow(cfg.m);
}

namespace {

// Directed graph of the nonzero pattern.
std::vector<std::vector<long>> adjacency(const CurveMatrix& m) {
    std::vector<std::vector<long>> adj(static_cast<std::size_t>(m.dim()));
    for (long r = 0; r < m.dim(); ++r) {
        for (const auto& [c, v] : m.row(r)) {
            if (v != 0) adj[static_cast<std::size_t>(r)].push_back(c);
        }
    }
    return adj;
}

bool strongly_connected(const std::vector<std::vector<long>>& adj) {
    const long n = static_cast<long>(adj.size());
    std::vector<std::vector<long>> radj(static_cast<std::size_t>(n));
    for (long u = 0; u < n; ++u) {
        for (long v : adj[static_cast<std::size_t>(u)]) {
            radj[static_cast<std::size_t>(v)].push_back(u);
        }
    }
    auto reaches_all = [n](const std::vector<std::vector<long>>& g) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<long> stack{0};
        seen[0] = 1;
        long count = 0;
        while (!stack.empty()) {
            long u = stack.back();
            stack.pop_back();
            ++count;
            for (long v : g[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
            }
        }
        return count == n;
    };
    return reaches_all(adj) && reaches_all(radj);
}

// gcd of closed-walk lengths through vertex 0, via BFS level differences.
long graph_period(const std::vector<std::vector<long>>& adj) {
    const long n = static_cast<long>(adj.size());
    std::vector<long> level(static_cast<std::size_t>(n), -1);
    std::vector<long> queue{0};
    level[0] = 0;
    long g = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        long u = queue[qi];
        for (long v : adj[static_cast<std::size_t>(u)]) {
            if (level[static_cast<std::size_t>(v)] < 0) {
                level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            } else {
                long diff = level[static_cast<std::size_t>(u)] + 1 - level[static_cast<std::size_t>(v)];
                g = std::gcd(g, std::abs(diff));
            }
        }
    }
    return g;
}

// Boolean matrix power check for small explicit bounds.
bool positive_power_within(const std::vector<std::vector<long>>& adj, long max_power) {
    const long n = static_cast<long>(adj.size());
    const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
    using BitRows = std::vector<std::vector<std::uint64_t>>;
    auto all_set = [&](const BitRows& b) {
        for (const auto& row : b) {
            long remaining = n;
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t expect =
                    remaining >= 64 ? ~0ull : ((1ull << static_cast<unsigned>(remaining)) - 1ull);
                if (row[w] != expect) return false;
                remaining -= 64;
            }
        }
        return true;
    };
    BitRows base(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));
    for (long u = 0; u < n; ++u) {
        for (long v : adj[static_cast<std::size_t>(u)]) {
            base[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) / 64] |=
                1ull << (static_cast<unsigned>(v) % 64);
        }
    }
    BitRows acc = base;
    for (long p = 1; p <= max_power; ++p) {
        if (all_set(acc)) return true;
        if (p == max_power) break;
        BitRows next(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));
        for (long u = 0; u < n; ++u) {
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t bits = acc[static_cast<std::size_t>(u)][w];
                while (bits) {
                    unsigned bit = static_cast<unsigned>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    long k = static_cast<long>(w) * 64 + static_cast<long>(bit);
                    for (std::size_t w2 = 0; w2 < words; ++w2) {
                        next[static_cast<std::size_t>(u)][w2] |= base[static_cast<std::size_t>(k)][w2];
                    }
                }
            }
        }
        acc = std::move(next);
    }
    return false;
}

}  // namespace

bool is_primitive(const CurveMatrix& m, long max_power) {
    if (!m.nonnegative()) throw std::invalid_argument("is_primitive: matrix must be nonnegative");
    const long n = m.dim();
    const long wielandt = (n - 1) * (n - 1) + 1;
    if (max_power <= 0) max_power = n * n;
    auto adj = adjacency(m);
    for (const auto& row : adj) {
        if (row.empty()) return false;
    }
    if (max_power >= wielandt) {
        // Some power <= Wielandt's bound is positive iff the pattern is
        // irreducible and aperiodic.
        return strongly_connected(adj) && graph_period(adj) == 1;
    }
    return positive_power_within(adj, max_power);
}

}  // namespace necklace
