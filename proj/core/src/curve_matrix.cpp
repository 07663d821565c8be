#include "necklace/curve_matrix.hpp"

#include "necklace/errors.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace necklace {

CurveMatrix::CurveMatrix(long curve_count) : K_(curve_count) {
    if (K_ < 1) throw DimensionError("CurveMatrix: curve count must be >= 1");
    rows_.assign(static_cast<std::size_t>(dim()), Row{});
}

CurveMatrix CurveMatrix::identity(long curve_count) {
    CurveMatrix m(curve_count);
    for (long i = 0; i < m.dim(); ++i) {
        m.rows_[static_cast<std::size_t>(i)].emplace_back(i, BigInt(1));
    }
    return m;
}

std::string CurveMatrix::label(long flat_index) const {
    if (flat_index < 0 || flat_index >= dim()) throw DimensionError("label index out of range");
    if (flat_index < K_) return "c_" + std::to_string(flat_index + 1);
    return "d_" + std::to_string(flat_index - K_ + 1);
}

std::vector<std::string> CurveMatrix::labels() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(dim()));
    for (long i = 0; i < dim(); ++i) out.push_back(label(i));
    return out;
}

BigInt CurveMatrix::at(long r, long c) const {
    if (r < 0 || r >= dim() || c < 0 || c >= dim()) throw DimensionError("entry index out of range");
    const Row& row = rows_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, long col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return BigInt(0);
}

void CurveMatrix::add_at(long r, long c, const BigInt& v) {
    if (r < 0 || r >= dim() || c < 0 || c >= dim()) throw DimensionError("entry index out of range");
    if (v == 0) return;
    Row& row = rows_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, long col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    } else {
        row.emplace(it, c, v);
    }
}

long CurveMatrix::nonzero_count() const {
    long n = 0;
    for (const Row& row : rows_) n += static_cast<long>(row.size());
    return n;
}

bool CurveMatrix::nonnegative() const {
    for (const Row& row : rows_) {
        for (const auto& [c, v] : row) {
            if (v < 0) return false;
        }
    }
    return true;
}

CurveMatrix CurveMatrix::operator*(const CurveMatrix& rhs) const {
    if (dim() != rhs.dim()) throw DimensionError("matrix product: dimension mismatch");
    CurveMatrix out(K_);
    std::vector<BigInt> acc(static_cast<std::size_t>(dim()), BigInt(0));
    std::vector<long> touched;
    for (long r = 0; r < dim(); ++r) {
        touched.clear();
        for (const auto& [k, v] : rows_[static_cast<std::size_t>(r)]) {
            for (const auto& [c, w] : rhs.rows_[static_cast<std::size_t>(k)]) {
                if (acc[static_cast<std::size_t>(c)] == 0) touched.push_back(c);
                acc[static_cast<std::size_t>(c)] += v * w;
            }
        }
        std::sort(touched.begin(), touched.end());
        Row& row = out.rows_[static_cast<std::size_t>(r)];
        for (long c : touched) {
            if (acc[static_cast<std::size_t>(c)] != 0) {
                row.emplace_back(c, acc[static_cast<std::size_t>(c)]);
            }
            acc[static_cast<std::size_t>(c)] = 0;
        }
    }
    return out;
}

CurveMatrix CurveMatrix::pow(long e) const {
    if (e < 0) throw std::invalid_argument("matrix power: exponent must be >= 0");
    CurveMatrix result = identity(K_);
    CurveMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

CurveMatrix CurveMatrix::transpose() const {
    CurveMatrix out(K_);
    for (long r = 0; r < dim(); ++r) {
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)]) {
            out.rows_[static_cast<std::size_t>(c)].emplace_back(r, v);
        }
    }
    return out;
}

bool CurveMatrix::operator==(const CurveMatrix& rhs) const {
    return K_ == rhs.K_ && rows_ == rhs.rows_;
}

std::vector<BigInt> CurveMatrix::column_sums() const {
    std::vector<BigInt> sums(static_cast<std::size_t>(dim()), BigInt(0));
    for (const Row& row : rows_) {
        for (const auto& [c, v] : row) sums[static_cast<std::size_t>(c)] += v;
    }
    return sums;
}

std::vector<BigInt> CurveMatrix::row_sums() const {
    std::vector<BigInt> sums(static_cast<std::size_t>(dim()), BigInt(0));
    for (long r = 0; r < dim(); ++r) {
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)]) {
            sums[static_cast<std::size_t>(r)] += v;
        }
    }
    return sums;
}

BigInt CurveMatrix::determinant() const {
    const long n = dim();
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(0)));
    for (long r = 0; r < n; ++r) {
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)]) {
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        }
    }
    BigInt prev(1);
    int sign = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            long pivot = -1;
            for (long r = k + 1; r < n; ++r) {
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return BigInt(0);
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        for (long r = k + 1; r < n; ++r) {
            for (long c = k + 1; c < n; ++c) {
                BigInt num = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                                 a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                             a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] *
                                 a[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                mpz_divexact(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get_mpz_t(),
                             num.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = 0;
        }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    BigInt det = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign > 0 ? det : BigInt(-det);
}

void CurveMatrix::apply(const std::vector<double>& x, std::vector<double>& y) const {
    if (static_cast<long>(x.size()) != dim()) throw DimensionError("apply: vector size mismatch");
    y.assign(static_cast<std::size_t>(dim()), 0.0);
    for (long r = 0; r < dim(); ++r) {
        double acc = 0.0;
        for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)]) {
            acc += to_double(v) * x[static_cast<std::size_t>(c)];
        }
        y[static_cast<std::size_t>(r)] = acc;
    }
}

void write_matrix(const CurveMatrix& m, std::ostream& out) {
    out << m.dim();
    for (const std::string& lbl : m.labels()) out << ' ' << lbl;
    out << '\n';
    for (long r = 0; r < m.dim(); ++r) {
        for (const auto& [c, v] : m.row(r)) {
            out << (r + 1) << ' ' << (c + 1) << ' ' << v.get_str() << '\n';
        }
    }
}

void write_matrix_file(const CurveMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_matrix(m, out);
}

CurveMatrix read_matrix(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("matrix file: missing header line");
    std::istringstream hs(header);
    long dim = 0;
    if (!(hs >> dim) || dim < 2 || dim % 2 != 0) {
        throw ParseError("matrix file: header must start with an even dimension >= 2");
    }
    std::vector<std::string> labels;
    std::string lbl;
    while (hs >> lbl) labels.push_back(lbl);
    if (!labels.empty() && static_cast<long>(labels.size()) != dim) {
        throw ParseError("matrix file: label count does not match dimension");
    }
    CurveMatrix m(dim / 2);
    std::string line;
    long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long r = 0, c = 0;
        std::string value;
        if (!(ls >> r >> c >> value)) {
            throw ParseError("matrix file: bad triple at line " + std::to_string(lineno));
        }
        std::string trailing;
        if (ls >> trailing) {
            throw ParseError("matrix file: trailing tokens at line " + std::to_string(lineno));
        }
        if (r < 1 || r > dim || c < 1 || c > dim) {
            throw ParseError("matrix file: index out of range at line " + std::to_string(lineno));
        }
        BigInt v;
        try {
            v = BigInt(value);
        } catch (const std::invalid_argument&) {
            throw ParseError("matrix file: bad integer at line " + std::to_string(lineno));
        }
        m.add_at(r - 1, c - 1, v);
    }
    return m;
}

CurveMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    return read_matrix(in);
}

}  // namespace necklace
