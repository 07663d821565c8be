#pragma once

#include "necklace/bigint.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace necklace {

/// Sparse square matrix with exact integer entries, indexed by the lifted
/// curves: rows/columns 0..K-1 are c_1..c_K, rows/columns K..2K-1 are
/// d_1..d_K.  Entries are never rounded.
class CurveMatrix {
public:
    using Row = std::vector<std::pair<long, BigInt>>;  // (col, value), sorted by col

    CurveMatrix() = default;
    explicit CurveMatrix(long curve_count);  // zero matrix of dimension 2*curve_count

    static CurveMatrix identity(long curve_count);

    long dim() const { return 2 * K_; }
    long curve_count() const { return K_; }

    /// 0-based flat indices for the lifted-curve labels (1-based i).
    long c_index(long i) const { return i - 1; }
    long d_index(long j) const { return K_ + j - 1; }

    std::string label(long flat_index) const;  // "c_i" or "d_j"
    std::vector<std::string> labels() const;

    const Row& row(long r) const { return rows_[static_cast<std::size_t>(r)]; }
    BigInt at(long r, long c) const;
    void add_at(long r, long c, const BigInt& v);

    long nonzero_count() const;
    bool nonnegative() const;

    CurveMatrix operator*(const CurveMatrix& rhs) const;
    CurveMatrix pow(long e) const;  // e >= 0
    CurveMatrix transpose() const;
    bool operator==(const CurveMatrix& rhs) const;

    std::vector<BigInt> column_sums() const;
    std::vector<BigInt> row_sums() const;

    /// Exact determinant (fraction-free Bareiss elimination with pivoting).
    BigInt determinant() const;

    /// y = M x in double precision; x.size() == dim().
    void apply(const std::vector<double>& x, std::vector<double>& y) const;

private:
    long K_ = 0;
    std::vector<Row> rows_;
};

/// Text serialization: header line with the dimension followed by the labels,
/// then one "row col value" triple per line (1-based indices, exact decimal
/// integers).
void write_matrix(const CurveMatrix& m, std::ostream& out);
void write_matrix_file(const CurveMatrix& m, const std::string& path);
CurveMatrix read_matrix(std::istream& in);
CurveMatrix read_matrix_file(const std::string& path);

}  // namespace necklace
