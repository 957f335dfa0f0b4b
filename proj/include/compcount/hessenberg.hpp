#pragma once

// Exact linear algebra on upper Hessenberg-Toeplitz matrices
//
//       [ p1  p2  p3 ... pn   ]
//       [ -1  p1  p2 ... pn-1 ]
//   P = [  0  -1  p1 ... pn-2 ]
//       [ ...                 ]
//       [  0   0 ... -1  p1   ]
//
// plus a dense fraction-free determinant used as an independent oracle.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "compcount/alphabet.hpp"
#include "compcount/count.hpp"
#include "compcount/guards.hpp"
#include "compcount/polynomial.hpp"
#include "compcount/recurrence.hpp"

namespace compcount {

/// Row-major dense square-or-rectangular matrix of exact integers.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    /// Throws DomainError on ragged input.
    static DenseMatrix from_rows(const std::vector<std::vector<SignedCount>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    // 0-based.
    SignedCount& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const SignedCount& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SignedCount> data_;
};

/// Grid text: one row per line, entries separated by single spaces.
std::string format_grid(const DenseMatrix& m);
/// Inverse of format_grid; tolerates extra whitespace and blank lines.
/// Throws ParseError naming the bad token or ragged row.
DenseMatrix parse_grid(std::string_view text);

/// Upper Hessenberg-Toeplitz matrix with subdiagonal -1, stored as its first
/// row p_1..p_n.
class HessMatrix {
public:
    /// Order is band.size(); must be >= 1.
    explicit HessMatrix(std::vector<SignedCount> band);

    std::size_t order() const { return band_.size(); }
    /// p_d, 1 <= d <= order().
    const SignedCount& band(std::size_t d) const { return band_.at(d - 1); }
    const std::vector<SignedCount>& band_values() const { return band_; }

    /// 1-based (i, j): p_{j-i+1} for j >= i, -1 for i = j + 1, else 0.
    SignedCount entry(std::size_t i, std::size_t j) const;
    DenseMatrix dense() const;

    friend bool operator==(const HessMatrix&, const HessMatrix&) = default;

private:
    std::vector<SignedCount> band_;
};

/// Strictly increasing 1-based row/column indices to delete.
class IndexSet {
public:
    IndexSet() = default;
    /// Throws IndexOutOfRange if any index < 1, DomainError if not strictly
    /// increasing.
    explicit IndexSet(std::vector<std::size_t> indices);

    const std::vector<std::size_t>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    /// Throws IndexOutOfRange if any index exceeds n.
    void check_within(std::size_t n) const;

private:
    std::vector<std::size_t> indices_;
};

/// P_n for the alphabet: q_i on the diagonal j - i = m_i - 1.
HessMatrix build_matrix(const PartAlphabet& alphabet, std::int64_t n);

/// Determinant by expansion along the last column:
/// D_m = sum_{i=1}^{m} p_{m-i+1} D_{i-1}, D_0 = 1. O(n^2), any band values.
SignedCount det_hessenberg(const HessMatrix& m);

/// Bareiss fraction-free elimination with row pivoting. Throws DomainError
/// for non-square input; the 0x0 determinant is 1.
SignedCount det_bareiss(DenseMatrix m);

/// Determinant of the submatrix keeping the rows/columns not in `deleted`.
SignedCount principal_minor(const HessMatrix& m, const IndexSet& deleted);

/// Block product a_{i_1} a_{i_2 - i_1} ... a_{n - i_k + 1} over the
/// alphabet's sequence; equals principal_minor of build_matrix(alphabet, n).
Count minor_product_formula(const PartAlphabet& alphabet, std::int64_t n, const IndexSet& deleted);

/// Sum of all principal minors of order r, by explicit subset enumeration.
/// Throws GuardExceeded if the order of m exceeds guards.subsets.
SignedCount minor_sum_subsets(const HessMatrix& m, std::int64_t r, Guards guards = Guards::from_environment());
/// Same over an arbitrary dense square matrix.
SignedCount minor_sum_subsets(const DenseMatrix& m, std::int64_t r, Guards guards = Guards::from_environment());

/// S_{n-k} of P_n as the (k+1)-fold convolution of b_j = a_{j+1},
/// evaluated at n - k. `sequence` must hold a_1..a_{n-k+1} at least.
Count minor_sum_convolution(const SequencePrefix& sequence, std::int64_t n, std::int64_t k);
Count minor_sum_convolution(const PartAlphabet& alphabet, std::int64_t n, std::int64_t k);

/// det(lambda I - P), monic of degree n, by the Hessenberg
/// leading-principal-submatrix recurrence.
IntPolynomial charpoly(const HessMatrix& m);

} // namespace compcount
