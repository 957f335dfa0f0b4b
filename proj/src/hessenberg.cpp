#include "compcount/hessenberg.hpp"

#include <algorithm>
#include <sstream>

#include "compcount/errors.hpp"

namespace compcount {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<SignedCount>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    DenseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::string format_grid(const DenseMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += m(r, c).get_str();
        }
        out += '\n';
    }
    return out;
}

DenseMatrix parse_grid(std::string_view text) {
    std::vector<std::vector<SignedCount>> rows;
    std::istringstream lines{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::vector<SignedCount> row;
        std::string tok;
        while (tokens >> tok) {
            SignedCount v;
            const bool digits = !tok.empty() &&
                                std::all_of(tok.begin() + (tok[0] == '-' || tok[0] == '+'), tok.end(),
                                            [](unsigned char ch) { return std::isdigit(ch); }) &&
                                tok.find_first_of("0123456789") != std::string::npos;
            if (!digits || v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
                throw ParseError("line " + std::to_string(line_no) + ": bad matrix entry '" + tok + "'");
            row.push_back(std::move(v));
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(rows.front().size()) +
                             " entries, found " + std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    return DenseMatrix::from_rows(rows);
}

HessMatrix::HessMatrix(std::vector<SignedCount> band) : band_(std::move(band)) {
    if (band_.empty()) throw DomainError("matrix order must be >= 1");
}

SignedCount HessMatrix::entry(std::size_t i, std::size_t j) const {
    const std::size_t n = order();
    if (i < 1 || j < 1 || i > n || j > n)
        throw IndexOutOfRange("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside order " +
                              std::to_string(n));
    if (j >= i) return band_[j - i];
    if (i == j + 1) return -1;
    return 0;
}

DenseMatrix HessMatrix::dense() const {
    const std::size_t n = order();
    DenseMatrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = (i > 1 ? i - 1 : 1); j <= n; ++j) m(i - 1, j - 1) = entry(i, j);
    return m;
}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    for (std::size_t t = 0; t < indices_.size(); ++t) {
        if (indices_[t] < 1) throw IndexOutOfRange("indices are 1-based");
        if (t > 0 && indices_[t - 1] >= indices_[t]) throw DomainError("index set must be strictly increasing");
    }
}

void IndexSet::check_within(std::size_t n) const {
    if (!indices_.empty() && indices_.back() > n)
        throw IndexOutOfRange("index " + std::to_string(indices_.back()) + " exceeds matrix order " +
                              std::to_string(n));
}

HessMatrix build_matrix(const PartAlphabet& alphabet, std::int64_t n) {
    if (n < 1) throw DomainError("matrix order must be >= 1");
    std::vector<SignedCount> band(static_cast<std::size_t>(n), 0);
    for (const Part& p : alphabet.parts_up_to(n)) band[static_cast<std::size_t>(p.value - 1)] = p.multiplicity;
    return HessMatrix(std::move(band));
}

SignedCount det_hessenberg(const HessMatrix& m) {
    // Deleting row i and the last column of P_m leaves a block upper
    // triangular matrix: P_{i-1} and a unit-(-1) triangle of order m - i.
    // The (-1)^{m-i} from the triangle cancels the cofactor sign.
    const std::size_t n = m.order();
    std::vector<SignedCount> leading(n + 1);
    leading[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        SignedCount d = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            const SignedCount& p = m.band(k - i + 1);
            if (p == 0) continue;
            if (p == 1)
                d += leading[i - 1];
            else
                d += p * leading[i - 1];
        }
        leading[k] = std::move(d);
    }
    return leading[n];
}

SignedCount det_bareiss(DenseMatrix m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    SignedCount previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(pivot, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                SignedCount v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                m(i, j) = std::move(v);
            }
            m(i, k) = 0;
        }
        previous = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

DenseMatrix submatrix(const DenseMatrix& m, const std::vector<std::size_t>& keep) {
    DenseMatrix s(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) s(r, c) = m(keep[r], keep[c]);
    return s;
}

} // namespace

SignedCount principal_minor(const HessMatrix& m, const IndexSet& deleted) {
    deleted.check_within(m.order());
    std::vector<std::size_t> keep;
    const auto& del = deleted.indices();
    for (std::size_t i = 1; i <= m.order(); ++i)
        if (!std::binary_search(del.begin(), del.end(), i)) keep.push_back(i - 1);
    return det_bareiss(submatrix(m.dense(), keep));
}

Count minor_product_formula(const PartAlphabet& alphabet, std::int64_t n, const IndexSet& deleted) {
    if (n < 1) throw DomainError("matrix order must be >= 1");
    deleted.check_within(static_cast<std::size_t>(n));
    const SequencePrefix seq = sequence_prefix(alphabet, n);
    Count product = 1;
    std::size_t previous = 0;
    for (std::size_t i : deleted.indices()) {
        product *= seq.a(i - previous);
        previous = i;
    }
    product *= seq.a(static_cast<std::size_t>(n) - previous + 1);
    return product;
}

SignedCount minor_sum_subsets(const DenseMatrix& m, std::int64_t r, Guards guards) {
    if (!m.is_square()) throw DomainError("principal minors of a non-square matrix");
    const auto n = static_cast<std::int64_t>(m.rows());
    if (r < 0 || r > n)
        throw DomainError("minor order " + std::to_string(r) + " outside [0, " + std::to_string(n) + "]");
    if (n > guards.subsets)
        throw GuardExceeded("matrix order " + std::to_string(n) + " exceeds the subset guard " +
                            std::to_string(guards.subsets));
    if (r == 0) return 1;
    // Walk r-subsets of {0..n-1} in lexicographic order.
    std::vector<std::size_t> keep(static_cast<std::size_t>(r));
    for (std::size_t t = 0; t < keep.size(); ++t) keep[t] = t;
    SignedCount total = 0;
    const auto un = static_cast<std::size_t>(n);
    while (true) {
        total += det_bareiss(submatrix(m, keep));
        std::size_t t = keep.size();
        while (t-- > 0 && keep[t] == un - keep.size() + t) {
        }
        if (t == static_cast<std::size_t>(-1)) break;
        ++keep[t];
        for (std::size_t u = t + 1; u < keep.size(); ++u) keep[u] = keep[u - 1] + 1;
    }
    return total;
}

SignedCount minor_sum_subsets(const HessMatrix& m, std::int64_t r, Guards guards) {
    return minor_sum_subsets(m.dense(), r, guards);
}

Count minor_sum_convolution(const SequencePrefix& sequence, std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) throw DomainError("need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    const auto top = static_cast<std::size_t>(n - k);
    if (sequence.size() < top + 1) throw IndexOutOfRange("sequence prefix too short for the convolution");
    std::vector<Count> base(sequence.terms().begin(), sequence.terms().begin() + static_cast<std::ptrdiff_t>(top + 1));
    std::vector<Count> power = base;
    for (std::int64_t factor = 1; factor <= k; ++factor) {
        std::vector<Count> next(top + 1, 0);
        for (std::size_t i = 0; i <= top; ++i) {
            if (power[i] == 0) continue;
            for (std::size_t j = 0; i + j <= top; ++j)
                if (base[j] != 0) next[i + j] += power[i] * base[j];
        }
        power = std::move(next);
    }
    return power[top];
}

Count minor_sum_convolution(const PartAlphabet& alphabet, std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) throw DomainError("need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    return minor_sum_convolution(sequence_prefix(alphabet, std::max<std::int64_t>(1, n - k)), n, k);
}

IntPolynomial charpoly(const HessMatrix& m) {
    // chi_j = (lambda - p_1) chi_{j-1} - sum_{i<j} h_{ij} (prod_{t=i+1}^{j} h_{t,t-1}) chi_{i-1},
    // with h_{ij} = p_{j-i+1} and every subdiagonal entry -1.
    const std::size_t n = m.order();
    std::vector<IntPolynomial> chi;
    chi.reserve(n + 1);
    chi.push_back(IntPolynomial::constant(1));
    const IntPolynomial diagonal = IntPolynomial::variable() - IntPolynomial::constant(m.band(1));
    for (std::size_t j = 1; j <= n; ++j) {
        IntPolynomial next = diagonal * chi[j - 1];
        for (std::size_t i = 1; i < j; ++i) {
            const SignedCount& h = m.band(j - i + 1);
            if (h == 0) continue;
            // -h * (-1)^{j-i}
            const SignedCount factor = ((j - i) % 2 == 0) ? SignedCount(-h) : h;
            next += chi[i - 1] * factor;
        }
        chi.push_back(std::move(next));
    }
    return chi.back();
}

} // namespace compcount
