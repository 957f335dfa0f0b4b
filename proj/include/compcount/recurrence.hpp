#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "compcount/alphabet.hpp"
#include "compcount/count.hpp"

namespace compcount {

/// Recurrence coefficients p_1..p_L: p_d is the number of colors of part d.
/// A prefix may be all zero (alphabet minimum above L).
class CoeffVector {
public:
    explicit CoeffVector(std::vector<Count> lags);

    std::size_t length() const { return p_.size(); }
    /// p_d for 1 <= d <= length(); zero beyond.
    const Count& at(std::size_t lag) const;
    const std::vector<Count>& values() const { return p_; }

private:
    std::vector<Count> p_;
};

/// p_{m_i} = q_i, other lags 0; unbounded alphabets fill 1s from the threshold.
CoeffVector build_coeffs(const PartAlphabet& alphabet, std::int64_t length);

/// a_1 = 1 and a_{m+1} = sum_{i=1}^{m} p_{m-i+1} a_i, stored 1-based.
class SequencePrefix {
public:
    explicit SequencePrefix(std::vector<Count> terms);

    /// a_i for 1 <= i <= size().
    const Count& a(std::size_t i) const;
    std::size_t size() const { return a_.size(); }
    const std::vector<Count>& terms() const { return a_; }

private:
    std::vector<Count> a_;
};

/// a_1..a_{n+1} by direct evaluation of the convolution recurrence; lags
/// beyond coeffs.length() count as zero. O(n^2).
SequencePrefix sequence_from_coeffs(const CoeffVector& coeffs, std::int64_t n);

/// a_1..a_{n+1}; a_{m+1} = c(m, alphabet). O(n r) for explicit alphabets,
/// O(n) for unbounded ones.
SequencePrefix sequence_prefix(const PartAlphabet& alphabet, std::int64_t n);

/// c(n, alphabet), with c(0) = 1.
Count count_compositions(std::int64_t n, const PartAlphabet& alphabet);

/// Memoized c(., alphabet) for one alphabet. The table only grows; all
/// members are safe to call concurrently.
class CompositionCounter {
public:
    explicit CompositionCounter(PartAlphabet alphabet);

    const PartAlphabet& alphabet() const { return alphabet_; }
    Count count(std::int64_t n) const;
    /// c(0..n).
    std::vector<Count> counts_up_to(std::int64_t n) const;

private:
    void extend_locked(std::int64_t n) const;

    PartAlphabet alphabet_;
    mutable std::mutex mutex_;
    mutable std::vector<Count> counts_{1}; // counts_[m] = c(m)
    mutable std::vector<Count> prefix_sums_{1}; // unbounded alphabets only
};

} // namespace compcount
