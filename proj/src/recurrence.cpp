#include "compcount/recurrence.hpp"

#include "compcount/errors.hpp"

namespace compcount {

CoeffVector::CoeffVector(std::vector<Count> lags) : p_(std::move(lags)) {
    for (const auto& c : p_)
        if (c < 0) throw DomainError("recurrence coefficients must be nonnegative");
}

const Count& CoeffVector::at(std::size_t lag) const {
    static const Count zero = 0;
    if (lag == 0) throw IndexOutOfRange("coefficient lags start at 1");
    return lag <= p_.size() ? p_[lag - 1] : zero;
}

CoeffVector build_coeffs(const PartAlphabet& alphabet, std::int64_t length) {
    if (length < 1) throw DomainError("coefficient vector length must be >= 1");
    std::vector<Count> p(static_cast<std::size_t>(length), 0);
    for (const Part& part : alphabet.parts_up_to(length)) p[static_cast<std::size_t>(part.value - 1)] = part.multiplicity;
    return CoeffVector(std::move(p));
}

SequencePrefix::SequencePrefix(std::vector<Count> terms) : a_(std::move(terms)) {
    if (a_.empty() || a_.front() != 1) throw DomainError("sequence prefix must start with a_1 = 1");
}

const Count& SequencePrefix::a(std::size_t i) const {
    if (i < 1 || i > a_.size())
        throw IndexOutOfRange("a_" + std::to_string(i) + " outside the computed prefix of length " +
                              std::to_string(a_.size()));
    return a_[i - 1];
}

CompositionCounter::CompositionCounter(PartAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

void CompositionCounter::extend_locked(std::int64_t n) const {
    const auto target = static_cast<std::size_t>(n);
    if (counts_.size() > target) return;
    counts_.reserve(target + 1);
    if (auto k = alphabet_.threshold()) {
        // Parts >= k, one color each: c(m) = c(0) + ... + c(m - k).
        const auto lag = static_cast<std::size_t>(*k);
        for (std::size_t m = counts_.size(); m <= target; ++m) {
            counts_.push_back(m >= lag ? prefix_sums_[m - lag] : Count(0));
            prefix_sums_.push_back(prefix_sums_.back() + counts_.back());
        }
        return;
    }
    const auto& parts = alphabet_.parts();
    for (std::size_t m = counts_.size(); m <= target; ++m) {
        Count c = 0;
        for (const Part& p : parts) {
            const auto v = static_cast<std::size_t>(p.value);
            if (v > m) break;
            if (p.multiplicity == 1)
                c += counts_[m - v];
            else
                c += counts_[m - v] * p.multiplicity;
        }
        counts_.push_back(std::move(c));
    }
}

Count CompositionCounter::count(std::int64_t n) const {
    if (n < 0) throw DomainError("n must be >= 0");
    std::lock_guard lock(mutex_);
    extend_locked(n);
    return counts_[static_cast<std::size_t>(n)];
}

std::vector<Count> CompositionCounter::counts_up_to(std::int64_t n) const {
    if (n < 0) throw DomainError("n must be >= 0");
    std::lock_guard lock(mutex_);
    extend_locked(n);
    return {counts_.begin(), counts_.begin() + n + 1};
}

SequencePrefix sequence_from_coeffs(const CoeffVector& coeffs, std::int64_t n) {
    if (n < 1) throw DomainError("sequence prefix length n must be >= 1");
    std::vector<Count> a{1};
    a.reserve(static_cast<std::size_t>(n) + 1);
    for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m) {
        Count next = 0;
        for (std::size_t i = 1; i <= m; ++i) {
            const Count& p = coeffs.at(m - i + 1);
            if (p != 0) next += p * a[i - 1];
        }
        a.push_back(std::move(next));
    }
    return SequencePrefix(std::move(a));
}

SequencePrefix sequence_prefix(const PartAlphabet& alphabet, std::int64_t n) {
    if (n < 1) throw DomainError("sequence prefix length n must be >= 1");
    return SequencePrefix(CompositionCounter(alphabet).counts_up_to(n));
}

Count count_compositions(std::int64_t n, const PartAlphabet& alphabet) {
    return CompositionCounter(alphabet).count(n);
}

} // namespace compcount
