#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace compcount {

/// One allowed part value together with the number of distinguishable
/// colors it comes in.
struct Part {
    std::int64_t value = 0;
    std::int64_t multiplicity = 1;

    friend bool operator==(const Part&, const Part&) = default;
};

/// The set of allowed positive parts, with multiplicities.
///
/// Either an explicit finite list m_1 < ... < m_r with colors q_i, or the
/// unbounded alphabet {k, k+1, ...} with one color each. The unbounded form
/// behaves, for any target n, exactly like the explicit list {k, ..., n}.
class PartAlphabet {
public:
    /// Validates ordering and positivity; throws DomainError otherwise.
    static PartAlphabet explicit_parts(std::vector<Part> parts);
    /// Convenience: every value with multiplicity one.
    static PartAlphabet of_values(const std::vector<std::int64_t>& values);
    static PartAlphabet at_least(std::int64_t threshold);
    /// {1, ..., k}.
    static PartAlphabet up_to(std::int64_t k);
    /// Every positive integer; stands in for [n] when counting compositions of n.
    static PartAlphabet unrestricted() { return at_least(1); }

    bool is_unbounded() const { return threshold_.has_value(); }
    std::optional<std::int64_t> threshold() const { return threshold_; }
    /// Explicit list; empty for unbounded alphabets.
    const std::vector<Part>& parts() const { return parts_; }

    /// q for value m, 0 if m is not an allowed part.
    std::int64_t multiplicity(std::int64_t m) const;
    /// Allowed parts with value <= limit, ascending.
    std::vector<Part> parts_up_to(std::int64_t limit) const;
    std::int64_t min_part() const;

    /// Canonical text in the CLI grammar ("atleast:2", "1x2,3").
    std::string describe() const;

    friend bool operator==(const PartAlphabet&, const PartAlphabet&) = default;

private:
    std::vector<Part> parts_;
    std::optional<std::int64_t> threshold_;
};

/// The fixed set used by the invariant suites:
/// at-least-1, [1,2], [1,2,3], at-least-2, {1 x2}, {1, 2 x3}.
std::vector<PartAlphabet> battery_alphabets();

} // namespace compcount
