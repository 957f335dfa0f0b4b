#pragma once

// Grid runners that pit each counting route against the brute-force oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compcount/guards.hpp"
#include "compcount/report.hpp"

namespace compcount {

enum class Identity { eq1, thm8, thm9, thm10, thm11, thm12 };

/// "eq1", "thm8", ... ; nullopt for unknown names.
std::optional<Identity> parse_identity(const std::string& name);
std::string identity_name(Identity id);
std::vector<Identity> all_identities();

struct GridBounds {
    std::int64_t max_n = 0;
    std::int64_t max_k = 0;
};

/// The grid each identity is checked on when none is given.
GridBounds default_grid(Identity id);

/// eq1:   0 <= k <= n <= max_n, lhs/rhs of the convolved Fibonacci identity.
/// thm8:  battery alphabets, lhs = ccw_convolution, rhs = insertion count,
///        oracle = brute enumeration.
/// thm9:  battery alphabets, lhs = minor sums by convolution, rhs = minor sums
///        from the characteristic polynomial, oracle = brute.
/// thm10: 1 <= n, unrestricted closed form vs ccw_convolution, oracle = brute.
/// thm11: parts {1,2} closed form vs ccw_convolution, oracle = brute.
/// thm12: adjudicate_theorem12.
VerificationReport run_identity(Identity id, GridBounds grid, Guards guards = Guards::from_environment());

} // namespace compcount
