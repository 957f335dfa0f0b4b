#pragma once

#include <cstdint>

namespace compcount {

/// Size limits for the exponential code paths. Exceeding one raises
/// GuardExceeded; nothing is ever truncated.
struct Guards {
    /// Largest n (and k) accepted by brute-force enumeration.
    std::int64_t enumeration = 25;
    /// Largest matrix order accepted by explicit principal-minor subset sums.
    std::int64_t subsets = 22;

    /// Library defaults, with the enumeration limit raised by the
    /// COMPCOUNT_GUARD environment variable when it holds a larger integer.
    static Guards from_environment();
};

} // namespace compcount
