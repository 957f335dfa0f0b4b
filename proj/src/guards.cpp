#include "compcount/guards.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace compcount {

Guards Guards::from_environment() {
    Guards g;
    if (const char* env = std::getenv("COMPCOUNT_GUARD")) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
        if (ec == std::errc{} && *ptr == '\0' && v > g.enumeration) g.enumeration = v;
    }
    return g;
}

} // namespace compcount
