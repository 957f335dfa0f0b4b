#include "compcount/count.hpp"

#include <vector>

#include "compcount/errors.hpp"

namespace compcount {

Count binomial(std::int64_t a, std::int64_t b) {
    if (b < 0) return 0;
    if (a < 0)
        throw NegativeUpperIndex("binomial(" + std::to_string(a) + ", " + std::to_string(b) +
                                 "): negative upper index");
    if (b > a) return 0;
    Count r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

Count fibonacci(std::int64_t i) {
    if (i <= 0) throw DomainError("fibonacci: index must be >= 1, got " + std::to_string(i));
    Count r;
    mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(i));
    return r;
}

Count kstep_fibonacci(std::int64_t k, std::int64_t i) {
    if (k < 2) throw DomainError("kstep_fibonacci: step count must be >= 2, got " + std::to_string(k));
    if (i < 1) throw DomainError("kstep_fibonacci: index must be >= 1, got " + std::to_string(i));
    if (i <= 2) return 1;
    // Sliding window over the last k terms; the window sum is the next term.
    std::vector<Count> terms{1, 1};
    terms.reserve(static_cast<std::size_t>(i));
    Count window = 2;
    for (std::int64_t t = 3; t <= i; ++t) {
        Count next = window;
        terms.push_back(next);
        window += next;
        const std::int64_t drop = t - k; // 1-based index leaving the window
        if (drop >= 1) window -= terms[static_cast<std::size_t>(drop - 1)];
    }
    return terms.back();
}

Count power_of_two(std::int64_t e) {
    if (e < 0) throw DomainError("power_of_two: negative exponent " + std::to_string(e));
    Count r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

std::size_t decimal_digits(const mpz_class& v) {
    if (v == 0) return 1;
    const mpz_class magnitude = abs(v);
    return magnitude.get_str().size();
}

} // namespace compcount
