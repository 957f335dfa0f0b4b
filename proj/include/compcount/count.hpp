#pragma once

// Exact integer types and the small number-theoretic tables everything else
// is built from.

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace compcount {

/// Nonnegative arbitrary-precision integer (composition counts).
using Count = mpz_class;

/// Signed arbitrary-precision integer (matrix entries, minors, polynomial
/// coefficients).
using SignedCount = mpz_class;

/// C(a, b), zero for b < 0 or b > a >= 0. Throws NegativeUpperIndex when
/// a < 0 <= b.
Count binomial(std::int64_t a, std::int64_t b);

/// F_1 = F_2 = 1. Throws DomainError for i <= 0.
Count fibonacci(std::int64_t i);

/// k-step Fibonacci seeded with two leading ones: F_1 = F_2 = 1 and every
/// later term is the sum of the previous min(k, i-1) terms. F^{(k)}_{n+1}
/// counts compositions of n with parts <= k.
Count kstep_fibonacci(std::int64_t k, std::int64_t i);

/// 2^e for e >= 0.
Count power_of_two(std::int64_t e);

inline std::string to_string(const mpz_class& v) { return v.get_str(); }

/// Number of decimal digits of |v| (1 for zero).
std::size_t decimal_digits(const mpz_class& v);

} // namespace compcount
