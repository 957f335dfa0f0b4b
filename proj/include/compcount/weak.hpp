#pragma once

// Weak compositions: exactly k parts equal to zero, all other parts drawn
// from an alphabet. Counted here by convolution, by principal-minor sums and
// by explicit binomial sums.

#include <cstdint>

#include "compcount/alphabet.hpp"
#include "compcount/count.hpp"
#include "compcount/guards.hpp"
#include "compcount/report.hpp"

namespace compcount {

/// The k zeros cut a weak composition into k + 1 zero-free blocks, so the
/// count is the (k+1)-fold convolution of cc(j) = c(j, alphabet), cc(0) = 1.
/// Evaluated by peeling one block at a time.
Count ccw_convolution(std::int64_t n, std::int64_t k, const PartAlphabet& alphabet);

enum class MinorRoute {
    convolution, ///< block-product convolution of the matrix's sequence
    charpoly,    ///< (-1)^n times the lambda^k coefficient of det(lambda I - P_{n+k})
    subsets,     ///< explicit principal-minor enumeration (guarded)
};

/// Sum of the principal minors of order n of P_{n+k} built from the alphabet.
Count cw_via_minors(std::int64_t n, std::int64_t k, const PartAlphabet& alphabet,
                    MinorRoute route = MinorRoute::convolution, Guards guards = Guards::from_environment());

/// sum over j_1 + ... + j_{k+1} = n - k (j_t >= 0) of prod F_{j_t + 1}.
Count convolved_fib_lhs(std::int64_t n, std::int64_t k);
/// sum_{i=0}^{floor((n-k)/2)} C(n-i, i) C(n-2i, k).
Count convolved_fib_rhs(std::int64_t n, std::int64_t k);

/// Unrestricted weak compositions:
/// 2^{n-k-1} sum_{i=0}^{k} 2^i C(k+1, i) C(n-1, k-i), computed per term with
/// exponent n-k-1+i. Requires n >= 1.
Count cw_unrestricted_closed(std::int64_t n, std::int64_t k);

/// Weak compositions with positive parts in {1, 2}:
/// sum_{i=0}^{floor(n/2)} C(n+k-i, i) C(n+k-2i, k).
Count cw_parts12_closed(std::int64_t n, std::int64_t k);

/// sum_{m=0}^{k+1} C(k+1, m) sum_{i=0}^{floor((n-k-1+m)/2)} C(n-1-i, i) C(n-1-2i, k-m),
/// evaluated exactly as written. Requires n >= 1.
Count t12_closed(std::int64_t n, std::int64_t k);

/// Order-n principal-minor sum of the order-(n+k) matrix whose sequence is
/// a_1 = 1, a_m = F_{m-1} (m >= 2): the (k+1)-fold convolution of a_{j+1}
/// at n.
Count t12_convolution(std::int64_t n, std::int64_t k);

/// For 1 <= n <= max_n, 0 <= k <= max_k: lhs = t12_closed, rhs =
/// t12_convolution, oracle = brute count of weak compositions of n+k-1 with
/// k zeros and parts >= 2. Notes record which columns agree, including the
/// shifted target n+1.
VerificationReport adjudicate_theorem12(std::int64_t max_n, std::int64_t max_k,
                                        Guards guards = Guards::from_environment());

} // namespace compcount
