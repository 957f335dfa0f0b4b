#include "compcount/weak.hpp"

#include <algorithm>
#include <vector>

#include "compcount/errors.hpp"
#include "compcount/hessenberg.hpp"
#include "compcount/oracle.hpp"
#include "compcount/recurrence.hpp"

namespace compcount {

namespace {

void require_nonnegative(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0)
        throw DomainError("need n >= 0 and k >= 0, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

} // namespace

Count ccw_convolution(std::int64_t n, std::int64_t k, const PartAlphabet& alphabet) {
    require_nonnegative(n, k);
    const std::vector<Count> cc = CompositionCounter(alphabet).counts_up_to(n);
    // weak[m] = ccw(m, z) for the current number of zeros z.
    std::vector<Count> weak = cc;
    for (std::int64_t z = 1; z <= k; ++z) {
        std::vector<Count> next(weak.size(), 0);
        for (std::size_t m = 0; m < next.size(); ++m)
            for (std::size_t j = 0; j <= m; ++j)
                if (cc[j] != 0) next[m] += cc[j] * weak[m - j];
        weak = std::move(next);
    }
    return weak[static_cast<std::size_t>(n)];
}

Count cw_via_minors(std::int64_t n, std::int64_t k, const PartAlphabet& alphabet, MinorRoute route,
                    Guards guards) {
    require_nonnegative(n, k);
    const std::int64_t order = n + k;
    if (order == 0) return 1;
    switch (route) {
    case MinorRoute::convolution:
        return minor_sum_convolution(alphabet, order, k);
    case MinorRoute::charpoly: {
        const IntPolynomial chi = charpoly(build_matrix(alphabet, order));
        SignedCount c = chi.coefficient(static_cast<std::size_t>(k));
        return n % 2 == 0 ? c : SignedCount(-c);
    }
    case MinorRoute::subsets:
        return minor_sum_subsets(build_matrix(alphabet, order), n, guards);
    }
    throw DomainError("unknown minor route");
}

Count convolved_fib_lhs(std::int64_t n, std::int64_t k) {
    require_nonnegative(n, k);
    if (k > n) throw DomainError("convolved Fibonacci needs k <= n");
    const auto top = static_cast<std::size_t>(n - k);
    std::vector<Count> fib(top + 1);
    for (std::size_t j = 0; j <= top; ++j) fib[j] = fibonacci(static_cast<std::int64_t>(j) + 1);
    std::vector<Count> acc = fib;
    for (std::int64_t factor = 1; factor <= k; ++factor) {
        std::vector<Count> next(top + 1, 0);
        for (std::size_t s = 0; s <= top; ++s)
            for (std::size_t j = 0; j <= s; ++j) next[s] += acc[s - j] * fib[j];
        acc = std::move(next);
    }
    return acc[top];
}

Count convolved_fib_rhs(std::int64_t n, std::int64_t k) {
    require_nonnegative(n, k);
    if (k > n) throw DomainError("convolved Fibonacci needs k <= n");
    Count total = 0;
    for (std::int64_t i = 0; i <= (n - k) / 2; ++i) total += binomial(n - i, i) * binomial(n - 2 * i, k);
    return total;
}

Count cw_unrestricted_closed(std::int64_t n, std::int64_t k) {
    if (n < 1) throw DomainError("unrestricted closed form needs n >= 1");
    if (k < 0) throw DomainError("k must be >= 0");
    Count total = 0;
    for (std::int64_t i = 0; i <= k; ++i) {
        const Count weight = binomial(k + 1, i) * binomial(n - 1, k - i);
        const std::int64_t exponent = n - k - 1 + i;
        if (exponent < 0) {
            if (weight != 0)
                throw DomainError("negative power of two meets a nonzero binomial at n=" + std::to_string(n) +
                                  " k=" + std::to_string(k) + " i=" + std::to_string(i));
            continue;
        }
        total += power_of_two(exponent) * weight;
    }
    return total;
}

Count cw_parts12_closed(std::int64_t n, std::int64_t k) {
    require_nonnegative(n, k);
    Count total = 0;
    for (std::int64_t i = 0; i <= n / 2; ++i) total += binomial(n + k - i, i) * binomial(n + k - 2 * i, k);
    return total;
}

namespace {

// floor division for possibly negative numerators
std::int64_t floor_half(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

} // namespace

Count t12_closed(std::int64_t n, std::int64_t k) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (k < 0) throw DomainError("k must be >= 0");
    Count total = 0;
    for (std::int64_t m = 0; m <= k + 1; ++m) {
        Count inner = 0;
        for (std::int64_t i = 0; i <= floor_half(n - k - 1 + m); ++i)
            inner += binomial(n - 1 - i, i) * binomial(n - 1 - 2 * i, k - m);
        total += binomial(k + 1, m) * inner;
    }
    return total;
}

Count t12_convolution(std::int64_t n, std::int64_t k) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (k < 0) throw DomainError("k must be >= 0");
    std::vector<Count> a{1};
    for (std::int64_t m = 2; m <= n + 1; ++m) a.push_back(fibonacci(m - 1));
    return minor_sum_convolution(SequencePrefix(std::move(a)), n + k, k);
}

VerificationReport adjudicate_theorem12(std::int64_t max_n, std::int64_t max_k, Guards guards) {
    if (max_n < 1 || max_k < 0) throw DomainError("adjudication grid needs max_n >= 1 and max_k >= 0");
    if (max_n + max_k > guards.enumeration)
        throw GuardExceeded("oracle target up to n+k = " + std::to_string(max_n + max_k) +
                            " exceeds the enumeration guard " + std::to_string(guards.enumeration));
    const PartAlphabet parts_ge2 = PartAlphabet::at_least(2);

    VerificationReport report;
    report.identity = "thm12";
    report.lhs_label = "closed form sum_{m,i} C(k+1,m) C(n-1-i,i) C(n-1-2i,k-m)";
    report.rhs_label = "order-n minor sum of P_{n+k} with a_1=1, a_m=F_{m-1}";
    report.oracle_label = "brute cw(n+k-1, k, parts>=2)";
    report.max_n = max_n;
    report.max_k = max_k;

    std::size_t shifted_agree_k0 = 0, points_k0 = 0, shifted_agree_kpos = 0, points_kpos = 0;
    std::vector<std::string> shifted_misses;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t k = 0; k <= max_k; ++k) {
            ReportPoint p;
            p.n = n;
            p.k = k;
            p.lhs = t12_closed(n, k);
            p.rhs = t12_convolution(n, k);
            p.oracle = oracle::count_weak_brute(n + k - 1, k, parts_ge2, guards);
            const Count shifted = oracle::count_weak_brute(n + 1, k, parts_ge2, guards);
            const bool hit = shifted == p.rhs;
            if (k == 0) {
                ++points_k0;
                shifted_agree_k0 += hit;
            } else {
                ++points_kpos;
                shifted_agree_kpos += hit;
            }
            if (!hit)
                shifted_misses.push_back("(" + std::to_string(n) + "," + std::to_string(k) + ")");
            report.points.push_back(std::move(p));
        }
    }

    const auto total = report.points.size();
    std::size_t lhs_rhs = 0, oracle_hits = 0;
    std::string oracle_misses;
    for (const auto& p : report.points) {
        lhs_rhs += p.lhs_equals_rhs();
        if (p.oracle_agrees()) {
            ++oracle_hits;
        } else {
            if (!oracle_misses.empty()) oracle_misses += ' ';
            oracle_misses += "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "):" + p.rhs.get_str() +
                             "vs" + p.oracle->get_str();
        }
    }
    report.notes.push_back("closed form == convolution at " + std::to_string(lhs_rhs) + "/" +
                           std::to_string(total) + " points");
    report.notes.push_back("oracle cw(n+k-1,k,parts>=2) agrees at " + std::to_string(oracle_hits) + "/" +
                           std::to_string(total) + " points" +
                           (oracle_misses.empty() ? "" : "; disagreements (n,k):formula vs oracle " + oracle_misses));
    std::string shifted = "shifted target cw(n+1,k,parts>=2) agrees at " + std::to_string(shifted_agree_k0) + "/" +
                          std::to_string(points_k0) + " points with k=0 and " +
                          std::to_string(shifted_agree_kpos) + "/" + std::to_string(points_kpos) +
                          " points with k>0";
    if (!shifted_misses.empty()) {
        shifted += "; misses at";
        for (std::size_t i = 0; i < shifted_misses.size() && i < 8; ++i) shifted += ' ' + shifted_misses[i];
        if (shifted_misses.size() > 8) shifted += " ...";
    }
    report.notes.push_back(shifted);
    return report;
}

} // namespace compcount
