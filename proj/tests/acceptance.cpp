// Acceptance suite: one line per criterion, "PASS"/"FAIL", with wall time
// against the criterion's budget. `acceptance --only N` runs criterion N.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "compcount/count.hpp"
#include "compcount/hessenberg.hpp"
#include "compcount/oracle.hpp"
#include "compcount/recurrence.hpp"
#include "compcount/weak.hpp"

using namespace compcount;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    // Records the first failing check only.
    void expect(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds; // <= 0: no time limit
    std::function<Outcome()> run;
};

std::string at(std::int64_t n, std::int64_t k, const std::string& alphabet = "") {
    std::ostringstream s;
    s << "n=" << n << " k=" << k;
    if (!alphabet.empty()) s << " alphabet=" << alphabet;
    return s.str();
}

Outcome unrestricted_counts() {
    Outcome o;
    const auto all = PartAlphabet::unrestricted();
    const auto seq = sequence_prefix(all, 200);
    for (std::int64_t n = 1; n <= 200; ++n)
        o.expect(seq.a(static_cast<std::size_t>(n) + 1) == power_of_two(n - 1), "recurrence at n=" + std::to_string(n));
    for (std::int64_t n = 1; n <= 40; ++n)
        o.expect(det_hessenberg(build_matrix(all, n)) == power_of_two(n - 1), "det at n=" + std::to_string(n));
    return o;
}

Outcome bounded_parts() {
    Outcome o;
    for (std::int64_t k = 2; k <= 4; ++k) {
        const auto a = PartAlphabet::up_to(k);
        for (std::int64_t n = 0; n <= 40; ++n) {
            const Count c = count_compositions(n, a);
            o.expect(c == kstep_fibonacci(k, n + 1), "k-step at " + at(n, k));
            if (n <= 15) o.expect(c == oracle::count_compositions_brute(n, a), "brute at " + at(n, k));
        }
    }
    return o;
}

Outcome parts_at_least_two() {
    Outcome o;
    const auto a = PartAlphabet::at_least(2);
    for (std::int64_t n = 2; n <= 60; ++n)
        o.expect(count_compositions(n, a) == fibonacci(n - 1), "n=" + std::to_string(n));
    return o;
}

Outcome determinants() {
    Outcome o;
    for (const auto& a : battery_alphabets()) {
        const auto seq = sequence_prefix(a, 40);
        for (std::int64_t n = 1; n <= 40; ++n) {
            const auto m = build_matrix(a, n);
            const SignedCount d = det_hessenberg(m);
            o.expect(d == seq.a(static_cast<std::size_t>(n) + 1), "hessenberg det at " + at(n, 0, a.describe()));
            if (n <= 15) o.expect(det_bareiss(m.dense()) == d, "bareiss at " + at(n, 0, a.describe()));
        }
    }
    return o;
}

Outcome minor_sums() {
    Outcome o;
    for (const auto& a : battery_alphabets()) {
        for (std::int64_t n = 1; n <= 12; ++n) {
            const auto m = build_matrix(a, n);
            for (std::int64_t k = 0; k <= n; ++k)
                o.expect(minor_sum_subsets(m, n - k) == minor_sum_convolution(a, n, k),
                         "minor sums at " + at(n, k, a.describe()));
        }
        for (std::int64_t n = 1; n <= 8; ++n) {
            const auto m = build_matrix(a, n);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<std::size_t> deleted;
                for (std::int64_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) deleted.push_back(static_cast<std::size_t>(i) + 1);
                const IndexSet d(deleted);
                o.expect(principal_minor(m, d) == minor_product_formula(a, n, d),
                         "product formula at n=" + std::to_string(n) + " mask=" + std::to_string(mask) + " " +
                             a.describe());
            }
        }
    }
    return o;
}

Outcome convolved_fibonacci() {
    Outcome o;
    for (std::int64_t n = 0; n <= 25; ++n)
        for (std::int64_t k = 0; k <= n; ++k) o.expect(convolved_fib_lhs(n, k) == convolved_fib_rhs(n, k), at(n, k));
    return o;
}

template <typename F>
Outcome weak_battery(F route) {
    Outcome o;
    for (const auto& a : battery_alphabets())
        for (std::int64_t n = 0; n <= 12; ++n)
            for (std::int64_t k = 0; k <= 4; ++k)
                o.expect(route(n, k, a) == oracle::count_weak_brute(n, k, a), at(n, k, a.describe()));
    return o;
}

Outcome weak_by_convolution() {
    return weak_battery([](std::int64_t n, std::int64_t k, const PartAlphabet& a) { return ccw_convolution(n, k, a); });
}

Outcome weak_by_minors() {
    return weak_battery([](std::int64_t n, std::int64_t k, const PartAlphabet& a) { return cw_via_minors(n, k, a); });
}

Outcome unrestricted_closed_form() {
    Outcome o;
    const auto all = PartAlphabet::unrestricted();
    for (std::int64_t n = 1; n <= 12; ++n)
        for (std::int64_t k = 0; k <= 6; ++k)
            o.expect(cw_unrestricted_closed(n, k) == oracle::count_weak_brute(n, k, all), at(n, k));
    o.expect(cw_unrestricted_closed(1, 1) == 2, "edge point (1,1) != 2");
    return o;
}

Outcome parts12_closed_form() {
    Outcome o;
    const auto a = PartAlphabet::of_values({1, 2});
    for (std::int64_t n = 0; n <= 12; ++n)
        for (std::int64_t k = 0; k <= 4; ++k)
            o.expect(cw_parts12_closed(n, k) == oracle::count_weak_brute(n, k, a), at(n, k));
    return o;
}

Outcome parts_ge2_adjudication() {
    Outcome o;
    for (std::int64_t n = 1; n <= 10; ++n)
        for (std::int64_t k = 0; k <= 3; ++k) o.expect(t12_closed(n, k) == t12_convolution(n, k), at(n, k));
    const auto report = adjudicate_theorem12(6, 2);
    o.expect(report.points.size() == 18, "adjudication grid size");
    o.expect(report.lhs_equals_rhs_everywhere(), "closed and convolution columns differ somewhere");
    bool seen = false;
    for (const auto& p : report.points) {
        if (p.n != 2 || p.k != 1) continue;
        seen = true;
        o.expect(p.lhs == 3 && p.rhs == 3, "(2,1) closed/convolution not 3");
        o.expect(p.oracle && *p.oracle == 2, "(2,1) oracle not 2");
        o.expect(p.verdict() == Verdict::disagree, "(2,1) not reported as a disagreement");
    }
    o.expect(seen, "(2,1) missing from the report");
    if (o.ok) o.detail = "documented discrepancy reproduced: " + report.notes[1].substr(0, 60) + "...";
    return o;
}

Outcome charpoly_coefficients() {
    Outcome o;
    for (const auto& a : battery_alphabets())
        for (std::int64_t n = 1; n <= 10; ++n) {
            const auto m = build_matrix(a, n);
            const auto chi = charpoly(m);
            o.expect(chi.degree() == n && chi.coefficient(static_cast<std::size_t>(n)) == 1, "not monic at n=" + std::to_string(n));
            for (std::int64_t r = 0; r <= n; ++r) {
                const SignedCount s = minor_sum_subsets(m, r);
                o.expect(chi.coefficient(static_cast<std::size_t>(n - r)) == (r % 2 ? SignedCount(-s) : s),
                         "coefficient at n=" + std::to_string(n) + " r=" + std::to_string(r) + " " + a.describe());
            }
        }
    return o;
}

Outcome performance() {
    Outcome o;
    const Count c = count_compositions(10000, PartAlphabet::unrestricted());
    o.expect(c == power_of_two(9999), "c(10000) != 2^9999");
    const std::size_t digits = decimal_digits(c);
    o.expect(digits == 3011, "expected a 3011-digit result, got " + std::to_string(digits) + " digits");
    return o;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "c(n) = 2^(n-1): recurrence n<=200, det n<=40", 1.0, unrestricted_counts},
        {2, "c(n,[k]) = k-step Fibonacci, k=2..4, n<=40; brute n<=15", 5.0, bounded_parts},
        {3, "c(n, parts>=2) = F_(n-1), 2<=n<=60", 1.0, parts_at_least_two},
        {4, "det P_n = a_(n+1), battery n<=40; Bareiss n<=15", 10.0, determinants},
        {5, "subset minor sums = convolution n<=12; block products n<=8", 60.0, minor_sums},
        {6, "convolved Fibonacci identity, 0<=k<=n<=25", 5.0, convolved_fibonacci},
        {7, "ccw convolution = brute, battery n<=12 k<=4", 120.0, weak_by_convolution},
        {8, "minor-sum weak counts = brute, battery n<=12 k<=4", 0.0, weak_by_minors},
        {9, "unrestricted closed form = brute, n<=12 k<=6", 0.0, unrestricted_closed_form},
        {10, "parts {1,2} closed form = brute, n<=12 k<=4", 0.0, parts12_closed_form},
        {11, "parts>=2: closed = convolution; oracle discrepancy at (2,1)", 0.0, parts_ge2_adjudication},
        {12, "charpoly coefficients = signed minor sums, n<=10", 0.0, charpoly_coefficients},
        {13, "c(10000) by recurrence in < 5 s with 3011 digits", 5.0, performance},
    };
    return all;
}

bool run_one(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (o.ok && c.budget_seconds > 0 && elapsed.count() >= c.budget_seconds) {
        o.ok = false;
        o.detail = "over the time budget";
    }
    std::cout << "AC" << std::setw(2) << std::setfill('0') << c.id << ' ' << (o.ok ? "PASS" : "FAIL") << "  "
              << c.title << "  [" << std::fixed << std::setprecision(3) << elapsed.count() << " s";
    if (c.budget_seconds > 0) std::cout << " / " << std::setprecision(0) << c.budget_seconds << " s";
    std::cout << ']';
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << std::endl;
    return o.ok;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::string(argv[1]) == "--only") only = std::atoi(argv[2]);
    else if (argc != 1) {
        std::cerr << "usage: acceptance [--only N]\n";
        return 2;
    }
    int failures = 0, ran = 0;
    for (const auto& c : criteria()) {
        if (only && c.id != only) continue;
        ++ran;
        failures += !run_one(c);
    }
    if (ran == 0) {
        std::cerr << "no criterion " << only << '\n';
        return 2;
    }
    std::cout << (ran - failures) << '/' << ran << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
