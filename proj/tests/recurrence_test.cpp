#include <doctest.h>

#include <thread>

#include "compcount/count.hpp"
#include "compcount/errors.hpp"
#include "compcount/oracle.hpp"
#include "compcount/recurrence.hpp"

using namespace compcount;

namespace {

std::vector<Count> counts(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("coefficient vectors") {
    CHECK(build_coeffs(PartAlphabet::of_values({1, 2}), 4).values() == counts({1, 1, 0, 0}));
    CHECK(build_coeffs(PartAlphabet::explicit_parts({{1, 2}}), 3).values() == counts({2, 0, 0}));
    CHECK(build_coeffs(PartAlphabet::at_least(2), 4).values() == counts({0, 1, 1, 1}));
    CHECK(build_coeffs(PartAlphabet::at_least(5), 3).values() == counts({0, 0, 0}));
    const auto c = build_coeffs(PartAlphabet::of_values({1, 2}), 2);
    CHECK(c.at(7) == 0);
    CHECK_THROWS_AS(c.at(0), IndexOutOfRange);
    CHECK_THROWS_AS(build_coeffs(PartAlphabet::of_values({1}), 0), DomainError);
}

TEST_CASE("sequence prefixes") {
    CHECK(sequence_prefix(PartAlphabet::unrestricted(), 4).terms() == counts({1, 1, 2, 4, 8}));
    CHECK(sequence_prefix(PartAlphabet::of_values({1, 2}), 5).terms() == counts({1, 1, 2, 3, 5, 8}));
    CHECK(sequence_prefix(PartAlphabet::at_least(2), 6).terms() == counts({1, 0, 1, 1, 2, 3, 5}));
    CHECK_THROWS_AS(sequence_prefix(PartAlphabet::unrestricted(), 0), DomainError);
    const auto s = sequence_prefix(PartAlphabet::unrestricted(), 2);
    CHECK_THROWS_AS(s.a(0), IndexOutOfRange);
    CHECK_THROWS_AS(s.a(4), IndexOutOfRange);
}

TEST_CASE("fast prefix matches direct evaluation of the coefficient recurrence") {
    for (const auto& a : battery_alphabets()) {
        const std::int64_t n = 30;
        CHECK(sequence_prefix(a, n).terms() == sequence_from_coeffs(build_coeffs(a, n), n).terms());
    }
}

TEST_CASE("composition counts") {
    CHECK(count_compositions(10, PartAlphabet::up_to(10)) == 512);
    CHECK(count_compositions(10, PartAlphabet::unrestricted()) == 512);
    CHECK(count_compositions(7, PartAlphabet::of_values({1, 2, 3})) == 44);
    for (const auto& a : battery_alphabets()) CHECK(count_compositions(0, a) == 1);
    CHECK_THROWS_AS(count_compositions(-1, PartAlphabet::unrestricted()), DomainError);
}

TEST_CASE("recurrence agrees with enumeration on the battery") {
    for (const auto& a : battery_alphabets())
        for (std::int64_t n = 0; n <= 15; ++n) CHECK(count_compositions(n, a) == oracle::count_compositions_brute(n, a));
}

TEST_CASE("classical closed forms") {
    for (std::int64_t n = 1; n <= 200; ++n) CHECK(count_compositions(n, PartAlphabet::unrestricted()) == power_of_two(n - 1));
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t n = 0; n <= 40; ++n)
            CHECK(count_compositions(n, PartAlphabet::up_to(k)) == kstep_fibonacci(k, n + 1));
    for (std::int64_t n = 2; n <= 60; ++n) CHECK(count_compositions(n, PartAlphabet::at_least(2)) == fibonacci(n - 1));
}

TEST_CASE("unbounded alphabets match their explicit truncation") {
    for (std::int64_t threshold = 1; threshold <= 3; ++threshold) {
        for (std::int64_t n = 1; n <= 40; ++n) {
            std::vector<std::int64_t> values;
            for (std::int64_t v = threshold; v <= std::max(threshold, n); ++v) values.push_back(v);
            CHECK(count_compositions(n, PartAlphabet::at_least(threshold)) ==
                  count_compositions(n, PartAlphabet::of_values(values)));
        }
    }
}

TEST_CASE("memo table grows monotonically and serves earlier prefixes") {
    CompositionCounter counter(PartAlphabet::explicit_parts({{1, 1}, {2, 3}}));
    const Count big = counter.count(50);
    CHECK(counter.count(7) == oracle::count_compositions_brute(7, counter.alphabet()));
    CHECK(counter.count(50) == big);
    CHECK(counter.counts_up_to(3) == counts({1, 1, 4, 7}));
}

TEST_CASE("counter is safe under concurrent readers") {
    CompositionCounter counter(PartAlphabet::of_values({1, 3, 4}));
    const Count expected = count_compositions(400, counter.alphabet());
    std::vector<std::thread> threads;
    std::vector<int> ok(8, 0);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] {
            bool good = true;
            for (std::int64_t n = t; n <= 400; n += 8) good = good && counter.count(n) == count_compositions(n, counter.alphabet());
            ok[static_cast<std::size_t>(t)] = good && counter.count(400) == expected;
        });
    for (auto& th : threads) th.join();
    for (int v : ok) CHECK(v == 1);
}
