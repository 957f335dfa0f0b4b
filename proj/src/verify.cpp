#include "compcount/verify.hpp"

#include "compcount/alphabet.hpp"
#include "compcount/errors.hpp"
#include "compcount/oracle.hpp"
#include "compcount/weak.hpp"

namespace compcount {

namespace {

constexpr struct {
    Identity id;
    const char* name;
    GridBounds grid;
} kIdentities[] = {
    {Identity::eq1, "eq1", {25, 25}},   {Identity::thm8, "thm8", {12, 4}},   {Identity::thm9, "thm9", {12, 4}},
    {Identity::thm10, "thm10", {12, 6}}, {Identity::thm11, "thm11", {12, 4}}, {Identity::thm12, "thm12", {6, 2}},
};

void check_oracle_guard(GridBounds grid, const Guards& guards) {
    if (grid.max_n > guards.enumeration || grid.max_k > guards.enumeration)
        throw GuardExceeded("grid (" + std::to_string(grid.max_n) + ", " + std::to_string(grid.max_k) +
                            ") exceeds the enumeration guard " + std::to_string(guards.enumeration));
}

VerificationReport make_report(Identity id, GridBounds grid, std::string lhs, std::string rhs,
                               std::string oracle) {
    VerificationReport r;
    r.identity = identity_name(id);
    r.lhs_label = std::move(lhs);
    r.rhs_label = std::move(rhs);
    r.oracle_label = std::move(oracle);
    r.max_n = grid.max_n;
    r.max_k = grid.max_k;
    return r;
}

VerificationReport run_eq1(GridBounds grid) {
    auto r = make_report(Identity::eq1, grid, "sum over j_1+..+j_{k+1}=n-k of prod F_{j_t+1}",
                         "sum_i C(n-i,i) C(n-2i,k)", "");
    for (std::int64_t n = 0; n <= grid.max_n; ++n)
        for (std::int64_t k = 0; k <= n; ++k)
            r.points.push_back({n, k, "", convolved_fib_lhs(n, k), convolved_fib_rhs(n, k), std::nullopt});
    return r;
}

VerificationReport run_battery(Identity id, GridBounds grid, const Guards& guards) {
    check_oracle_guard(grid, guards);
    const bool minors = id == Identity::thm9;
    auto r = minors ? make_report(id, grid, "minor sum of P_{n+k} (convolution)", "minor sum of P_{n+k} (charpoly)",
                                  "brute cw(n,k,A)")
                    : make_report(id, grid, "ccw convolution", "zero-insertion count", "brute cw(n,k,A)");
    for (const auto& alphabet : battery_alphabets()) {
        for (std::int64_t n = 0; n <= grid.max_n; ++n) {
            for (std::int64_t k = 0; k <= grid.max_k; ++k) {
                ReportPoint p;
                p.n = n;
                p.k = k;
                p.alphabet = alphabet.describe();
                if (minors) {
                    p.lhs = cw_via_minors(n, k, alphabet, MinorRoute::convolution, guards);
                    p.rhs = cw_via_minors(n, k, alphabet, MinorRoute::charpoly, guards);
                } else {
                    p.lhs = ccw_convolution(n, k, alphabet);
                    p.rhs = oracle::count_weak_insertion(n, k, alphabet, guards);
                }
                p.oracle = oracle::count_weak_brute(n, k, alphabet, guards);
                r.points.push_back(std::move(p));
            }
        }
    }
    return r;
}

VerificationReport run_closed(Identity id, GridBounds grid, const Guards& guards) {
    check_oracle_guard(grid, guards);
    const bool unrestricted = id == Identity::thm10;
    const PartAlphabet alphabet = unrestricted ? PartAlphabet::unrestricted() : PartAlphabet::of_values({1, 2});
    auto r = unrestricted ? make_report(id, grid, "2^{n-k-1} sum_i 2^i C(k+1,i) C(n-1,k-i)", "ccw convolution",
                                        "brute cw(n,k)")
                          : make_report(id, grid, "sum_i C(n+k-i,i) C(n+k-2i,k)", "ccw convolution",
                                        "brute cw(n,k,[2])");
    for (std::int64_t n = unrestricted ? 1 : 0; n <= grid.max_n; ++n) {
        for (std::int64_t k = 0; k <= grid.max_k; ++k) {
            ReportPoint p;
            p.n = n;
            p.k = k;
            p.alphabet = alphabet.describe();
            p.lhs = unrestricted ? cw_unrestricted_closed(n, k) : cw_parts12_closed(n, k);
            p.rhs = ccw_convolution(n, k, alphabet);
            p.oracle = oracle::count_weak_brute(n, k, alphabet, guards);
            r.points.push_back(std::move(p));
        }
    }
    return r;
}

} // namespace

std::optional<Identity> parse_identity(const std::string& name) {
    for (const auto& e : kIdentities)
        if (name == e.name) return e.id;
    return std::nullopt;
}

std::string identity_name(Identity id) {
    for (const auto& e : kIdentities)
        if (e.id == id) return e.name;
    return "?";
}

std::vector<Identity> all_identities() {
    std::vector<Identity> out;
    for (const auto& e : kIdentities) out.push_back(e.id);
    return out;
}

GridBounds default_grid(Identity id) {
    for (const auto& e : kIdentities)
        if (e.id == id) return e.grid;
    return {};
}

VerificationReport run_identity(Identity id, GridBounds grid, Guards guards) {
    if (grid.max_n < 0 || grid.max_k < 0) throw DomainError("grid bounds must be >= 0");
    switch (id) {
    case Identity::eq1:
        return run_eq1(grid);
    case Identity::thm8:
    case Identity::thm9:
        return run_battery(id, grid, guards);
    case Identity::thm10:
    case Identity::thm11:
        return run_closed(id, grid, guards);
    case Identity::thm12:
        return adjudicate_theorem12(grid.max_n, grid.max_k, guards);
    }
    throw DomainError("unknown identity");
}

} // namespace compcount
