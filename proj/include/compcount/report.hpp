#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "compcount/count.hpp"

namespace compcount {

enum class Verdict { agree, disagree };

std::string to_string(Verdict v);

/// One grid point of an identity check. The verdict is derived, never set:
/// agree iff every present value is equal.
struct ReportPoint {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::string alphabet; // empty when the identity has no alphabet parameter
    Count lhs;
    Count rhs;
    std::optional<Count> oracle;

    bool lhs_equals_rhs() const { return lhs == rhs; }
    /// True when there is no oracle value.
    bool oracle_agrees() const;
    Verdict verdict() const;
};

/// Comparison of two computed routes (lhs, rhs) against an optional oracle
/// over a parameter grid.
struct VerificationReport {
    std::string identity;
    std::string lhs_label;
    std::string rhs_label;
    std::string oracle_label; // empty when no oracle column
    std::int64_t max_n = 0;
    std::int64_t max_k = 0;
    std::vector<ReportPoint> points;
    /// Free-form findings (one line each) appended by adjudication.
    std::vector<std::string> notes;

    bool lhs_equals_rhs_everywhere() const;
    bool oracle_agrees_everywhere() const;
    Verdict verdict() const;
    /// Points whose verdict is disagree.
    std::vector<ReportPoint> disagreements() const;
};

/// Schema: {identity, lhs_label, rhs_label, oracle_label, grid{max_n,max_k},
/// records[{identity,n,k,alphabet?,lhs,rhs,oracle,verdict}], summary{...},
/// notes[]}. Counts are decimal strings; a missing oracle is null.
nlohmann::json to_json(const VerificationReport& report);

/// Whitespace-separated text, header line first:
/// "identity n k alphabet lhs rhs oracle verdict" ("-" marks absent fields),
/// then "# " prefixed summary and note lines.
std::string to_text(const VerificationReport& report);

} // namespace compcount
