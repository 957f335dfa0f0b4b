#include "compcount/report.hpp"

#include <algorithm>

namespace compcount {

std::string to_string(Verdict v) { return v == Verdict::agree ? "agree" : "disagree"; }

bool ReportPoint::oracle_agrees() const {
    return !oracle || (*oracle == lhs && *oracle == rhs);
}

Verdict ReportPoint::verdict() const {
    return lhs_equals_rhs() && oracle_agrees() ? Verdict::agree : Verdict::disagree;
}

bool VerificationReport::lhs_equals_rhs_everywhere() const {
    return std::all_of(points.begin(), points.end(), [](const ReportPoint& p) { return p.lhs_equals_rhs(); });
}

bool VerificationReport::oracle_agrees_everywhere() const {
    return std::all_of(points.begin(), points.end(), [](const ReportPoint& p) { return p.oracle_agrees(); });
}

Verdict VerificationReport::verdict() const {
    return lhs_equals_rhs_everywhere() && oracle_agrees_everywhere() ? Verdict::agree : Verdict::disagree;
}

std::vector<ReportPoint> VerificationReport::disagreements() const {
    std::vector<ReportPoint> out;
    std::copy_if(points.begin(), points.end(), std::back_inserter(out),
                 [](const ReportPoint& p) { return p.verdict() == Verdict::disagree; });
    return out;
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& p : report.points) {
        nlohmann::json r{
            {"identity", report.identity},
            {"n", p.n},
            {"k", p.k},
            {"lhs", p.lhs.get_str()},
            {"rhs", p.rhs.get_str()},
            {"oracle", p.oracle ? nlohmann::json(p.oracle->get_str()) : nlohmann::json(nullptr)},
            {"verdict", to_string(p.verdict())},
        };
        if (!p.alphabet.empty()) r["alphabet"] = p.alphabet;
        records.push_back(std::move(r));
    }
    return {
        {"identity", report.identity},
        {"lhs_label", report.lhs_label},
        {"rhs_label", report.rhs_label},
        {"oracle_label", report.oracle_label.empty() ? nlohmann::json(nullptr) : nlohmann::json(report.oracle_label)},
        {"grid", {{"max_n", report.max_n}, {"max_k", report.max_k}}},
        {"records", std::move(records)},
        {"summary",
         {{"points", report.points.size()},
          {"lhs_equals_rhs", report.lhs_equals_rhs_everywhere()},
          {"oracle_agrees", report.oracle_agrees_everywhere()},
          {"disagreements", report.disagreements().size()},
          {"verdict", to_string(report.verdict())}}},
        {"notes", report.notes},
    };
}

std::string to_text(const VerificationReport& report) {
    std::string out = "identity n k alphabet lhs rhs oracle verdict\n";
    for (const auto& p : report.points) {
        out += report.identity + ' ' + std::to_string(p.n) + ' ' + std::to_string(p.k) + ' ' +
               (p.alphabet.empty() ? "-" : p.alphabet) + ' ' + p.lhs.get_str() + ' ' + p.rhs.get_str() + ' ' +
               (p.oracle ? p.oracle->get_str() : "-") + ' ' + to_string(p.verdict()) + '\n';
    }
    out += "# " + report.identity + ": lhs = " + report.lhs_label + "; rhs = " + report.rhs_label;
    if (!report.oracle_label.empty()) out += "; oracle = " + report.oracle_label;
    out += '\n';
    out += "# " + report.identity + ": lhs==rhs " + (report.lhs_equals_rhs_everywhere() ? "everywhere" : "NOT everywhere");
    if (!report.oracle_label.empty())
        out += std::string("; oracle ") + (report.oracle_agrees_everywhere() ? "agrees everywhere" : "DISAGREES");
    out += "; verdict " + to_string(report.verdict()) + '\n';
    for (const auto& note : report.notes) out += "# " + report.identity + ": " + note + '\n';
    return out;
}

} // namespace compcount
