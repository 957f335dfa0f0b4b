#include "compcount/alphabet.hpp"

#include <algorithm>

#include "compcount/errors.hpp"

namespace compcount {

PartAlphabet PartAlphabet::explicit_parts(std::vector<Part> parts) {
    if (parts.empty()) throw DomainError("alphabet must contain at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Part& p = parts[i];
        if (p.value < 1) throw DomainError("part values must be >= 1, got " + std::to_string(p.value));
        if (p.multiplicity < 1)
            throw DomainError("multiplicity of part " + std::to_string(p.value) + " must be >= 1");
        if (i > 0 && parts[i - 1].value >= p.value)
            throw DomainError("part values must be strictly increasing");
    }
    PartAlphabet a;
    a.parts_ = std::move(parts);
    return a;
}

PartAlphabet PartAlphabet::of_values(const std::vector<std::int64_t>& values) {
    std::vector<Part> parts;
    parts.reserve(values.size());
    for (auto v : values) parts.push_back({v, 1});
    return explicit_parts(std::move(parts));
}

PartAlphabet PartAlphabet::at_least(std::int64_t threshold) {
    if (threshold < 1) throw DomainError("at-least threshold must be >= 1");
    PartAlphabet a;
    a.threshold_ = threshold;
    return a;
}

PartAlphabet PartAlphabet::up_to(std::int64_t k) {
    if (k < 1) throw DomainError("upto bound must be >= 1");
    std::vector<Part> parts;
    for (std::int64_t v = 1; v <= k; ++v) parts.push_back({v, 1});
    return explicit_parts(std::move(parts));
}

std::int64_t PartAlphabet::multiplicity(std::int64_t m) const {
    if (threshold_) return m >= *threshold_ ? 1 : 0;
    auto it = std::lower_bound(parts_.begin(), parts_.end(), m,
                               [](const Part& p, std::int64_t v) { return p.value < v; });
    return (it != parts_.end() && it->value == m) ? it->multiplicity : 0;
}

std::vector<Part> PartAlphabet::parts_up_to(std::int64_t limit) const {
    std::vector<Part> out;
    if (threshold_) {
        for (std::int64_t v = *threshold_; v <= limit; ++v) out.push_back({v, 1});
        return out;
    }
    for (const Part& p : parts_) {
        if (p.value > limit) break;
        out.push_back(p);
    }
    return out;
}

std::int64_t PartAlphabet::min_part() const {
    return threshold_ ? *threshold_ : parts_.front().value;
}

std::string PartAlphabet::describe() const {
    if (threshold_) return "atleast:" + std::to_string(*threshold_);
    std::string s;
    for (const Part& p : parts_) {
        if (!s.empty()) s += ',';
        s += std::to_string(p.value);
        if (p.multiplicity != 1) s += "x" + std::to_string(p.multiplicity);
    }
    return s;
}

std::vector<PartAlphabet> battery_alphabets() {
    return {
        PartAlphabet::at_least(1),
        PartAlphabet::of_values({1, 2}),
        PartAlphabet::of_values({1, 2, 3}),
        PartAlphabet::at_least(2),
        PartAlphabet::explicit_parts({{1, 2}}),
        PartAlphabet::explicit_parts({{1, 1}, {2, 3}}),
    };
}

} // namespace compcount
