#include "compcount/oracle.hpp"

#include <map>
#include <numeric>

#include "compcount/errors.hpp"

namespace compcount::oracle {

namespace {

void check_guard(const char* what, std::int64_t value, const Guards& guards) {
    if (value > guards.enumeration)
        throw GuardExceeded(std::string(what) + " = " + std::to_string(value) +
                            " exceeds the enumeration guard " + std::to_string(guards.enumeration) +
                            " (raise it with COMPCOUNT_GUARD)");
}

void check_nonnegative(const char* what, std::int64_t value) {
    if (value < 0) throw DomainError(std::string(what) + " must be >= 0, got " + std::to_string(value));
}

} // namespace

std::int64_t Composition::total() const {
    return std::accumulate(parts.begin(), parts.end(), std::int64_t{0},
                           [](std::int64_t s, const ColoredPart& p) { return s + p.value; });
}

namespace {

// reachable[s]: s is a sum of allowed parts (s = 0 always).
std::vector<bool> reachable_sums(const std::vector<Part>& parts, std::int64_t n) {
    std::vector<bool> ok(static_cast<std::size_t>(n + 1), false);
    ok[0] = true;
    for (std::int64_t s = 1; s <= n; ++s)
        for (const Part& p : parts)
            if (p.value <= s && ok[static_cast<std::size_t>(s - p.value)]) {
                ok[static_cast<std::size_t>(s)] = true;
                break;
            }
    return ok;
}

} // namespace

CompositionStream::CompositionStream(std::int64_t n, PartAlphabet alphabet, Guards guards) : n_(n) {
    check_nonnegative("n", n);
    check_guard("n", n, guards);
    parts_ = alphabet.parts_up_to(n);
    reachable_ = reachable_sums(parts_, n);
}

bool CompositionStream::first_values_from(std::size_t pos, std::int64_t remaining) {
    values_.resize(pos);
    while (remaining > 0) {
        bool placed = false;
        for (std::size_t j = 0; j < parts_.size() && parts_[j].value <= remaining; ++j) {
            if (reachable_[static_cast<std::size_t>(remaining - parts_[j].value)]) {
                values_.push_back(j);
                remaining -= parts_[j].value;
                placed = true;
                break;
            }
        }
        if (!placed) return false;
    }
    return true;
}

bool CompositionStream::advance_values() {
    std::int64_t prefix = 0;
    std::vector<std::int64_t> prefix_at(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        prefix_at[i] = prefix;
        prefix += parts_[values_[i]].value;
    }
    for (std::size_t i = values_.size(); i-- > 0;) {
        const std::int64_t remaining = n_ - prefix_at[i];
        for (std::size_t j = values_[i] + 1; j < parts_.size() && parts_[j].value <= remaining; ++j) {
            if (reachable_[static_cast<std::size_t>(remaining - parts_[j].value)]) {
                values_.resize(i);
                values_.push_back(j);
                return first_values_from(i + 1, remaining - parts_[j].value);
            }
        }
    }
    return false;
}

bool CompositionStream::advance_colors() {
    for (std::size_t i = colors_.size(); i-- > 0;) {
        if (colors_[i] < parts_[values_[i]].multiplicity) {
            ++colors_[i];
            for (std::size_t t = i + 1; t < colors_.size(); ++t) colors_[t] = 1;
            return true;
        }
    }
    return false;
}

std::optional<Composition> CompositionStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (!first_values_from(0, n_)) {
            done_ = true;
            return std::nullopt;
        }
        colors_.assign(values_.size(), 1);
    } else if (!advance_colors()) {
        if (!advance_values()) {
            done_ = true;
            return std::nullopt;
        }
        colors_.assign(values_.size(), 1);
    }
    Composition c;
    c.parts.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) c.parts.push_back({parts_[values_[i]].value, colors_[i]});
    return c;
}

std::vector<Composition> enumerate_compositions(std::int64_t n, const PartAlphabet& alphabet, Guards guards) {
    std::vector<Composition> out;
    CompositionStream stream(n, alphabet, guards);
    while (auto c = stream.next()) out.push_back(std::move(*c));
    return out;
}

void for_each_composition(std::int64_t n, const PartAlphabet& alphabet,
                          const std::function<void(const Composition&)>& visit, Guards guards) {
    CompositionStream stream(n, alphabet, guards);
    while (auto c = stream.next()) visit(*c);
}

Count count_compositions_brute(std::int64_t n, const PartAlphabet& alphabet, Guards guards) {
    Count total = 0;
    for_each_composition(n, alphabet, [&](const Composition&) { ++total; }, guards);
    return total;
}

namespace {

// Number of sequences completing the current prefix. Colors of a chosen part
// multiply rather than branch.
Count weak_sequences(std::int64_t remaining, std::int64_t zeros_left, const std::vector<Part>& parts) {
    Count total = (remaining == 0 && zeros_left == 0) ? 1 : 0;
    if (zeros_left > 0) total += weak_sequences(remaining, zeros_left - 1, parts);
    for (const Part& p : parts) {
        if (p.value > remaining) break;
        Count tail = weak_sequences(remaining - p.value, zeros_left, parts);
        if (p.multiplicity != 1) tail *= p.multiplicity;
        total += tail;
    }
    return total;
}

} // namespace

Count count_weak_brute(std::int64_t n, std::int64_t k, const PartAlphabet& alphabet, Guards guards) {
    check_nonnegative("n", n);
    check_nonnegative("k", k);
    check_guard("n", n, guards);
    check_guard("k", k, guards);
    return weak_sequences(n, k, alphabet.parts_up_to(n));
}

Count count_weak_insertion(std::int64_t n, std::int64_t k, const PartAlphabet& alphabet, Guards guards) {
    check_nonnegative("k", k);
    check_guard("k", k, guards);
    std::map<std::int64_t, Count> by_length;
    for_each_composition(
        n, alphabet, [&](const Composition& c) { ++by_length[static_cast<std::int64_t>(c.parts.size())]; },
        guards);
    Count total = 0;
    for (const auto& [p, count] : by_length) total += count * binomial(p + k, k);
    return total;
}

} // namespace compcount::oracle
