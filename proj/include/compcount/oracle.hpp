#pragma once

// Brute-force ground truth. Everything here walks the objects themselves and
// never touches a recurrence, determinant or closed form.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "compcount/alphabet.hpp"
#include "compcount/count.hpp"
#include "compcount/guards.hpp"

namespace compcount::oracle {

/// A part of a (possibly weak) composition. Zeros always carry color 1.
struct ColoredPart {
    std::int64_t value = 0;
    std::int64_t color = 1;

    friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

struct Composition {
    std::vector<ColoredPart> parts;

    std::int64_t total() const;
    friend bool operator==(const Composition&, const Composition&) = default;
};

/// Pull-style stream over every colored composition of n.
///
/// Order: value sequences ascend lexicographically; within one value sequence
/// the color sequences ascend lexicographically. n = 0 yields the empty
/// composition once.
class CompositionStream {
public:
    /// Throws GuardExceeded if n exceeds guards.enumeration.
    CompositionStream(std::int64_t n, PartAlphabet alphabet, Guards guards = Guards::from_environment());

    std::optional<Composition> next();

private:
    bool advance_values();
    bool advance_colors();
    bool first_values_from(std::size_t pos, std::int64_t remaining);

    std::int64_t n_;
    std::vector<Part> parts_; // allowed parts <= n, ascending
    std::vector<bool> reachable_;
    // Current value sequence as indices into parts_, and current colors.
    std::vector<std::size_t> values_;
    std::vector<std::int64_t> colors_;
    bool started_ = false;
    bool done_ = false;
};

/// Materializes the stream. Intended for small n.
std::vector<Composition> enumerate_compositions(std::int64_t n, const PartAlphabet& alphabet,
                                                Guards guards = Guards::from_environment());

/// Calls visit(composition) for every element of the stream.
void for_each_composition(std::int64_t n, const PartAlphabet& alphabet,
                          const std::function<void(const Composition&)>& visit,
                          Guards guards = Guards::from_environment());

/// c(n, alphabet) by exhaustion.
Count count_compositions_brute(std::int64_t n, const PartAlphabet& alphabet,
                               Guards guards = Guards::from_environment());

/// Weak compositions of n with exactly k zeros, counted by recursive
/// enumeration of the sequences (part by part, zero or allowed value).
Count count_weak_brute(std::int64_t n, std::int64_t k, const PartAlphabet& alphabet,
                       Guards guards = Guards::from_environment());

/// Semi-independent check: sum over zero-free compositions with p parts of
/// C(p + k, k), the ways to drop k zeros into the p + 1 gaps.
Count count_weak_insertion(std::int64_t n, std::int64_t k, const PartAlphabet& alphabet,
                           Guards guards = Guards::from_environment());

} // namespace compcount::oracle
