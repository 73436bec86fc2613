#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "racgk/error.hpp"
#include "racgk/graph.hpp"

namespace racgk {

using Letter = std::uint8_t;

namespace detail {
struct WordAccess;
}

/// An element of the right-angled Coxeter group W whose commutation graph is
/// a given Graph, held as its ShortLex normal form with respect to the graph's
/// vertex order.
///
/// Words are only produced by normal_form(), mult_gen() and ball(), so the
/// letters are always reduced (no cancellable pair s ... s with everything in
/// between commuting with s) and lexicographically least among all reduced
/// spellings. Two Words built over the same graph are equal iff they denote
/// the same group element.
class Word {
public:
    /// The identity element.
    Word() = default;

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool is_identity() const noexcept { return letters_.empty(); }

    /// ShortLex: length first, then lexicographic on vertex indices.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;

private:
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::vector<Letter> letters_;

    friend struct detail::WordAccess;
};

std::string to_string(const Graph& g, const Word& w);

/// Normal form of an arbitrary product of generators. Throws on letters that
/// are not vertices of g.
Word normal_form(const Graph& g, std::span<const VertexIndex> letters);
Word normal_form(const Graph& g, std::span<const std::string> labels);

/// True iff |s w| < |w|, i.e. s can be brought to the front of w.
bool is_left_descent(const Graph& g, const Word& w, VertexIndex s);

struct GeneratorProduct {
    Word word;          // normal form of s * w
    int length_delta;   // |s w| - |w|, always +1 or -1
};

/// Left multiplication by a generator.
GeneratorProduct mult_gen(const Graph& g, const Word& w, VertexIndex s);

inline constexpr std::size_t kDefaultElementCap = 2'000'000;

/// Thrown when a ball would hold more than the configured number of
/// elements. projected_size() is the exact size through the first level that
/// overflowed plus a geometric extrapolation of the remaining levels.
class BallTooLarge : public Error {
public:
    BallTooLarge(std::size_t radius, std::size_t cap, double projected_size);

    std::size_t cap() const noexcept { return cap_; }
    double projected_size() const noexcept { return projected_; }

private:
    std::size_t cap_;
    double projected_;
};

/// All elements of length <= radius, length-major and ShortLex within each
/// length. A word's position is its basis index in the truncated l^2(W).
/// Enumeration stops early once a level is empty (finite groups).
class Ball {
public:
    Ball(const Graph& g, std::size_t radius, std::size_t element_cap = kDefaultElementCap);

    std::size_t radius() const noexcept { return radius_; }
    std::size_t size() const noexcept { return words_.size(); }
    const Word& operator[](std::size_t i) const { return words_.at(i); }
    std::span<const Word> words() const noexcept { return words_; }

    /// Index of w, or nullopt when |w| > radius.
    std::optional<std::size_t> index_of(const Word& w) const;

    /// s_k for k = 0..radius (trailing zeros for finite groups).
    const std::vector<std::uint64_t>& level_sizes() const noexcept { return level_sizes_; }

private:
    std::size_t radius_;
    std::vector<Word> words_;
    std::vector<std::uint64_t> level_sizes_;
};

inline Ball ball(const Graph& g, std::size_t radius, std::size_t element_cap = kDefaultElementCap) {
    return Ball(g, radius, element_cap);
}

/// [s_0, ..., s_radius]: the number of elements of each exact length. Only
/// one level is held in memory at a time; the element cap applies to the
/// running total as it does for Ball.
std::vector<std::uint64_t> growth_sequence(const Graph& g, std::size_t radius,
                                           std::size_t element_cap = kDefaultElementCap);

}  // namespace racgk
