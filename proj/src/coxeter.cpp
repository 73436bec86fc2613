#include "racgk/coxeter.hpp"

#include <algorithm>
#include <cmath>

namespace racgk {

namespace detail {

struct WordAccess {
    static Word make(std::vector<Letter> letters) { return Word(std::move(letters)); }
};

}  // namespace detail

namespace {

using detail::WordAccess;

VertexMask bit(Letter v) { return VertexMask{1} << v; }

// Lexicographically least spelling of a reduced word. A letter may be moved
// to the front iff it commutes with every letter before it; repeatedly
// emitting the smallest such letter yields the least representative.
std::vector<Letter> lex_normalize(const Graph& g, std::vector<Letter> rest) {
    std::vector<Letter> out;
    out.reserve(rest.size());
    while (!rest.empty()) {
        VertexMask before = 0;
        std::size_t best = rest.size();
        for (std::size_t i = 0; i < rest.size(); ++i) {
            const Letter a = rest[i];
            if ((before & ~g.neighbors(a)) == 0 && (best == rest.size() || a < rest[best])) best = i;
            before |= bit(a);
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

// Whether s followed by the normal form w is again a normal form. It fails
// when s cancels against w (s is a left descent of w) or when some letter
// a < s commuting with s could be moved in front of s.
bool extends_normal_form(const Graph& g, Letter s, const std::vector<Letter>& w) {
    const VertexMask s_nbrs = g.neighbors(s);
    VertexMask before = 0;
    for (Letter a : w) {
        if ((before & ~g.neighbors(a)) == 0) {
            if (a == s) return false;
            if (a < s && ((s_nbrs >> a) & 1U)) return false;
        }
        before |= bit(a);
    }
    return true;
}

std::size_t count_next_level(const Graph& g, const std::vector<Word>& level) {
    std::size_t count = 0;
    for (Letter s = 0; s < g.size(); ++s) {
        for (const auto& w : level) count += extends_normal_form(g, s, w.letters()) ? 1 : 0;
    }
    return count;
}

std::vector<Word> next_level(const Graph& g, const std::vector<Word>& level) {
    std::vector<Word> out;
    for (Letter s = 0; s < g.size(); ++s) {
        for (const auto& w : level) {
            if (!extends_normal_form(g, s, w.letters())) continue;
            std::vector<Letter> letters;
            letters.reserve(w.length() + 1);
            letters.push_back(s);
            letters.insert(letters.end(), w.letters().begin(), w.letters().end());
            out.push_back(WordAccess::make(std::move(letters)));
        }
    }
    return out;
}

// Exact size so far plus the remaining levels extrapolated geometrically.
double project_ball_size(std::size_t total, std::size_t last, std::size_t next, std::size_t levels_left) {
    double projected = static_cast<double>(total) + static_cast<double>(next);
    const double ratio = last == 0 ? 0.0 : static_cast<double>(next) / static_cast<double>(last);
    double term = static_cast<double>(next);
    for (std::size_t j = 0; j < levels_left; ++j) {
        term *= ratio;
        projected += term;
    }
    return projected;
}

template <typename OnLevel>
void walk_levels(const Graph& g, std::size_t radius, std::size_t cap, OnLevel&& on_level) {
    std::vector<Word> level{Word{}};
    std::size_t total = 1;
    if (total > cap) throw BallTooLarge(radius, cap, 1.0);
    on_level(level);
    for (std::size_t k = 1; k <= radius; ++k) {
        if (level.empty()) {
            on_level(level);
            continue;
        }
        const std::size_t next = count_next_level(g, level);
        if (total + next > cap) {
            throw BallTooLarge(radius, cap, project_ball_size(total, level.size(), next, radius - k));
        }
        level = next_level(g, level);
        total += level.size();
        on_level(level);
    }
}

}  // namespace

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.letters() <=> b.letters();
}

std::string to_string(const Graph& g, const Word& w) {
    if (w.is_identity()) return "e";
    std::string out;
    for (Letter a : w.letters()) {
        if (!out.empty()) out += ' ';
        out += g.label(a);
    }
    return out;
}

Word normal_form(const Graph& g, std::span<const VertexIndex> letters) {
    // Free reduction modulo commutation: a new letter x cancels against the
    // last x whose successors all commute with x, otherwise it is appended.
    std::vector<Letter> reduced;
    reduced.reserve(letters.size());
    for (VertexIndex x : letters) {
        if (x >= g.size()) throw Error("unknown generator index " + std::to_string(x));
        bool cancelled = false;
        for (std::size_t i = reduced.size(); i-- > 0;) {
            if (reduced[i] == x) {
                reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
                cancelled = true;
                break;
            }
            if (!g.adjacent(reduced[i], x)) break;
        }
        if (!cancelled) reduced.push_back(static_cast<Letter>(x));
    }
    return WordAccess::make(lex_normalize(g, std::move(reduced)));
}

Word normal_form(const Graph& g, std::span<const std::string> labels) {
    std::vector<VertexIndex> letters;
    letters.reserve(labels.size());
    for (const auto& l : labels) letters.push_back(g.index_of(l));
    return normal_form(g, letters);
}

bool is_left_descent(const Graph& g, const Word& w, VertexIndex s) {
    if (s >= g.size()) throw Error("unknown generator index " + std::to_string(s));
    VertexMask before = 0;
    for (Letter a : w.letters()) {
        if (a == s) return (before & ~g.neighbors(s)) == 0;
        before |= bit(a);
    }
    return false;
}

GeneratorProduct mult_gen(const Graph& g, const Word& w, VertexIndex s) {
    if (s >= g.size()) throw Error("unknown generator index " + std::to_string(s));
    std::vector<Letter> letters = w.letters();
    int delta = +1;
    if (is_left_descent(g, w, s)) {
        letters.erase(std::find(letters.begin(), letters.end(), static_cast<Letter>(s)));
        delta = -1;
    } else {
        letters.insert(letters.begin(), static_cast<Letter>(s));
    }
    return GeneratorProduct{WordAccess::make(lex_normalize(g, std::move(letters))), delta};
}

BallTooLarge::BallTooLarge(std::size_t radius, std::size_t cap, double projected_size)
    : Error("ball of radius " + std::to_string(radius) + " exceeds the element cap of " + std::to_string(cap) +
            " (projected size ~" + std::to_string(static_cast<long long>(std::llround(projected_size))) + ")"),
      cap_(cap),
      projected_(projected_size) {}

Ball::Ball(const Graph& g, std::size_t radius, std::size_t element_cap) : radius_(radius) {
    if (g.empty()) throw Error("ball: empty commutation graph");
    walk_levels(g, radius, element_cap, [&](const std::vector<Word>& level) {
        level_sizes_.push_back(level.size());
        words_.insert(words_.end(), level.begin(), level.end());
    });
}

std::optional<std::size_t> Ball::index_of(const Word& w) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - words_.begin());
}

std::vector<std::uint64_t> growth_sequence(const Graph& g, std::size_t radius, std::size_t element_cap) {
    if (g.empty()) throw Error("growth_sequence: empty commutation graph");
    std::vector<std::uint64_t> sizes;
    walk_levels(g, radius, element_cap, [&](const std::vector<Word>& level) { sizes.push_back(level.size()); });
    return sizes;
}

}  // namespace racgk
