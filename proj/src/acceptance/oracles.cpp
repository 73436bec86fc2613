#include "racgk/acceptance/oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "racgk/error.hpp"

namespace racgk::oracle {

std::vector<Clique> subset_cliques(const Graph& g) {
    if (g.size() > 20) throw Error("subset_cliques: too many vertices for exhaustive search");
    std::vector<Clique> out;
    const std::uint64_t subsets = std::uint64_t{1} << g.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        Clique c;
        for (VertexIndex v = 0; v < g.size(); ++v) {
            if ((mask >> v) & 1U) c.members.push_back(v);
        }
        bool pairwise = true;
        for (std::size_t i = 0; i < c.size() && pairwise; ++i) {
            for (std::size_t j = i + 1; j < c.size() && pairwise; ++j) pairwise = g.adjacent(c.members[i], c.members[j]);
        }
        if (pairwise) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), clique_order);
    return out;
}

std::vector<VertexIndex> closure_normal_form(const Graph& g, std::span<const VertexIndex> letters) {
    using RawWord = std::vector<VertexIndex>;
    auto shortlex_less = [](const RawWord& a, const RawWord& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    };
    RawWord start(letters.begin(), letters.end());
    for (auto s : start) {
        if (s >= g.size()) throw Error("closure_normal_form: letter out of range");
    }
    std::set<RawWord> seen{start};
    std::deque<RawWord> queue{start};
    RawWord best = start;
    while (!queue.empty()) {
        RawWord w = std::move(queue.front());
        queue.pop_front();
        if (shortlex_less(w, best)) best = w;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            RawWord next = w;
            if (w[i] == w[i + 1]) {
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i), next.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            } else if (g.adjacent(w[i], w[i + 1])) {
                std::swap(next[i], next[i + 1]);
            } else {
                continue;
            }
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return best;
}

bool lattice_contains(const Rational& x, const Rational& y) {
    auto small = [](const Integer& z) { return z.fits_slong_p() && abs(z) < (Integer(1) << 31); };
    if (!small(x.get_num()) || !small(x.get_den()) || !small(y.get_num()) || !small(y.get_den())) {
        throw Error("lattice_contains: inputs too large for the bounded search");
    }
    __extension__ using Wide = __int128;
    const Wide a = x.get_num().get_si(), b = x.get_den().get_si();
    const Wide c = y.get_num().get_si(), d = y.get_den().get_si();
    // x - k y = (a d - k c b) / (b d)
    for (Wide k = 0; k < d; ++k) {
        if ((a * d - k * c * b) % (b * d) == 0) return true;
    }
    return false;
}

}  // namespace racgk::oracle
