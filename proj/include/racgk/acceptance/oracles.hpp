#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "racgk/graph.hpp"
#include "racgk/rational.hpp"

// Brute-force reference implementations. They share no code with the
// algorithms they check and are only fast enough for desk-scale inputs.

namespace racgk::oracle {

/// Every vertex subset tested for pairwise adjacency, sorted by clique_order.
std::vector<Clique> subset_cliques(const Graph& g);

/// ShortLex-least word reachable from `letters` by deleting adjacent equal
/// letters and swapping adjacent commuting letters, found by exhaustive
/// closure.
std::vector<VertexIndex> closure_normal_form(const Graph& g, std::span<const VertexIndex> letters);

/// Whether x lies in Z + yZ, by testing x - k*y for integrality over
/// k = 0 .. den(y) - 1. Requires numerators and denominators below 2^31.
bool lattice_contains(const Rational& x, const Rational& y);

}  // namespace racgk::oracle
