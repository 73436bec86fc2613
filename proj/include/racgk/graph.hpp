#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace racgk {

using VertexIndex = std::size_t;
using VertexMask = std::uint64_t;

/// Finite simplicial graph with labelled vertices.
///
/// Vertex order is the insertion order and is significant: it fixes the
/// generator order of the Coxeter system and hence every normal form and
/// every basis ordering downstream. Adjacency is stored as one bitmask per
/// vertex, so graphs are limited to kMaxVertices vertices (which also keeps
/// every clique count within 64 bits).
class Graph {
public:
    static constexpr std::size_t kMaxVertices = 63;

    /// The empty graph. Valid as a subgraph (e.g. Link of an isolated
    /// vertex) but not as a commutation graph.
    Graph() = default;

    /// Edgeless graph on the given labels. Throws on duplicates, empty
    /// labels, or more than kMaxVertices vertices.
    explicit Graph(std::vector<std::string> labels);

    /// Adds the undirected edge {a, b}. Adding an existing edge is a no-op;
    /// self-loops throw.
    void add_edge(VertexIndex a, VertexIndex b);
    void add_edge(std::string_view a, std::string_view b);

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(VertexIndex v) const { return labels_.at(v); }

    std::optional<VertexIndex> find(std::string_view label) const;
    /// Like find() but throws racgk::Error on an unknown label.
    VertexIndex index_of(std::string_view label) const;

    bool adjacent(VertexIndex a, VertexIndex b) const { return (adj_.at(a) >> b) & 1U; }
    VertexMask neighbors(VertexIndex v) const { return adj_.at(v); }
    VertexMask all_vertices() const noexcept;

    std::size_t edge_count() const;
    /// Edges as (smaller index, larger index), sorted.
    std::vector<std::pair<VertexIndex, VertexIndex>> edges() const;

    bool is_complete() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<VertexMask> adj_;
};

/// A vertex subset whose members are pairwise adjacent, stored sorted in the
/// ambient graph's vertex order. The empty clique is valid.
struct Clique {
    std::vector<VertexIndex> members;

    std::size_t size() const noexcept { return members.size(); }
    bool empty() const noexcept { return members.empty(); }
    VertexMask mask() const noexcept;

    friend bool operator==(const Clique&, const Clique&) = default;
};

/// Size first, then lexicographic on vertex indices.
bool clique_order(const Clique& a, const Clique& b);

bool is_clique(const Graph& g, std::span<const VertexIndex> vertices);

std::vector<std::string> clique_labels(const Graph& g, const Clique& c);

/// Parses the line-oriented graph format:
///
///     # comment
///     vertices a b c
///     edge a b
///
/// Errors (ParseError) name the offending line.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph up to comments and whitespace.
std::string format_graph(const Graph& g);

Graph induced_subgraph(const Graph& g, VertexMask keep);
Graph induced_subgraph(const Graph& g, std::span<const VertexIndex> keep);
Graph induced_subgraph(const Graph& g, std::span<const std::string> keep);

Graph link(const Graph& g, VertexIndex v);
Graph star(const Graph& g, VertexIndex v);
/// The induced subgraph on all vertices except v.
Graph remove_vertex(const Graph& g, VertexIndex v);

/// All cliques including the empty one, in clique_order.
std::vector<Clique> enumerate_cliques(const Graph& g);

/// Picks the vertex to split on; only called on non-complete graphs with at
/// least two vertices.
using PivotRule = std::function<VertexIndex(const Graph&)>;

/// First vertex in input order whose star is not the whole graph.
VertexIndex default_pivot(const Graph& g);

/// Counts cliques through N(G) = N(Link(v)) + N(G \ v), with N(empty) = 1,
/// N(single vertex) = 2 and N(K_n) = 2^n.
std::uint64_t clique_count_recursive(const Graph& g);
std::uint64_t clique_count_recursive(const Graph& g, const PivotRule& pivot);

std::size_t max_clique_size(const Graph& g);

/// True iff the complement graph is connected, i.e. the Coxeter group does
/// not split as a direct product along a vertex partition. Throws on the
/// empty graph.
bool is_irreducible(const Graph& g);

// Named graphs used throughout tests and the CLI. Labels are a, b, c, ...
// (v26, v27, ... past the alphabet).
Graph edgeless_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

}  // namespace racgk
