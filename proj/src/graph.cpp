#include "racgk/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "racgk/error.hpp"

namespace racgk {

namespace {

VertexMask bit(VertexIndex v) { return VertexMask{1} << v; }

std::vector<VertexIndex> mask_members(VertexMask m) {
    std::vector<VertexIndex> out;
    while (m != 0) {
        out.push_back(static_cast<VertexIndex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

std::string default_label(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "v" + std::to_string(i);
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(default_label(i));
    return labels;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)), adj_(labels_.size(), 0) {
    if (labels_.size() > kMaxVertices) {
        throw Error("graph has " + std::to_string(labels_.size()) + " vertices; at most " +
                    std::to_string(kMaxVertices) + " are supported");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw Error("empty vertex label");
        if (!seen.insert(l).second) throw Error("duplicate vertex '" + l + "'");
    }
}

void Graph::add_edge(VertexIndex a, VertexIndex b) {
    if (a >= size() || b >= size()) throw Error("edge endpoint out of range");
    if (a == b) throw Error("self-loop at vertex '" + labels_[a] + "'");
    adj_[a] |= bit(b);
    adj_[b] |= bit(a);
}

void Graph::add_edge(std::string_view a, std::string_view b) { add_edge(index_of(a), index_of(b)); }

std::optional<VertexIndex> Graph::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<VertexIndex>(it - labels_.begin());
}

VertexIndex Graph::index_of(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw Error("unknown vertex '" + std::string(label) + "'");
}

VertexMask Graph::all_vertices() const noexcept {
    return size() == 64 ? ~VertexMask{0} : bit(size()) - 1;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

std::vector<std::pair<VertexIndex, VertexIndex>> Graph::edges() const {
    std::vector<std::pair<VertexIndex, VertexIndex>> out;
    for (VertexIndex a = 0; a < size(); ++a) {
        for (VertexIndex b : mask_members(adj_[a])) {
            if (a < b) out.emplace_back(a, b);
        }
    }
    return out;
}

bool Graph::is_complete() const {
    for (VertexIndex v = 0; v < size(); ++v) {
        if ((adj_[v] | bit(v)) != all_vertices()) return false;
    }
    return true;
}

VertexMask Clique::mask() const noexcept {
    VertexMask m = 0;
    for (auto v : members) m |= bit(v);
    return m;
}

bool clique_order(const Clique& a, const Clique& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
}

bool is_clique(const Graph& g, std::span<const VertexIndex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.size()) return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (!g.adjacent(vertices[i], vertices[j])) return false;
        }
    }
    return true;
}

std::vector<std::string> clique_labels(const Graph& g, const Clique& c) {
    std::vector<std::string> out;
    out.reserve(c.size());
    for (auto v : c.members) out.push_back(g.label(v));
    return out;
}

Graph parse_graph(std::string_view text) {
    std::optional<Graph> g;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "vertices") {
            if (g) throw ParseError("duplicate 'vertices' declaration", line_no);
            if (tokens.size() < 2) throw ParseError("'vertices' needs at least one label", line_no);
            std::vector<std::string> labels(tokens.begin() + 1, tokens.end());
            try {
                g.emplace(std::move(labels));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(e.what(), line_no);
            }
        } else if (tokens[0] == "edge") {
            if (!g) throw ParseError("'edge' before 'vertices'", line_no);
            if (tokens.size() != 3) throw ParseError("'edge' takes exactly two labels", line_no);
            const auto a = g->find(tokens[1]);
            const auto b = g->find(tokens[2]);
            if (!a) throw ParseError("unknown vertex '" + std::string(tokens[1]) + "'", line_no);
            if (!b) throw ParseError("unknown vertex '" + std::string(tokens[2]) + "'", line_no);
            if (*a == *b) throw ParseError("self-loop at vertex '" + std::string(tokens[1]) + "'", line_no);
            g->add_edge(*a, *b);
        } else {
            throw ParseError("unknown directive '" + std::string(tokens[0]) + "'", line_no);
        }
    }
    if (!g) throw ParseError("missing 'vertices' line");
    return *g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "vertices";
    for (const auto& l : g.labels()) out << ' ' << l;
    out << '\n';
    for (auto [a, b] : g.edges()) out << "edge " << g.label(a) << ' ' << g.label(b) << '\n';
    return out.str();
}

Graph induced_subgraph(const Graph& g, VertexMask keep) {
    if ((keep & ~g.all_vertices()) != 0) throw Error("induced_subgraph: vertex out of range");
    const auto members = mask_members(keep);
    std::vector<std::string> labels;
    labels.reserve(members.size());
    for (auto v : members) labels.push_back(g.label(v));
    Graph sub(std::move(labels));
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (g.adjacent(members[i], members[j])) sub.add_edge(i, j);
        }
    }
    return sub;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexIndex> keep) {
    VertexMask m = 0;
    for (auto v : keep) {
        if (v >= g.size()) throw Error("induced_subgraph: vertex index " + std::to_string(v) + " out of range");
        m |= bit(v);
    }
    return induced_subgraph(g, m);
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> keep) {
    VertexMask m = 0;
    for (const auto& l : keep) m |= bit(g.index_of(l));
    return induced_subgraph(g, m);
}

Graph link(const Graph& g, VertexIndex v) {
    if (v >= g.size()) throw Error("link: vertex out of range");
    return induced_subgraph(g, g.neighbors(v));
}

Graph star(const Graph& g, VertexIndex v) {
    if (v >= g.size()) throw Error("star: vertex out of range");
    return induced_subgraph(g, g.neighbors(v) | bit(v));
}

Graph remove_vertex(const Graph& g, VertexIndex v) {
    if (v >= g.size()) throw Error("remove_vertex: vertex out of range");
    return induced_subgraph(g, g.all_vertices() & ~bit(v));
}

std::vector<Clique> enumerate_cliques(const Graph& g) {
    std::vector<Clique> out;
    std::vector<VertexIndex> current;
    // Extend `current` only by vertices after its last member that are
    // adjacent to every member, so each clique is produced exactly once.
    auto extend = [&](auto&& self, VertexIndex start, VertexMask candidates) -> void {
        out.push_back(Clique{current});
        for (VertexIndex v = start; v < g.size(); ++v) {
            if (!((candidates >> v) & 1U)) continue;
            current.push_back(v);
            self(self, v + 1, candidates & g.neighbors(v));
            current.pop_back();
        }
    };
    extend(extend, 0, g.all_vertices());
    std::stable_sort(out.begin(), out.end(), clique_order);
    return out;
}

VertexIndex default_pivot(const Graph& g) {
    for (VertexIndex v = 0; v < g.size(); ++v) {
        if ((g.neighbors(v) | bit(v)) != g.all_vertices()) return v;
    }
    throw Error("default_pivot: graph is complete");
}

std::uint64_t clique_count_recursive(const Graph& g, const PivotRule& pivot) {
    if (g.empty()) return 1;
    if (g.size() == 1) return 2;
    if (g.is_complete()) return std::uint64_t{1} << g.size();
    const VertexIndex v = pivot(g);
    if (v >= g.size()) throw Error("pivot rule returned an out-of-range vertex");
    return clique_count_recursive(link(g, v), pivot) + clique_count_recursive(remove_vertex(g, v), pivot);
}

std::uint64_t clique_count_recursive(const Graph& g) { return clique_count_recursive(g, default_pivot); }

std::size_t max_clique_size(const Graph& g) {
    std::size_t best = 0;
    for (const auto& c : enumerate_cliques(g)) best = std::max(best, c.size());
    return best;
}

bool is_irreducible(const Graph& g) {
    if (g.empty()) throw Error("is_irreducible: empty graph");
    VertexMask seen = 1;
    std::queue<VertexIndex> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        const auto v = frontier.front();
        frontier.pop();
        // Complement neighbours of v.
        VertexMask next = g.all_vertices() & ~g.neighbors(v) & ~bit(v) & ~seen;
        seen |= next;
        for (auto w : mask_members(next)) frontier.push(w);
    }
    return seen == g.all_vertices();
}

Graph edgeless_graph(std::size_t n) { return Graph(default_labels(n)); }

Graph complete_graph(std::size_t n) {
    Graph g(default_labels(n));
    for (VertexIndex a = 0; a < n; ++a) {
        for (VertexIndex b = a + 1; b < n; ++b) g.add_edge(a, b);
    }
    return g;
}

Graph path_graph(std::size_t n) {
    Graph g(default_labels(n));
    for (VertexIndex a = 0; a + 1 < n; ++a) g.add_edge(a, a + 1);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw Error("cycle_graph needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

}  // namespace racgk
