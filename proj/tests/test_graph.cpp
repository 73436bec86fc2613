#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "racgk/acceptance/criteria.hpp"
#include "racgk/acceptance/oracles.hpp"
#include "racgk/error.hpp"
#include "racgk/graph.hpp"

using namespace racgk;

namespace {

std::vector<std::vector<std::string>> labelled(const Graph& g, const std::vector<Clique>& cliques) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : cliques) out.push_back(clique_labels(g, c));
    return out;
}

}  // namespace

TEST_CASE("parse_graph reads vertices, edges and comments") {
    const Graph g = parse_graph("# a path\nvertices a b c\nedge a b   # first\n\nedge b c\n");
    CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.edge_count() == 2);
    CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("parse_graph reports the offending line") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("vertices a b\nedge a c\n") == 2);
    CHECK(line_of("edge a b\n") == 1);
    CHECK(line_of("vertices a a\n") == 1);
    CHECK(line_of("vertices a\nvertices b\n") == 2);
    CHECK(line_of("vertices a b\nedge a a\n") == 2);
    CHECK(line_of("vertices a b\nedge a\n") == 2);
    CHECK(line_of("vertices a b\nloop a b\n") == 2);
    CHECK_THROWS_AS(parse_graph("# nothing\n"), ParseError);
}

TEST_CASE("graph construction rejects invalid input") {
    CHECK_THROWS_AS(Graph({"a", "a"}), Error);
    CHECK_THROWS_AS(Graph({""}), Error);
    CHECK_THROWS_AS(edgeless_graph(Graph::kMaxVertices + 1), Error);
    Graph g({"a", "b"});
    CHECK_THROWS_AS(g.add_edge(0, 0), Error);
    CHECK_THROWS_AS(g.index_of("z"), Error);
    g.add_edge("a", "b");
    g.add_edge("b", "a");
    CHECK(g.edge_count() == 1);
}

TEST_CASE("enumerate_cliques on small graphs") {
    const Graph edgeless = edgeless_graph(3);
    CHECK(labelled(edgeless, enumerate_cliques(edgeless)) ==
          std::vector<std::vector<std::string>>{{}, {"a"}, {"b"}, {"c"}});

    const Graph path = path_graph(3);
    CHECK(labelled(path, enumerate_cliques(path)) ==
          std::vector<std::vector<std::string>>{{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}});

    const Graph k3 = complete_graph(3);
    const auto cliques = enumerate_cliques(k3);
    CHECK(cliques.size() == 8);
    CHECK(cliques.back().members == std::vector<VertexIndex>{0, 1, 2});
}

TEST_CASE("enumerate_cliques is stable and every result is a clique") {
    for (const auto& g : acceptance::random_graphs(40, 10, 11)) {
        const auto first = enumerate_cliques(g);
        CHECK(first == enumerate_cliques(g));
        CHECK(std::is_sorted(first.begin(), first.end(), clique_order));
        for (const auto& c : first) CHECK(is_clique(g, c.members));
    }
}

TEST_CASE("clique_count_recursive matches the subset oracle") {
    for (const auto& g : acceptance::random_graphs(60, 12, 12)) {
        CHECK(clique_count_recursive(g) == oracle::subset_cliques(g).size());
    }
    CHECK(clique_count_recursive(Graph()) == 1);
    CHECK(clique_count_recursive(edgeless_graph(1)) == 2);
    CHECK(clique_count_recursive(complete_graph(6)) == 64);
    CHECK(clique_count_recursive(cycle_graph(5)) == 11);
}

TEST_CASE("clique_count_recursive does not depend on the pivot") {
    const PivotRule last = [](const Graph& h) {
        for (VertexIndex v = h.size(); v-- > 0;) {
            if (star(h, v).size() != h.size()) return v;
        }
        return VertexIndex{0};
    };
    const PivotRule min_degree = [](const Graph& h) {
        VertexIndex best = h.size();
        int best_degree = 1 << 20;
        for (VertexIndex v = 0; v < h.size(); ++v) {
            if (star(h, v).size() == h.size()) continue;
            const int degree = __builtin_popcountll(h.neighbors(v));
            if (degree < best_degree) best = v, best_degree = degree;
        }
        return best;
    };
    for (const auto& g : acceptance::random_graphs(60, 11, 13)) {
        const auto n = clique_count_recursive(g);
        CHECK(clique_count_recursive(g, last) == n);
        CHECK(clique_count_recursive(g, min_degree) == n);
    }
}

TEST_CASE("link, star and vertex removal") {
    const Graph p = path_graph(4);   // a-b-c-d
    const Graph l = link(p, 1);
    CHECK(l.labels() == std::vector<std::string>{"a", "c"});
    CHECK(l.edge_count() == 0);
    const Graph s = star(p, 1);
    CHECK(s.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(s.edge_count() == 2);
    const Graph r = remove_vertex(p, 1);
    CHECK(r.labels() == std::vector<std::string>{"a", "c", "d"});
    CHECK(r.edge_count() == 1);
    CHECK(link(edgeless_graph(2), 0).empty());
}

TEST_CASE("max_clique_size") {
    CHECK(max_clique_size(edgeless_graph(4)) == 1);
    CHECK(max_clique_size(path_graph(4)) == 2);
    CHECK(max_clique_size(complete_graph(5)) == 5);
    CHECK(max_clique_size(cycle_graph(3)) == 3);
    for (const auto& g : acceptance::random_graphs(30, 10, 14)) {
        std::size_t expected = 0;
        for (const auto& c : oracle::subset_cliques(g)) expected = std::max(expected, c.size());
        CHECK(max_clique_size(g) == expected);
    }
}

TEST_CASE("is_irreducible tests connectivity of the complement") {
    CHECK(is_irreducible(edgeless_graph(3)));
    CHECK_FALSE(is_irreducible(complete_graph(2)));
    CHECK(is_irreducible(path_graph(4)));
    CHECK_FALSE(is_irreducible(cycle_graph(4)));
    CHECK(is_irreducible(edgeless_graph(1)));
    CHECK_THROWS_AS(is_irreducible(Graph()), Error);
}

TEST_CASE("named graphs") {
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(4).is_complete());
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(edgeless_graph(30).label(27) == "v27");
}
