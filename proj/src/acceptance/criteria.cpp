#include "racgk/acceptance/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "racgk/acceptance/oracles.hpp"
#include "racgk/coxeter.hpp"
#include "racgk/elliott.hpp"
#include "racgk/hecke.hpp"
#include "racgk/k_invariants.hpp"

namespace racgk::acceptance {

namespace {

constexpr double kResidualTolerance = 1e-12;

class Checker {
public:
    Checker(int id, std::string title) : id_(id), title_(std::move(title)) {}

    void require(bool ok, const std::function<std::string()>& what) {
        ++checks_;
        if (ok) return;
        if (failures_++ == 0) first_failure_ = what();
    }

    CriterionResult finish(const std::string& summary) const {
        CriterionResult r{id_, title_, failures_ == 0, {}};
        std::ostringstream out;
        if (r.passed) {
            out << summary << " (" << checks_ << " checks)";
        } else {
            out << failures_ << " of " << checks_ << " checks failed; first: " << first_failure_;
        }
        r.detail = out.str();
        return r;
    }

private:
    int id_;
    std::string title_;
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_failure_;
};

Graph seven_clique_path() {
    Graph g({"a", "b", "c", "d"});
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    return g;
}

Graph seven_clique_matching() {
    Graph g({"a", "b", "c", "d"});
    g.add_edge("a", "b");
    g.add_edge("c", "d");
    return g;
}

DeformationParameter alternating(const Graph& g, const Rational& even, const Rational& odd) {
    std::vector<Rational> values;
    for (VertexIndex v = 0; v < g.size(); ++v) values.push_back(v % 2 == 0 ? even : odd);
    return DeformationParameter(std::move(values));
}

std::string describe(const Graph& g) {
    std::string out = std::to_string(g.size()) + " vertices, edges {";
    for (auto [a, b] : g.edges()) out += " " + g.label(a) + g.label(b);
    return out + " }";
}

Integer power(long base, std::size_t exponent) {
    Integer out = 1;
    for (std::size_t i = 0; i < exponent; ++i) out *= base;
    return out;
}

std::vector<Rational> reduced_fractions(long max_den) {
    std::set<Rational> values;
    for (long b = 1; b <= max_den; ++b) {
        for (long a = 0; a <= b; ++a) {
            Rational x(a, b);
            x.canonicalize();
            values.insert(x);
        }
    }
    return {values.begin(), values.end()};
}

}  // namespace

std::vector<NamedGraph> named_corpus() {
    std::vector<NamedGraph> out;
    for (std::size_t n = 1; n <= 6; ++n) out.push_back({"edgeless" + std::to_string(n), edgeless_graph(n)});
    for (std::size_t n = 2; n <= 6; ++n) out.push_back({"path" + std::to_string(n), path_graph(n)});
    for (std::size_t n = 3; n <= 6; ++n) out.push_back({"cycle" + std::to_string(n), cycle_graph(n)});
    for (std::size_t n = 1; n <= 5; ++n) out.push_back({"complete" + std::to_string(n), complete_graph(n)});
    out.push_back({"path3+point", seven_clique_path()});
    out.push_back({"two-edges", seven_clique_matching()});
    return out;
}

std::vector<Graph> random_graphs(std::size_t count, std::size_t max_vertices, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(1, max_vertices);
    std::uniform_real_distribution<double> density_dist(0.0, 1.0);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        Graph g = edgeless_graph(size_dist(rng));
        std::bernoulli_distribution edge(density_dist(rng));
        for (VertexIndex a = 0; a < g.size(); ++a) {
            for (VertexIndex b = a + 1; b < g.size(); ++b) {
                if (edge(rng)) g.add_edge(a, b);
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

CriterionResult clique_rank_agreement() {
    Checker check(1, "Clique count = subset count = K0 rank");
    auto compare = [&](const std::string& name, const Graph& g) {
        const auto recursive = clique_count_recursive(g);
        const auto subsets = oracle::subset_cliques(g);
        const auto inv = k_theory(g);
        check.require(recursive == subsets.size() && inv.k0_rank == subsets.size(), [&] {
            return name + ": recursion " + std::to_string(recursive) + ", subsets " + std::to_string(subsets.size()) +
                   ", rank " + std::to_string(inv.k0_rank);
        });
        check.require(inv.k0_basis == subsets, [&] { return name + ": enumerated basis differs from subset oracle"; });
        const PivotRule last = [](const Graph& h) {
            for (VertexIndex v = h.size(); v-- > 0;) {
                if (star(h, v).size() != h.size()) return v;
            }
            return VertexIndex{0};
        };
        check.require(clique_count_recursive(g, last) == recursive,
                      [&] { return name + ": recursion depends on the pivot"; });
    };

    for (const auto& [name, g] : named_corpus()) compare(name, g);
    const auto graphs = random_graphs(200, 12, 0x5eed0001);
    for (std::size_t i = 0; i < graphs.size(); ++i) compare("random graph " + std::to_string(i), graphs[i]);

    for (std::size_t n = 1; n <= 6; ++n) {
        check.require(k_theory(edgeless_graph(n)).k0_rank == n + 1, [&] { return "edgeless " + std::to_string(n); });
    }
    for (std::size_t k = 1; k <= 5; ++k) {
        check.require(k_theory(complete_graph(k)).k0_rank == (std::size_t{1} << k),
                      [&] { return "complete " + std::to_string(k); });
    }
    check.require(k_theory(seven_clique_path()).k0_rank == 7, [] { return "path3+point rank"; });
    check.require(k_theory(seven_clique_matching()).k0_rank == 7, [] { return "two-edges rank"; });
    return check.finish("named corpus and 200 random graphs agree; named ranks n+1, 2^k, 7, 7");
}

CriterionResult trace_pairing_exact() {
    Checker check(2, "Exact trace pairing and trace image");
    const std::vector<Rational> expected{1, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 4}, {1, 4}};
    for (const auto& g : {seven_clique_path(), seven_clique_matching()}) {
        auto values = trace_pairing(g, DeformationParameter::uniform(g, 1)).values;
        std::sort(values.begin(), values.end(), std::greater<>());
        check.require(values == expected, [&] { return "pairing multiset of " + describe(g); });
    }
    const auto a = seven_clique_path();
    const auto b = seven_clique_matching();
    const auto verdict =
        compare_graph_invariants(a, DeformationParameter::uniform(a, 1), b, DeformationParameter::uniform(b, 1));
    check.require(verdict.verdict == InvariantVerdict::Isomorphic,
                  [&] { return "compare returned " + to_string(verdict.verdict); });

    auto image_check = [&](const Graph& g) {
        const auto image = trace_image(trace_pairing(g, DeformationParameter::uniform(g, 1)));
        const Rational expected_generator(Integer(1), power(2, max_clique_size(g)));
        check.require(image.generator() == expected_generator, [&] {
            return describe(g) + ": trace image " + to_string(image.generator()) + "Z";
        });
    };
    for (const auto& named : named_corpus()) image_check(named.graph);
    for (const auto& g : random_graphs(200, 12, 0x5eed0001)) image_check(g);
    return check.finish("pairing {1, 1/2 x4, 1/4 x2} on both graphs, Isomorphic, image (1/2^c)Z on corpus");
}

CriterionResult oracle_formula_agreement() {
    Checker check(3, "Truncated-operator traces match clique products");
    std::size_t graphs = 0;
    for (const auto& [name, g] : named_corpus()) {
        if (g.size() > 4) continue;
        ++graphs;
        const TruncatedSpace space(g, 4);
        const std::vector<std::pair<std::string, DeformationParameter>> params{
            {"q=1", DeformationParameter::uniform(g, 1)},
            {"q=1/2", DeformationParameter::uniform(g, Rational(1, 2))},
            {"q=1/3,1/2", alternating(g, Rational(1, 3), Rational(1, 2))},
        };
        for (const auto& [label, q] : params) {
            for (const auto& c : enumerate_cliques(g)) {
                const double computed = trace_of(clique_projection<double>(space, q, c));
                const double target = clique_trace(c, q).get_d();
                check.require(std::abs(computed - target) < kResidualTolerance, [&] {
                    std::ostringstream out;
                    out << name << " " << label << " clique of size " << c.size() << ": " << computed << " vs "
                        << target;
                    return out.str();
                });
            }
        }
    }
    return check.finish(std::to_string(graphs) + " graphs, three parameters, all cliques at L = 4");
}

CriterionResult relation_residuals() {
    Checker check(4, "Relation residuals of truncated lambda_q");
    double worst = 0.0;
    for (const auto& [name, g] : named_corpus()) {
        const TruncatedSpace space(g, 4);
        for (const Rational& q : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
            const auto report = check_relations<double>(space, DeformationParameter::uniform(g, q));
            worst = std::max(worst, report.max_residual());
            check.require(report.passed(kResidualTolerance), [&] {
                std::ostringstream out;
                out << name << " q=" << to_string(q) << ": max residual " << report.max_residual();
                return out.str();
            });
        }
        for (const Rational& q : {Rational(1, 4), Rational(4, 9)}) {
            const auto report = check_relations<Rational>(space, DeformationParameter::uniform(g, q));
            check.require(report.exact && report.max_residual() == 0.0, [&] {
                std::ostringstream out;
                out << name << " exact q=" << to_string(q) << ": max residual " << report.max_residual();
                return out.str();
            });
        }
    }
    std::ostringstream summary;
    summary << "largest floating-point residual " << worst << "; exact mode residuals all 0";
    return check.finish(summary.str());
}

CriterionResult free_product_traces() {
    Checker check(5, "Free-product trace analysis");
    const Rational t_tolerance(1, 1'000'000);
    const Rational phi_tolerance(1, 100'000);
    struct Case {
        int n;
        Rational q;
        Rational t;
    };
    for (const auto& [n, q, t_closed] : {Case{3, Rational(1, 4), Rational(2, 5)}, Case{4, Rational(1, 5), Rational(1, 3)}}) {
        const std::string tag = "n=" + std::to_string(n) + " q=" + to_string(q);
        const auto r = free_product_trace_checks(n, q, 30);
        const auto& s = r.series;
        check.require(s.partial_sum <= s.closed_form && s.closed_form - s.partial_sum <= s.tail_bound,
                      [&] { return tag + ": partial sum outside its tail bound"; });
        check.require(r.t_exact == t_closed, [&] { return tag + ": closed-form t is " + to_string(r.t_exact); });
        check.require(r.phi_exact == Rational(n - 1, n), [&] { return tag + ": closed-form phi(p_i)"; });
        check.require(r.t_error < t_tolerance, [&] { return tag + ": |t_hat - t| = " + std::to_string(r.t_error.get_d()); });
        check.require(r.phi_error < phi_tolerance,
                      [&] { return tag + ": |phi_hat - phi| = " + std::to_string(r.phi_error.get_d()); });
        check.require(r.within_bounds(), [&] { return tag + ": errors exceed the propagated tail bounds"; });
        for (std::size_t k = 1; k < s.growth.size(); ++k) {
            check.require(s.growth[k] == n * power(n - 1, k - 1), [&] { return tag + ": automaton growth at k=" + std::to_string(k); });
        }
    }
    for (std::size_t n : {3, 4}) {
        const auto growth = growth_sequence(edgeless_graph(n), 12);
        for (std::size_t k = 1; k <= 12; ++k) {
            const Integer expected = static_cast<unsigned long>(n) * power(static_cast<long>(n) - 1, k - 1);
            check.require(k < growth.size() && Integer(static_cast<unsigned long>(growth[k])) == expected,
                          [&] { return "edgeless " + std::to_string(n) + ": growth at k=" + std::to_string(k); });
        }
    }
    return check.finish("t and phi within tolerance and tail bounds; growth n(n-1)^(k-1) for k <= 12");
}

CriterionResult classification_procedure() {
    Checker check(6, "Classification decision procedure");
    using V = ClassificationVerdict;
    struct Case {
        int n;
        Rational q1, q2;
        V verdict;
        long order1, order2;
    };
    const std::vector<Case> cases{
        {3, Rational(1, 2), Rational(2, 3), V::NotIsomorphic_RegimeMismatch, 3, 5},
        {3, Rational(2, 3), Rational(3, 4), V::NotIsomorphic_InvariantMismatch, 5, 7},
        {3, Rational(6, 7), Rational(5, 8), V::InvariantIsomorphic_AlgebraOpen, 13, 13},
        {4, Rational(1, 4), Rational(1, 5), V::InvariantIsomorphic_AlgebraOpen, 5, 6},
    };
    for (const auto& c : cases) {
        const auto result = classify_pair(c.n, c.q1, c.q2);
        const std::string tag = "(" + std::to_string(c.n) + ", " + to_string(c.q1) + ", " + to_string(c.q2) + ")";
        check.require(result.verdict == c.verdict, [&] { return tag + " gave " + to_string(result.verdict); });
        check.require(result.order1 == c.order1 && result.order2 == c.order2, [&] { return tag + " orders"; });
    }

    std::mt19937_64 rng(0x5eed0006);
    std::uniform_int_distribution<int> n_dist(3, 6);
    std::uniform_int_distribution<long> den_dist(1, 12);
    auto random_q = [&] {
        const long b = den_dist(rng);
        Rational q(std::uniform_int_distribution<long>(1, b)(rng), b);
        q.canonicalize();
        return q;
    };
    for (int i = 0; i < 50; ++i) {
        const int n = n_dist(rng);
        const Rational q1 = random_q();
        const Rational q2 = random_q();
        const std::string tag = "(" + std::to_string(n) + ", " + to_string(q1) + ", " + to_string(q2) + ")";
        const auto forward = classify_pair(n, q1, q2);
        const auto backward = classify_pair(n, q2, q1);
        check.require(forward.verdict == backward.verdict, [&] { return tag + " is not symmetric"; });
        for (const auto& q : {q1, q2}) {
            check.require(classify_pair(n, q, q).verdict == V::InvariantIsomorphic_AlgebraOpen,
                          [&] { return tag + " is not reflexive"; });
        }
        if (forward.regime1 == Regime::Simple && forward.regime2 == Regime::Simple) {
            const Rational x = 1 / (1 + q1);
            const Rational y = 1 / (1 + q2);
            const bool open = forward.verdict == V::InvariantIsomorphic_AlgebraOpen;
            check.require(open == subgroup_equal(x, y) && open == affine_orbit_same(x, y, n),
                          [&] { return tag + ": verdict disagrees with the subgroup criteria"; });
        }
    }
    return check.finish("four worked cases; symmetry, reflexivity and criterion agreement on 50 random pairs");
}

CriterionResult subgroup_criteria() {
    Checker check(7, "Subgroup and affine-orbit criteria");
    const auto values = reduced_fractions(50);
    for (const auto& x : values) {
        for (const auto& y : values) {
            const bool lattice = oracle::lattice_contains(x, y) && oracle::lattice_contains(y, x);
            check.require(subgroup_equal(x, y) == lattice,
                          [&] { return "subgroup_equal(" + to_string(x) + ", " + to_string(y) + ")"; });
            check.require(lattice == (x.get_den() == y.get_den()),
                          [&] { return "denominator criterion at (" + to_string(x) + ", " + to_string(y) + ")"; });
        }
    }

    struct WitnessCase {
        Rational x, y;
        int bound;
        bool expect;
    };
    const std::vector<WitnessCase> cases{
        {Rational(1, 2), Rational(1, 2), 1, true},
        {Rational(3, 2), Rational(1, 2), 1, true},
        {Rational(3, 5), Rational(4, 7), 2, false},
    };
    for (const auto& c : cases) {
        const std::string tag = "witness (" + to_string(c.x) + ", " + to_string(c.y) + ", bound " + std::to_string(c.bound) + ")";
        const auto w = affine_orbit_witness_search(c.x, c.y, 3, c.bound);
        check.require(w.has_value() == c.expect, [&] { return tag + (c.expect ? " not found" : " unexpectedly found"); });
        if (w) check.require(verify_affine_witness(*w, c.x, c.y), [&] { return tag + " does not verify"; });
    }
    return check.finish(std::to_string(values.size()) + " rationals pairwise against the lattice oracle; witness cases as expected");
}

CriterionResult word_engine() {
    Checker check(8, "Word engine");
    const auto graphs = random_graphs(20, 4, 0x5eed0008);
    std::size_t words = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        const std::string tag = "random graph " + std::to_string(gi) + " (" + describe(g) + ")";
        std::vector<VertexIndex> letters;
        std::function<void()> visit = [&] {
            ++words;
            const auto expected = oracle::closure_normal_form(g, letters);
            const Word word = normal_form(g, std::span<const VertexIndex>(letters));
            const auto& got = word.letters();
            check.require(std::equal(got.begin(), got.end(), expected.begin(), expected.end()),
                          [&] { return tag + ": normal form mismatch"; });
            if (letters.size() == 6) return;
            for (VertexIndex s = 0; s < g.size(); ++s) {
                letters.push_back(s);
                visit();
                letters.pop_back();
            }
        };
        visit();

        const Ball b(g, 5);
        for (const auto& w : b.words()) {
            for (VertexIndex s = 0; s < g.size(); ++s) {
                const auto product = mult_gen(g, w, s);
                const auto expected_length = static_cast<long>(w.length()) + product.length_delta;
                check.require((product.length_delta == 1 || product.length_delta == -1) &&
                                  static_cast<long>(product.word.length()) == expected_length,
                              [&] { return tag + ": length change at " + to_string(g, w); });
                check.require(mult_gen(g, product.word, s).word == w, [&] { return tag + ": s s w != w"; });
            }
        }
    }
    const Graph triangle = complete_graph(3);
    check.require(Ball(triangle, 10).size() == 8, [] { return "triangle group ball is not of size 8"; });
    const std::vector<std::uint64_t> triangle_growth{1, 3, 3, 1, 0, 0};
    check.require(growth_sequence(triangle, 5) == triangle_growth, [] { return "triangle growth"; });
    return check.finish(std::to_string(words) + " words against the closure oracle; radius-5 balls; triangle group of order 8");
}

std::vector<CriterionResult> run_all() {
    const std::vector<std::pair<std::string, std::function<CriterionResult()>>> criteria{
        {"Clique count = subset count = K0 rank", clique_rank_agreement},
        {"Exact trace pairing and trace image", trace_pairing_exact},
        {"Truncated-operator traces match clique products", oracle_formula_agreement},
        {"Relation residuals of truncated lambda_q", relation_residuals},
        {"Free-product trace analysis", free_product_traces},
        {"Classification decision procedure", classification_procedure},
        {"Subgroup and affine-orbit criteria", subgroup_criteria},
        {"Word engine", word_engine},
    };
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            out.push_back(criteria[i].second());
        } catch (const std::exception& e) {
            out.push_back({static_cast<int>(i) + 1, criteria[i].first, false, std::string("threw: ") + e.what()});
        }
    }
    return out;
}

}  // namespace racgk::acceptance
