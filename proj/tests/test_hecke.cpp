#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "racgk/error.hpp"
#include "racgk/hecke.hpp"

using namespace racgk;

namespace {

Rational r(long n, long d = 1) {
    Rational x(n, d);
    x.canonicalize();
    return x;
}

Word word(const Graph& g, std::vector<std::string> labels) {
    return normal_form(g, std::span<const std::string>(labels));
}

std::size_t index(const TruncatedSpace& space, std::vector<std::string> labels) {
    return space.ball().index_of(word(space.graph(), std::move(labels))).value();
}

}  // namespace

TEST_CASE("lambda columns follow the two branches") {
    const Graph g = edgeless_graph(2);
    const TruncatedSpace space(g, 3);
    const auto q = DeformationParameter::uniform(g, r(1, 4));
    const auto lambda = build_lambda<double>(space, q, 0);
    const double a = (1 - 0.25) / 1.25;
    const double b = 2 * 0.5 / 1.25;

    const std::size_t e = 0;
    const std::size_t s = index(space, {"a"});
    CHECK(lambda.entry(e, e) == doctest::Approx(a));
    CHECK(lambda.entry(s, e) == doctest::Approx(b));
    CHECK(lambda.entry(s, s) == doctest::Approx(-a));
    CHECK(lambda.entry(e, s) == doctest::Approx(b));
    for (std::size_t j = 0; j < lambda.dimension(); ++j) CHECK(lambda.column(j).size() <= 2);

    // On the boundary sphere the ascending term is dropped.
    const std::size_t far = index(space, {"b", "a", "b"});
    CHECK(lambda.column(far).size() == 1);
    CHECK(lambda.interior_mask()[far] == false);
}

TEST_CASE("exact lambda at a square parameter") {
    const Graph g = edgeless_graph(2);
    const TruncatedSpace space(g, 2);
    const auto q = DeformationParameter::uniform(g, r(4, 9));
    CHECK(exact_mode_available(q));
    CHECK_FALSE(exact_mode_available(DeformationParameter::uniform(g, r(1, 2))));
    const auto lambda = build_lambda<Rational>(space, q, 1);
    CHECK(lambda.entry(0, 0) == r(5, 13));
    CHECK(lambda.entry(index(space, {"b"}), 0) == r(12, 13));
    CHECK_THROWS_AS(build_lambda<Rational>(space, DeformationParameter::uniform(g, r(1, 2)), 0), Error);
}

TEST_CASE("q = 1 gives the regular representation on the interior") {
    const Graph g = path_graph(3);
    const TruncatedSpace space(g, 4);
    const auto q = DeformationParameter::uniform(g, 1);
    for (VertexIndex s = 0; s < g.size(); ++s) {
        const auto lambda = build_lambda<double>(space, q, s);
        for (std::size_t j = 0; j < space.dimension(); ++j) {
            if (!lambda.interior_mask()[j]) continue;
            const auto column = lambda.column(j);
            REQUIRE(column.size() == 1);
            CHECK(column[0].first == space.left_neighbor(s, j));
            CHECK(column[0].second == 1.0);
        }
    }
}

TEST_CASE("relations hold on the interior") {
    for (const Graph& g : {edgeless_graph(3), path_graph(4), cycle_graph(4), complete_graph(3)}) {
        const TruncatedSpace space(g, 4);
        for (const Rational& q : {r(1), r(1, 2), r(1, 3)}) {
            const auto report = check_relations<double>(space, DeformationParameter::uniform(g, q));
            CHECK(report.passed(1e-12));
            CHECK_FALSE(report.exact);
        }
        const auto exact = check_relations<Rational>(space, DeformationParameter::uniform(g, r(1, 9)));
        CHECK(exact.exact);
        CHECK(exact.max_residual() == 0.0);
    }
    const TruncatedSpace small(edgeless_graph(2), 1);
    CHECK_THROWS_AS(check_relations<double>(small, DeformationParameter::uniform(edgeless_graph(2), 1)), Error);
}

TEST_CASE("non-commuting generators at q = 1 differ by sqrt 2 on delta_e") {
    const Graph g = edgeless_graph(2);
    const TruncatedSpace space(g, 3);
    const auto q = DeformationParameter::uniform(g, 1);
    const auto ls = build_lambda<double>(space, q, 0);
    const auto lt = build_lambda<double>(space, q, 1);
    const SparseVector<double> e{{0, 1.0}};
    const auto st = ls.apply(lt.apply(e));
    const auto ts = lt.apply(ls.apply(e));
    double norm_sq = 0.0;
    std::map<std::size_t, double> diff;
    for (const auto& [i, v] : st) diff[i] += v;
    for (const auto& [i, v] : ts) diff[i] -= v;
    for (const auto& [i, v] : diff) norm_sq += v * v;
    CHECK(std::sqrt(norm_sq) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("projections are idempotent and commute along edges") {
    const Graph g = path_graph(3);
    const TruncatedSpace space(g, 4);
    const DeformationParameter q({r(1, 3), r(1, 2), r(3, 4)});
    const auto pa = projection<double>(space, q, 0);
    const auto pb = projection<double>(space, q, 1);
    const auto interior2 = space.interior_mask(2);
    for (std::size_t j = 0; j < space.dimension(); ++j) {
        if (!interior2[j]) continue;
        const SparseVector<double> e{{j, 1.0}};
        const auto once = pa.apply(e);
        const auto twice = pa.apply(once);
        std::map<std::size_t, double> diff;
        for (const auto& [i, v] : once) diff[i] += v;
        for (const auto& [i, v] : twice) diff[i] -= v;
        for (const auto& [i, v] : diff) CHECK(std::abs(v) < 1e-12);

        std::map<std::size_t, double> comm;
        for (const auto& [i, v] : pa.apply(pb.apply(e))) comm[i] += v;
        for (const auto& [i, v] : pb.apply(pa.apply(e))) comm[i] -= v;
        for (const auto& [i, v] : comm) CHECK(std::abs(v) < 1e-12);
    }
}

TEST_CASE("clique projection traces") {
    const Graph g = complete_graph(3);
    const TruncatedSpace space(g, 3);
    const DeformationParameter q({r(1, 3), r(1, 2), r(1)});
    for (const auto& c : enumerate_cliques(g)) {
        const double expected = clique_trace(c, q).get_d();
        CHECK(std::abs(trace_of(clique_projection<double>(space, q, c)) - expected) < 1e-12);
    }
    const auto identity = clique_projection<double>(space, q, Clique{});
    for (std::size_t j = 0; j < space.dimension(); ++j) CHECK(identity.entry(j, j) == 1.0);

    const DeformationParameter squares({r(1, 4), r(4, 9), r(1)});
    const Clique all{{0, 1, 2}};
    CHECK(trace_of(clique_projection<Rational>(space, squares, all)) == r(4, 5) * r(9, 13) * r(1, 2));

    const Graph p = path_graph(3);
    const TruncatedSpace path_space(p, 2);
    CHECK_THROWS_AS(clique_projection<double>(path_space, DeformationParameter::uniform(p, 1), Clique{{0, 2}}), Error);
}

TEST_CASE("single-projection trace is exact at every radius") {
    const Graph g = edgeless_graph(3);
    const auto q = DeformationParameter::uniform(g, r(2, 7));
    for (std::size_t radius = 1; radius <= 4; ++radius) {
        const TruncatedSpace space(g, radius);
        CHECK(trace_of(projection<double>(space, q, 1)) == doctest::Approx(7.0 / 9.0).epsilon(1e-14));
    }
}

TEST_CASE("eta partial sums") {
    const auto zero = eta_norm_partial(3, r(1, 4), 0);
    CHECK(zero.partial_sum == 1);
    CHECK(zero.closed_form == r(5, 2));

    const auto s = eta_norm_partial(3, r(1, 4), 20);
    CHECK(s.growth[3] == 12);
    CHECK(s.partial_sum < s.closed_form);
    CHECK(s.closed_form - s.partial_sum <= s.tail_bound);
    // The geometric tail is exact for free products.
    CHECK(s.closed_form - s.partial_sum == s.tail_bound);

    CHECK_THROWS_AS(eta_norm_partial(4, r(1, 3), 10), Error);
    CHECK_THROWS_AS(eta_norm_partial(3, r(1, 2), 10), Error);
    CHECK_NOTHROW(eta_norm_partial(4, r(1, 4), 10));
}

TEST_CASE("free-product trace checks") {
    const auto a = free_product_trace_checks(3, r(1, 4), 30);
    CHECK(a.t_exact == r(2, 5));
    CHECK(a.phi_exact == r(2, 3));
    CHECK(a.t_error < Rational(1, 1000000));
    CHECK(a.phi_error < Rational(1, 100000));
    CHECK(a.within_bounds());

    const auto b = free_product_trace_checks(4, r(1, 5), 30);
    CHECK(b.t_exact == r(1, 3));
    CHECK(b.t_error < Rational(1, 1000000));
    CHECK(b.within_bounds());

    for (std::size_t l = 1; l <= 25; l += 3) CHECK(free_product_trace_checks(5, r(1, 7), l).within_bounds());
    CHECK_THROWS_AS(free_product_trace_checks(3, r(2, 3), 10), Error);
}
