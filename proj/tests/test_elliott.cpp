#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "racgk/acceptance/oracles.hpp"
#include "racgk/elliott.hpp"
#include "racgk/error.hpp"

using namespace racgk;

namespace {

Rational r(long n, long d = 1) {
    Rational x(n, d);
    x.canonicalize();
    return x;
}

}  // namespace

TEST_CASE("regimes") {
    CHECK(regime(3, r(2, 3)) == Regime::Simple);
    CHECK(regime(3, r(1, 2)) == Regime::Boundary);
    CHECK(regime(4, r(1, 4)) == Regime::NonSimple);
    CHECK(regime(5, r(1)) == Regime::Simple);
    CHECK_THROWS_AS(regime(2, r(1, 2)), Error);
    CHECK_THROWS_AS(regime(3, r(0)), Error);
    CHECK_THROWS_AS(regime(3, r(5, 4)), Error);
}

TEST_CASE("free product invariants") {
    const auto simple = free_product_invariant(3, r(2, 3));
    CHECK(simple.k0_rank == 4);
    CHECK(simple.k1_rank == 0);
    CHECK(simple.unit == std::vector<int>{1, 0, 0, 0});
    CHECK(simple.trace_simplex == TraceSimplex::Point);
    CHECK(simple.extremal_pairings == std::vector<std::vector<Rational>>{{1, r(3, 5), r(3, 5), r(3, 5)}});

    const auto nonsimple = free_product_invariant(4, r(1, 4));
    CHECK(nonsimple.k0_rank == 5);
    CHECK(nonsimple.trace_simplex == TraceSimplex::Interval);
    CHECK(nonsimple.extremal_pairings ==
          std::vector<std::vector<Rational>>{{1, 1, 1, 1, 1}, {1, r(3, 4), r(3, 4), r(3, 4), r(3, 4)}});

    CHECK_THROWS_AS(free_product_invariant(3, r(1, 2)), Error);
}

TEST_CASE("the NonSimple invariant does not depend on q") {
    for (int n = 3; n <= 7; ++n) {
        const auto reference = free_product_invariant(n, r(1, n));
        for (long d = n; d <= n + 20; ++d) {
            for (long a = 1; a * (n - 1) < d; ++a) CHECK(free_product_invariant(n, r(a, d)) == reference);
        }
    }
}

TEST_CASE("NonSimple trace data") {
    const auto d = free_product_trace_data(4, r(1, 4));
    CHECK(d.t == r(1, 5));
    CHECK(d.phi_value == r(3, 4));
    CHECK(free_product_trace_data(3, r(1, 4)).t == r(2, 5));
    for (int n = 3; n <= 8; ++n) {
        for (long den = n; den <= 40; ++den) {
            const Rational q = r(1, den);
            if (regime(n, q) != Regime::NonSimple) continue;
            const auto data = free_product_trace_data(n, q);
            CHECK(data.t * data.eta_norm_sq == 1);
            CHECK(data.phi_value == r(n - 1, n));
            CHECK(data.t + (1 - data.t) * data.phi_value == 1 / (1 + q));
        }
    }
    CHECK_THROWS_AS(free_product_trace_data(3, r(2, 3)), Error);
    CHECK_THROWS_AS(free_product_trace_data(3, r(1, 2)), Error);
}

TEST_CASE("orders in Q/Z and the subgroup criteria") {
    CHECK(order_in_Q_mod_Z(r(7, 13)) == 13);
    CHECK(order_in_Q_mod_Z(r(1, 2)) == 2);
    CHECK(order_in_Q_mod_Z(r(3)) == 1);
    CHECK(order_in_Q_mod_Z(r(-5, 6)) == 6);
    CHECK(subgroup_equal(r(7, 13), r(8, 13)));
    CHECK_FALSE(subgroup_equal(r(3, 5), r(4, 7)));
    CHECK(affine_orbit_same(r(7, 13), r(8, 13), 3));
    CHECK_FALSE(affine_orbit_same(r(3, 5), r(4, 7), 3));
    CHECK(affine_orbit_same(r(2, 9), r(2, 9), 5));
    CHECK_THROWS_AS(affine_orbit_same(r(1, 2), r(1, 2), 2), Error);
    for (long b = 1; b <= 20; ++b) {
        for (long a = -b; a <= 2 * b; ++a) {
            for (long d = 1; d <= 20; ++d) {
                for (long c = 0; c <= d; ++c) {
                    const bool lattice = oracle::lattice_contains(r(a, b), r(c, d)) &&
                                         oracle::lattice_contains(r(c, d), r(a, b));
                    CHECK(subgroup_equal(r(a, b), r(c, d)) == lattice);
                }
            }
        }
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(IntMatrix{2, {0, 1, 1, 0}}) == -1);
    CHECK(determinant(IntMatrix{3, {2, -1, 0, 1, 3, 2, 0, 5, -4}}) == -48);
    CHECK(determinant(IntMatrix{3, {1, 2, 3, 2, 4, 6, 0, 1, 1}}) == 0);
    CHECK(determinant(IntMatrix{0, {}}) == 1);
}

TEST_CASE("affine orbit witness search") {
    const auto trivial = affine_orbit_witness_search(r(1, 2), r(1, 2), 3, 1);
    REQUIRE(trivial.has_value());
    CHECK(trivial->b == IntMatrix::identity(3));
    CHECK(trivial->c == std::vector<std::int64_t>{0, 0, 0});

    const auto shifted = affine_orbit_witness_search(r(3, 2), r(1, 2), 3, 1);
    REQUIRE(shifted.has_value());
    CHECK(shifted->b == IntMatrix::identity(3));
    CHECK(shifted->c == std::vector<std::int64_t>{1, 1, 1});

    CHECK_FALSE(affine_orbit_witness_search(r(3, 5), r(4, 7), 3, 2).has_value());

    // x = 1 - y needs B = -I.
    const auto reflected = affine_orbit_witness_search(r(2, 5), r(3, 5), 3, 1);
    REQUIRE(reflected.has_value());
    CHECK(verify_affine_witness(*reflected, r(2, 5), r(3, 5)));

    // 7/13 and 8/13: every row of B needs sum 9 mod 13. Within bound 3 that is
    // (3, 3, 3) or sum -4; the first makes det divisible by 3, the second
    // gives B 1 = -4 * 1 and det divisible by 4. Bound 4 allows sums (9, -4, -4).
    CHECK_FALSE(affine_orbit_witness_search(r(7, 13), r(8, 13), 3, 2).has_value());
    CHECK_FALSE(affine_orbit_witness_search(r(7, 13), r(8, 13), 3, 3).has_value());
    const auto wide = affine_orbit_witness_search(r(7, 13), r(8, 13), 3, 4);
    REQUIRE(wide.has_value());
    CHECK(verify_affine_witness(*wide, r(7, 13), r(8, 13)));

    CHECK_THROWS_AS(affine_orbit_witness_search(r(3, 5), r(4, 7), 8, 5, 1000), Error);
}

TEST_CASE("witnesses exist for constructed equal-order pairs") {
    // y = 1/d, x = k/d with k invertible mod d; search positive direction only.
    for (long d : {2, 3, 4, 5, 6, 7, 8}) {
        for (long k = 1; k < d; ++k) {
            if (std::gcd(k, d) != 1 || (k != 1 && k != d - 1)) continue;
            const auto w = affine_orbit_witness_search(r(k, d), r(1, d), 3, 2);
            REQUIRE(w.has_value());
            CHECK(verify_affine_witness(*w, r(k, d), r(1, d)));
        }
    }
}

TEST_CASE("classify_pair") {
    using V = ClassificationVerdict;
    CHECK(classify_pair(3, r(1, 2), r(2, 3)).verdict == V::NotIsomorphic_RegimeMismatch);
    const auto mismatch = classify_pair(3, r(2, 3), r(3, 4));
    CHECK(mismatch.verdict == V::NotIsomorphic_InvariantMismatch);
    CHECK(mismatch.order1 == 5);
    CHECK(mismatch.order2 == 7);
    const auto open = classify_pair(3, r(6, 7), r(5, 8));
    CHECK(open.verdict == V::InvariantIsomorphic_AlgebraOpen);
    CHECK(open.order1 == 13);
    CHECK(open.order2 == 13);
    CHECK(classify_pair(4, r(1, 4), r(1, 5)).verdict == V::InvariantIsomorphic_AlgebraOpen);
    CHECK(classify_pair(3, r(1, 2), r(1, 2)).verdict == V::InvariantIsomorphic_AlgebraOpen);
    CHECK_THROWS_AS(classify_pair(2, r(1, 2), r(1, 2)), Error);
}

TEST_CASE("classify_pair is symmetric and reflexive, and agrees with the subgroup criterion") {
    for (int n = 3; n <= 5; ++n) {
        for (long b1 = 1; b1 <= 9; ++b1) {
            for (long a1 = 1; a1 <= b1; ++a1) {
                for (long b2 = 1; b2 <= 9; ++b2) {
                    for (long a2 = 1; a2 <= b2; ++a2) {
                        const Rational q1 = r(a1, b1), q2 = r(a2, b2);
                        const auto c = classify_pair(n, q1, q2);
                        CHECK(c.verdict == classify_pair(n, q2, q1).verdict);
                        if (c.regime1 == Regime::Simple && c.regime2 == Regime::Simple) {
                            CHECK((c.verdict == ClassificationVerdict::InvariantIsomorphic_AlgebraOpen) ==
                                  subgroup_equal(1 / (1 + q1), 1 / (1 + q2)));
                        }
                    }
                }
                CHECK(classify_pair(n, r(a1, b1), r(a1, b1)).verdict ==
                      ClassificationVerdict::InvariantIsomorphic_AlgebraOpen);
            }
        }
    }
}

TEST_CASE("building thickness") {
    CHECK(building_thickness_order(5, 3) == 4);
    CHECK(building_thickness_order(5, 4) == 5);
    CHECK(building_thickness_order(4, 2) == 3);
    CHECK_THROWS_AS(building_thickness_order(4, 1), Error);
}
