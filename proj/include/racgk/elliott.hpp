#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "racgk/rational.hpp"

// Single-parameter Hecke deformations of the free product of n copies of
// Z/2Z: trace regimes, the unordered Elliott invariant, and the decision
// procedure comparing two parameters.
//
// Parameters are exact rationals throughout. For an irrational q the only
// possible partner is q itself, which cannot be expressed here, so that case
// is not represented.

namespace racgk {

/// Position of q relative to the critical value 1/(n-1).
enum class Regime {
    Simple,     // q > 1/(n-1): simple, unique trace
    Boundary,   // q = 1/(n-1): character with simple kernel
    NonSimple,  // q < 1/(n-1): C plus a simple algebra, two extremal traces
};

std::string to_string(Regime r);

/// Throws for n < 3 or q outside (0, 1].
Regime regime(int n, const Rational& q);

enum class TraceSimplex { Point, Interval };

std::string to_string(TraceSimplex t);

/// (K_0, K_1, [1], T(A), pairing) with K_0 = Z^{n+1} on the basis
/// [1], [p_1], ..., [p_n].
struct UnorderedElliottInvariant {
    int k0_rank = 0;
    int k1_rank = 0;
    std::vector<int> unit;
    TraceSimplex trace_simplex = TraceSimplex::Point;
    /// One row per extremal trace, each of length n+1.
    std::vector<std::vector<Rational>> extremal_pairings;

    friend bool operator==(const UnorderedElliottInvariant&, const UnorderedElliottInvariant&) = default;
};

/// Throws on the Boundary regime, whose trace simplex is not computed.
UnorderedElliottInvariant free_product_invariant(int n, const Rational& q);

/// Closed-form trace data in the NonSimple regime, where the minimal
/// projection p = p_1 ^ ... ^ p_n is nonzero and the canonical trace splits
/// as t * epsilon + (1 - t) * phi.
struct FreeProductTraceData {
    int n = 0;
    Rational q;
    Rational t;             // tau(p) = (1 - (n-1)q) / (1 + q)
    Rational eta_norm_sq;   // sum_w q^|w| = (1 + q) / (1 - (n-1)q)
    Rational phi_value;     // phi(p_i) = (n-1)/n
};

/// Throws outside the NonSimple regime.
FreeProductTraceData free_product_trace_data(int n, const Rational& q);

/// Least d >= 1 with d*x in Z, i.e. the reduced denominator.
Integer order_in_Q_mod_Z(const Rational& x);

/// Whether Z + xZ = Z + yZ. For rationals this holds iff the orders in Q/Z
/// agree; the criterion is applied to all rationals, not only [1/2, 1].
bool subgroup_equal(const Rational& x, const Rational& y);

/// Whether the constant vector (x,...,x) in Q^n is carried to (y,...,y) by
/// some affine map v -> C + B v with B in GL_n(Z), C in Z^n: either x == y or
/// x and y have the same order in Q/Z. Throws for n < 3.
bool affine_orbit_same(const Rational& x, const Rational& y, int n);

/// Dense n x n integer matrix, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<std::int64_t> entries;

    std::int64_t operator()(int row, int col) const { return entries[static_cast<std::size_t>(row * n + col)]; }
    static IntMatrix identity(int n);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

std::int64_t determinant(const IntMatrix& m);

struct AffineWitness {
    IntMatrix b;
    std::vector<std::int64_t> c;
};

/// Whether (x,...,x) == C + B (y,...,y) holds exactly.
bool verify_affine_witness(const AffineWitness& w, const Rational& x, const Rational& y);

inline constexpr std::uint64_t kWitnessSearchCap = 10'000'000;

/// Brute-force search for B (det = +-1, |entries| <= entry_bound) and integer
/// C with (x,...,x) = C + B (y,...,y). The identity is tried first; after
/// that matrices are enumerated row by row in a fixed order, and the first
/// witness found is returned. Not finding one within the bound proves
/// nothing. Throws once more than `cap` candidate rows have been examined.
std::optional<AffineWitness> affine_orbit_witness_search(const Rational& x, const Rational& y, int n,
                                                         int entry_bound, std::uint64_t cap = kWitnessSearchCap);

enum class ClassificationVerdict {
    NotIsomorphic_RegimeMismatch,
    NotIsomorphic_InvariantMismatch,
    /// The unordered Elliott invariants agree. Whether the algebras themselves
    /// are isomorphic is open.
    InvariantIsomorphic_AlgebraOpen,
};

std::string to_string(ClassificationVerdict v);

struct Classification {
    Regime regime1;
    Regime regime2;
    Integer order1;   // order of 1/(1+q1) in Q/Z
    Integer order2;
    ClassificationVerdict verdict;
};

Classification classify_pair(int n, const Rational& q1, const Rational& q2);

/// Order of 1/(1+q) in Q/Z for q = 1/d, which is d + 1. Throws for d < 2.
Integer building_thickness_order(int n, int d);

}  // namespace racgk
