#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "racgk/graph.hpp"
#include "racgk/rational.hpp"

namespace racgk {

/// Multiparameter q in (0,1]^S: one exact rational per generator, indexed by
/// vertex.
class DeformationParameter {
public:
    /// Throws if any value lies outside (0, 1].
    explicit DeformationParameter(std::vector<Rational> values);

    static DeformationParameter uniform(const Graph& g, const Rational& q);
    /// Keys are vertex labels; every vertex must be covered exactly once.
    static DeformationParameter per_vertex(const Graph& g, const std::map<std::string, Rational>& values);

    std::size_t size() const noexcept { return values_.size(); }
    const Rational& operator[](VertexIndex v) const { return values_.at(v); }
    std::span<const Rational> values() const noexcept { return values_; }

    bool is_uniform() const;

    friend bool operator==(const DeformationParameter&, const DeformationParameter&) = default;

private:
    std::vector<Rational> values_;
};

/// K_0 is free abelian on the clique projections [p_C]; K_1 vanishes. The
/// same invariant holds for every deformation parameter.
struct KTheoryInvariant {
    std::size_t k0_rank = 0;
    std::vector<Clique> k0_basis;   // enumerate_cliques order
    std::size_t k1_rank = 0;
    std::size_t unit_index = 0;     // position of the empty clique, [p_empty] = [1]
};

/// Values of the canonical trace on the basis classes, aligned with
/// KTheoryInvariant::k0_basis.
struct TracePairing {
    std::vector<Rational> values;
};

/// The subgroup d*Z of Q; d == 0 is the trivial subgroup.
class RationalSubgroup {
public:
    RationalSubgroup() = default;
    /// Takes |d|.
    explicit RationalSubgroup(Rational generator);

    /// Subgroup generated by the given rationals.
    static RationalSubgroup generated_by(std::span<const Rational> values);

    const Rational& generator() const noexcept { return generator_; }
    bool contains(const Rational& x) const;

    friend bool operator==(const RationalSubgroup&, const RationalSubgroup&) = default;

private:
    Rational generator_{0};
};

/// Throws on the empty graph.
KTheoryInvariant k_theory(const Graph& g);

/// prod_{s in C} 1/(1+q_s).
Rational clique_trace(const Clique& c, const DeformationParameter& q);

TracePairing trace_pairing(const Graph& g, const DeformationParameter& q);

RationalSubgroup trace_image(const TracePairing& pairing);

enum class InvariantVerdict { Isomorphic, NotIsomorphic, Unknown };

std::string to_string(InvariantVerdict v);

struct InvariantComparison {
    InvariantVerdict verdict = InvariantVerdict::Unknown;
    std::string reason;
};

/// Compares (K_0, [1], tau_*) for two commutation graphs.
///
/// NotIsomorphic when the ranks or the trace images differ; both are
/// invariants of the triple. Isomorphic when the sorted multisets of basis
/// pairing values coincide, since a bijection of clique bases matching values
/// is then an isomorphism fixing the unit. Anything else is Unknown: no
/// complete decision procedure for such triples is available.
InvariantComparison compare_graph_invariants(const Graph& g1, const DeformationParameter& q1,
                                             const Graph& g2, const DeformationParameter& q2);

}  // namespace racgk
