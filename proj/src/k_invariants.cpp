#include "racgk/k_invariants.hpp"

#include <algorithm>
#include <functional>

#include "racgk/error.hpp"

namespace racgk {

DeformationParameter::DeformationParameter(std::vector<Rational> values) : values_(std::move(values)) {
    for (const auto& q : values_) {
        if (sgn(q) <= 0 || q > 1) throw Error("deformation parameter " + to_string(q) + " outside (0, 1]");
    }
}

DeformationParameter DeformationParameter::uniform(const Graph& g, const Rational& q) {
    return DeformationParameter(std::vector<Rational>(g.size(), q));
}

DeformationParameter DeformationParameter::per_vertex(const Graph& g, const std::map<std::string, Rational>& values) {
    std::vector<Rational> out(g.size());
    std::vector<bool> seen(g.size(), false);
    for (const auto& [label, q] : values) {
        const auto v = g.index_of(label);
        out[v] = q;
        seen[v] = true;
    }
    for (VertexIndex v = 0; v < g.size(); ++v) {
        if (!seen[v]) throw Error("no deformation parameter given for vertex '" + g.label(v) + "'");
    }
    return DeformationParameter(std::move(out));
}

bool DeformationParameter::is_uniform() const {
    return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) == values_.end();
}

RationalSubgroup::RationalSubgroup(Rational generator) : generator_(abs(generator)) {}

RationalSubgroup RationalSubgroup::generated_by(std::span<const Rational> values) {
    // With D the lcm of the denominators, the subgroup is (1/D) * gcd(D*x_i) Z.
    Integer common_den = 1;
    for (const auto& x : values) common_den = lcm(common_den, x.get_den());
    Integer g = 0;
    for (const auto& x : values) {
        const Integer scaled = x.get_num() * (common_den / x.get_den());
        g = gcd(g, scaled);
    }
    Rational d(g, common_den);
    d.canonicalize();
    return RationalSubgroup(d);
}

bool RationalSubgroup::contains(const Rational& x) const {
    if (sgn(generator_) == 0) return sgn(x) == 0;
    const Rational ratio = x / generator_;
    return ratio.get_den() == 1;
}

KTheoryInvariant k_theory(const Graph& g) {
    if (g.empty()) throw Error("k_theory: the commutation graph must have at least one vertex");
    KTheoryInvariant inv;
    inv.k0_basis = enumerate_cliques(g);
    inv.k0_rank = inv.k0_basis.size();
    inv.k1_rank = 0;
    const auto unit = std::find_if(inv.k0_basis.begin(), inv.k0_basis.end(), [](const Clique& c) { return c.empty(); });
    inv.unit_index = static_cast<std::size_t>(unit - inv.k0_basis.begin());
    return inv;
}

Rational clique_trace(const Clique& c, const DeformationParameter& q) {
    Rational value = 1;
    for (auto s : c.members) {
        if (s >= q.size()) throw Error("clique_trace: no parameter for vertex index " + std::to_string(s));
        value /= 1 + q[s];
    }
    return value;
}

TracePairing trace_pairing(const Graph& g, const DeformationParameter& q) {
    if (q.size() != g.size()) {
        throw Error("trace_pairing: " + std::to_string(q.size()) + " parameters for " + std::to_string(g.size()) +
                    " vertices");
    }
    TracePairing pairing;
    for (const auto& c : k_theory(g).k0_basis) pairing.values.push_back(clique_trace(c, q));
    return pairing;
}

RationalSubgroup trace_image(const TracePairing& pairing) { return RationalSubgroup::generated_by(pairing.values); }

std::string to_string(InvariantVerdict v) {
    switch (v) {
        case InvariantVerdict::Isomorphic: return "Isomorphic";
        case InvariantVerdict::NotIsomorphic: return "NotIsomorphic";
        case InvariantVerdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

InvariantComparison compare_graph_invariants(const Graph& g1, const DeformationParameter& q1, const Graph& g2,
                                             const DeformationParameter& q2) {
    const auto k1 = k_theory(g1);
    const auto k2 = k_theory(g2);
    if (k1.k0_rank != k2.k0_rank) {
        return {InvariantVerdict::NotIsomorphic,
                "K0 ranks differ (" + std::to_string(k1.k0_rank) + " vs " + std::to_string(k2.k0_rank) + ")"};
    }
    auto p1 = trace_pairing(g1, q1).values;
    auto p2 = trace_pairing(g2, q2).values;
    const auto image1 = trace_image(TracePairing{p1});
    const auto image2 = trace_image(TracePairing{p2});
    if (image1 != image2) {
        return {InvariantVerdict::NotIsomorphic, "trace images differ (" + to_string(image1.generator()) + "Z vs " +
                                                     to_string(image2.generator()) + "Z)"};
    }
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    if (p1 == p2) return {InvariantVerdict::Isomorphic, "basis pairing multisets coincide"};
    return {InvariantVerdict::Unknown, "equal rank and trace image, but basis pairing multisets differ"};
}

}  // namespace racgk
