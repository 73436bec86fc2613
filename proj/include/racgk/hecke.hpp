#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "racgk/coxeter.hpp"
#include "racgk/graph.hpp"
#include "racgk/k_invariants.hpp"
#include "racgk/rational.hpp"

// Truncated matrices of the deformed representation lambda_q on the span of
// delta_w for w in a ball of W.
//
// lambda_q(s) delta_w = +a delta_w + b delta_{sw}   if |sw| > |w|
//                       -a delta_w + b delta_{sw}   if |sw| < |w|
// with a = (1 - q_s)/(1 + q_s), b = 2 sqrt(q_s)/(1 + q_s).
//
// Truncation drops b delta_{sw} when |sw| exceeds the radius L. Columns of
// words with |w| < L are therefore exact, and every algebraic claim below is
// restricted to such interior columns (|w| < L - 1 when two generators are
// applied in sequence).
//
// Operators are templated on the scalar: double in general, or Rational when
// every q_s is the square of a rational so that sqrt(q_s) is rational too
// ("exact mode").

namespace racgk {

/// The ball basis together with the left action of each generator on it.
class TruncatedSpace {
public:
    static constexpr std::size_t kOutside = static_cast<std::size_t>(-1);

    /// Throws for radius < 1, or BallTooLarge.
    TruncatedSpace(Graph g, std::size_t radius, std::size_t element_cap = kDefaultElementCap);

    const Graph& graph() const noexcept { return graph_; }
    const Ball& ball() const noexcept { return ball_; }
    std::size_t dimension() const noexcept { return ball_.size(); }
    std::size_t radius() const noexcept { return ball_.radius(); }
    std::size_t length(std::size_t j) const { return ball_[j].length(); }

    /// Index of s * w_j, or kOutside when it lies beyond the radius.
    std::size_t left_neighbor(VertexIndex s, std::size_t j) const { return neighbor_[s][j]; }
    /// |s w_j| > |w_j|.
    bool ascends(VertexIndex s, std::size_t j) const { return ascends_[s][j]; }

    /// Columns with |w| <= radius - depth. depth = 1 gives the columns on
    /// which a single generator acts without truncation.
    std::vector<bool> interior_mask(std::size_t depth = 1) const;

private:
    Graph graph_;
    Ball ball_;
    std::vector<std::vector<std::size_t>> neighbor_;
    std::vector<std::vector<bool>> ascends_;
};

/// Sparse vector as (index, value) pairs sorted by index, no explicit zeros.
template <typename Scalar>
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Column-compressed operator on the ball basis.
template <typename Scalar>
class TruncatedOperator {
public:
    TruncatedOperator(std::size_t radius, std::vector<bool> interior, const std::vector<SparseVector<Scalar>>& columns);

    std::size_t dimension() const noexcept { return col_ptr_.size() - 1; }
    std::size_t radius() const noexcept { return radius_; }
    const std::vector<bool>& interior_mask() const noexcept { return interior_; }

    SparseVector<Scalar> column(std::size_t j) const;
    Scalar entry(std::size_t i, std::size_t j) const;
    std::size_t nonzeros() const noexcept { return rows_.size(); }

    SparseVector<Scalar> apply(const SparseVector<Scalar>& v) const;
    SparseVector<Scalar> apply_transpose(const SparseVector<Scalar>& v) const;

private:
    std::size_t radius_;
    std::vector<bool> interior_;
    std::vector<std::size_t> col_ptr_;
    std::vector<std::size_t> rows_;
    std::vector<Scalar> values_;
};

/// Whether every q_s is the square of a rational.
bool exact_mode_available(const DeformationParameter& q);

template <typename Scalar>
TruncatedOperator<Scalar> build_lambda(const TruncatedSpace& space, const DeformationParameter& q, VertexIndex s);

/// p_s = (1 + lambda_q(s)) / 2.
template <typename Scalar>
TruncatedOperator<Scalar> projection(const TruncatedSpace& space, const DeformationParameter& q, VertexIndex s);

/// p_C = product of p_s over C in vertex order, formed column by column by
/// applying the factors to basis vectors; p_empty is the identity. Throws if
/// C is not a clique.
template <typename Scalar>
TruncatedOperator<Scalar> clique_projection(const TruncatedSpace& space, const DeformationParameter& q,
                                            const Clique& c);

/// <op delta_e, delta_e>.
template <typename Scalar>
Scalar trace_of(const TruncatedOperator<Scalar>& op);

struct RelationReport {
    double involution = 0.0;    // max |(lambda(s)^2 - 1) delta_w|, |w| < L
    double unitarity = 0.0;     // max |(lambda(s)^T lambda(s) - 1) delta_w|, |w| < L
    double symmetry = 0.0;      // max |lambda(s)_{ij} - lambda(s)_{ji}| over interior columns j
    double commutation = 0.0;   // max |[lambda(s), lambda(t)] delta_w| over edges, |w| < L - 1
    bool exact = false;         // computed over the rationals

    double max_residual() const;
    bool passed(double tolerance) const { return max_residual() < tolerance || max_residual() == 0.0; }
};

/// Residual sweep over all generators (and all edges for commutation). In
/// exact mode every residual is an exact rational converted to double, so a
/// zero residual is exactly zero. Throws for radius < 2.
template <typename Scalar>
RelationReport check_relations(const TruncatedSpace& space, const DeformationParameter& q);

/// Partial sums of ||eta||^2 = sum_k s_k q^k for the free product of n copies
/// of Z/2Z, with s_k counted by an automaton over reduced words (no two equal
/// adjacent letters) rather than taken from the closed form.
struct EtaSeries {
    int n = 0;
    Rational q;
    std::size_t radius = 0;
    std::vector<Integer> growth;   // s_0, ..., s_radius
    Rational partial_sum;          // sum_{k <= radius} s_k q^k
    Rational tail_bound;           // n (n-1)^radius q^(radius+1) / (1 - (n-1) q)
    Rational closed_form;          // (1 + q) / (1 - (n-1) q)
};

/// Throws unless (n - 1) q < 1.
EtaSeries eta_norm_partial(int n, const Rational& q, std::size_t radius);

struct FreeProductTraceReport {
    EtaSeries series;
    Rational t_hat;        // 1 / partial ||eta||^2
    Rational t_exact;
    Rational t_error;
    Rational t_bound;      // tail / partial^2
    Rational phi_hat;      // (1/(1+q) - t_hat) / (1 - t_hat)
    Rational phi_exact;
    Rational phi_error;
    Rational phi_bound;    // t_bound * (1 - 1/(1+q)) / (1 - t_hat)^2

    bool within_bounds() const { return t_error <= t_bound && phi_error <= phi_bound; }
};

/// Throws outside the NonSimple regime.
FreeProductTraceReport free_product_trace_checks(int n, const Rational& q, std::size_t radius);

extern template class TruncatedOperator<double>;
extern template class TruncatedOperator<Rational>;

}  // namespace racgk
