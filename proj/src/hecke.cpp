#include "racgk/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "racgk/elliott.hpp"
#include "racgk/error.hpp"

namespace racgk {

namespace {

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static double from(const Rational& r) { return r.get_d(); }
    static double sqrt_of(const Rational& r) { return std::sqrt(r.get_d()); }
    static double magnitude(double x) { return std::abs(x); }
    static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct ScalarTraits<Rational> {
    static Rational from(const Rational& r) { return r; }
    static Rational sqrt_of(const Rational& r) {
        auto root = rational_sqrt(r);
        if (!root) throw Error("exact mode needs every q_s to be a rational square; " + to_string(r) + " is not");
        return *root;
    }
    static double magnitude(const Rational& x) { return Rational(abs(x)).get_d(); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

template <typename Scalar>
void add_to(std::map<std::size_t, Scalar>& acc, std::size_t i, const Scalar& v) {
    auto [it, inserted] = acc.try_emplace(i, v);
    if (!inserted) it->second += v;
}

template <typename Scalar>
SparseVector<Scalar> compress(const std::map<std::size_t, Scalar>& acc) {
    SparseVector<Scalar> out;
    out.reserve(acc.size());
    for (const auto& [i, v] : acc) {
        if (!ScalarTraits<Scalar>::is_zero(v)) out.emplace_back(i, v);
    }
    return out;
}

template <typename Scalar>
SparseVector<Scalar> basis_vector(std::size_t j) {
    return SparseVector<Scalar>{{j, Scalar(1)}};
}

// max_i |a_i - b_i|
template <typename Scalar>
double max_difference(const SparseVector<Scalar>& a, const SparseVector<Scalar>& b) {
    std::map<std::size_t, Scalar> acc;
    for (const auto& [i, v] : a) add_to(acc, i, v);
    for (const auto& [i, v] : b) add_to(acc, i, Scalar(-v));
    double worst = 0.0;
    for (const auto& [i, v] : acc) worst = std::max(worst, ScalarTraits<Scalar>::magnitude(v));
    return worst;
}

void require_parameter_size(const TruncatedSpace& space, const DeformationParameter& q) {
    if (q.size() != space.graph().size()) {
        throw Error("deformation parameter has " + std::to_string(q.size()) + " entries for " +
                    std::to_string(space.graph().size()) + " generators");
    }
}

}  // namespace

TruncatedSpace::TruncatedSpace(Graph g, std::size_t radius, std::size_t element_cap)
    : graph_(std::move(g)), ball_(graph_, radius, element_cap) {
    if (radius < 1) throw Error("truncation radius must be at least 1");
    const std::size_t dim = ball_.size();
    neighbor_.assign(graph_.size(), std::vector<std::size_t>(dim, kOutside));
    ascends_.assign(graph_.size(), std::vector<bool>(dim, false));
    for (VertexIndex s = 0; s < graph_.size(); ++s) {
        for (std::size_t j = 0; j < dim; ++j) {
            const auto product = mult_gen(graph_, ball_[j], s);
            ascends_[s][j] = product.length_delta > 0;
            if (auto k = ball_.index_of(product.word)) neighbor_[s][j] = *k;
        }
    }
}

std::vector<bool> TruncatedSpace::interior_mask(std::size_t depth) const {
    std::vector<bool> mask(dimension(), false);
    for (std::size_t j = 0; j < dimension(); ++j) mask[j] = length(j) + depth <= radius();
    return mask;
}

template <typename Scalar>
TruncatedOperator<Scalar>::TruncatedOperator(std::size_t radius, std::vector<bool> interior,
                                             const std::vector<SparseVector<Scalar>>& columns)
    : radius_(radius), interior_(std::move(interior)) {
    col_ptr_.reserve(columns.size() + 1);
    col_ptr_.push_back(0);
    for (const auto& col : columns) {
        for (const auto& [i, v] : col) {
            rows_.push_back(i);
            values_.push_back(v);
        }
        col_ptr_.push_back(rows_.size());
    }
}

template <typename Scalar>
SparseVector<Scalar> TruncatedOperator<Scalar>::column(std::size_t j) const {
    SparseVector<Scalar> out;
    for (std::size_t k = col_ptr_.at(j); k < col_ptr_.at(j + 1); ++k) out.emplace_back(rows_[k], values_[k]);
    return out;
}

template <typename Scalar>
Scalar TruncatedOperator<Scalar>::entry(std::size_t i, std::size_t j) const {
    for (std::size_t k = col_ptr_.at(j); k < col_ptr_.at(j + 1); ++k) {
        if (rows_[k] == i) return values_[k];
    }
    return Scalar(0);
}

template <typename Scalar>
SparseVector<Scalar> TruncatedOperator<Scalar>::apply(const SparseVector<Scalar>& v) const {
    std::map<std::size_t, Scalar> acc;
    for (const auto& [j, x] : v) {
        for (std::size_t k = col_ptr_.at(j); k < col_ptr_.at(j + 1); ++k) add_to(acc, rows_[k], Scalar(values_[k] * x));
    }
    return compress(acc);
}

template <typename Scalar>
SparseVector<Scalar> TruncatedOperator<Scalar>::apply_transpose(const SparseVector<Scalar>& v) const {
    // (M^T v)_j = <column j, v>
    std::map<std::size_t, Scalar> lookup(v.begin(), v.end());
    std::map<std::size_t, Scalar> acc;
    for (std::size_t j = 0; j < dimension(); ++j) {
        for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
            if (auto it = lookup.find(rows_[k]); it != lookup.end()) add_to(acc, j, Scalar(values_[k] * it->second));
        }
    }
    return compress(acc);
}

template class TruncatedOperator<double>;
template class TruncatedOperator<Rational>;

bool exact_mode_available(const DeformationParameter& q) {
    return std::all_of(q.values().begin(), q.values().end(),
                       [](const Rational& x) { return rational_sqrt(x).has_value(); });
}

template <typename Scalar>
TruncatedOperator<Scalar> build_lambda(const TruncatedSpace& space, const DeformationParameter& q, VertexIndex s) {
    require_parameter_size(space, q);
    if (s >= space.graph().size()) throw Error("build_lambda: generator index out of range");
    using T = ScalarTraits<Scalar>;
    const Scalar diagonal = T::from((1 - q[s]) / (1 + q[s]));
    const Scalar off_diagonal = Scalar(2) * T::sqrt_of(q[s]) / T::from(Rational(1 + q[s]));

    std::vector<SparseVector<Scalar>> columns(space.dimension());
    for (std::size_t j = 0; j < space.dimension(); ++j) {
        std::map<std::size_t, Scalar> col;
        add_to(col, j, space.ascends(s, j) ? diagonal : Scalar(-diagonal));
        if (const auto k = space.left_neighbor(s, j); k != TruncatedSpace::kOutside) add_to(col, k, off_diagonal);
        columns[j] = compress(col);
    }
    return TruncatedOperator<Scalar>(space.radius(), space.interior_mask(1), columns);
}

template <typename Scalar>
TruncatedOperator<Scalar> projection(const TruncatedSpace& space, const DeformationParameter& q, VertexIndex s) {
    const auto lambda = build_lambda<Scalar>(space, q, s);
    std::vector<SparseVector<Scalar>> columns(space.dimension());
    for (std::size_t j = 0; j < space.dimension(); ++j) {
        std::map<std::size_t, Scalar> col;
        add_to(col, j, Scalar(1));
        for (const auto& [i, v] : lambda.column(j)) add_to(col, i, v);
        for (auto& [i, v] : col) v /= Scalar(2);
        columns[j] = compress(col);
    }
    return TruncatedOperator<Scalar>(space.radius(), space.interior_mask(1), columns);
}

template <typename Scalar>
TruncatedOperator<Scalar> clique_projection(const TruncatedSpace& space, const DeformationParameter& q,
                                            const Clique& c) {
    if (!is_clique(space.graph(), c.members)) throw Error("clique_projection: vertex set is not a clique");
    std::vector<TruncatedOperator<Scalar>> factors;
    for (auto s : c.members) factors.push_back(projection<Scalar>(space, q, s));

    std::vector<SparseVector<Scalar>> columns(space.dimension());
    for (std::size_t j = 0; j < space.dimension(); ++j) {
        auto v = basis_vector<Scalar>(j);
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) v = it->apply(v);
        columns[j] = std::move(v);
    }
    return TruncatedOperator<Scalar>(space.radius(), space.interior_mask(std::max<std::size_t>(c.size(), 1)),
                                     columns);
}

template <typename Scalar>
Scalar trace_of(const TruncatedOperator<Scalar>& op) {
    // Index 0 of every ball is the identity element.
    return op.entry(0, 0);
}

double RelationReport::max_residual() const { return std::max({involution, unitarity, symmetry, commutation}); }

template <typename Scalar>
RelationReport check_relations(const TruncatedSpace& space, const DeformationParameter& q) {
    if (space.radius() < 2) throw Error("check_relations: radius must be at least 2");
    const Graph& g = space.graph();
    std::vector<TruncatedOperator<Scalar>> lambdas;
    for (VertexIndex s = 0; s < g.size(); ++s) lambdas.push_back(build_lambda<Scalar>(space, q, s));

    RelationReport report;
    report.exact = std::is_same_v<Scalar, Rational>;
    const auto inner = space.interior_mask(1);
    const auto inner2 = space.interior_mask(2);
    for (const auto& lambda : lambdas) {
        for (std::size_t j = 0; j < space.dimension(); ++j) {
            if (!inner[j]) continue;
            const auto e = basis_vector<Scalar>(j);
            const auto once = lambda.apply(e);
            report.involution = std::max(report.involution, max_difference(lambda.apply(once), e));
            report.unitarity = std::max(report.unitarity, max_difference(lambda.apply_transpose(once), e));
            for (const auto& [i, v] : once) {
                const Scalar mirrored = lambda.entry(j, i);
                report.symmetry = std::max(report.symmetry, ScalarTraits<Scalar>::magnitude(Scalar(v - mirrored)));
            }
        }
    }
    for (auto [s, t] : g.edges()) {
        for (std::size_t j = 0; j < space.dimension(); ++j) {
            if (!inner2[j]) continue;
            const auto e = basis_vector<Scalar>(j);
            const auto st = lambdas[s].apply(lambdas[t].apply(e));
            const auto ts = lambdas[t].apply(lambdas[s].apply(e));
            report.commutation = std::max(report.commutation, max_difference(st, ts));
        }
    }
    return report;
}

#define RACGK_INSTANTIATE(Scalar)                                                                                  \
    template TruncatedOperator<Scalar> build_lambda<Scalar>(const TruncatedSpace&, const DeformationParameter&,    \
                                                            VertexIndex);                                          \
    template TruncatedOperator<Scalar> projection<Scalar>(const TruncatedSpace&, const DeformationParameter&,      \
                                                          VertexIndex);                                            \
    template TruncatedOperator<Scalar> clique_projection<Scalar>(const TruncatedSpace&,                            \
                                                                 const DeformationParameter&, const Clique&);      \
    template Scalar trace_of<Scalar>(const TruncatedOperator<Scalar>&);                                            \
    template RelationReport check_relations<Scalar>(const TruncatedSpace&, const DeformationParameter&);

RACGK_INSTANTIATE(double)
RACGK_INSTANTIATE(Rational)

#undef RACGK_INSTANTIATE

EtaSeries eta_norm_partial(int n, const Rational& q, std::size_t radius) {
    if (n < 2) throw Error("eta_norm_partial: n must be at least 2");
    if (sgn(q) <= 0 || q > 1) throw Error("eta_norm_partial: q outside (0, 1]");
    const Rational ratio = (n - 1) * q;
    if (ratio >= 1) {
        throw Error("eta_norm_partial: the series diverges for (n-1) q = " + to_string(ratio) + " >= 1");
    }

    EtaSeries out;
    out.n = n;
    out.q = q;
    out.radius = radius;

    // ending[j]: reduced words of the current length whose last letter is j.
    std::vector<Integer> ending(static_cast<std::size_t>(n), 0);
    out.growth.push_back(1);
    Rational power = 1;
    out.partial_sum = 1;
    for (std::size_t k = 1; k <= radius; ++k) {
        std::vector<Integer> next(static_cast<std::size_t>(n), 0);
        Integer total_prev = 0;
        for (const auto& c : ending) total_prev += c;
        for (std::size_t j = 0; j < next.size(); ++j) next[j] = k == 1 ? Integer(1) : Integer(total_prev - ending[j]);
        ending = std::move(next);
        Integer level = 0;
        for (const auto& c : ending) level += c;
        out.growth.push_back(level);
        power *= q;
        out.partial_sum += Rational(level) * power;
    }

    Rational tail = Rational(n) * power * q / (1 - ratio);
    for (std::size_t k = 1; k <= radius; ++k) tail *= n - 1;
    out.tail_bound = tail;
    out.closed_form = (1 + q) / (1 - ratio);
    return out;
}

FreeProductTraceReport free_product_trace_checks(int n, const Rational& q, std::size_t radius) {
    const auto data = free_product_trace_data(n, q);
    FreeProductTraceReport r;
    r.series = eta_norm_partial(n, q, radius);
    const Rational& partial = r.series.partial_sum;
    const Rational single = 1 / (1 + q);

    r.t_hat = 1 / partial;
    r.t_exact = data.t;
    r.t_error = abs(r.t_hat - r.t_exact);
    r.t_bound = r.series.tail_bound / (partial * partial);

    r.phi_hat = (single - r.t_hat) / (1 - r.t_hat);
    r.phi_exact = data.phi_value;
    r.phi_error = abs(r.phi_hat - r.phi_exact);
    const Rational gap = 1 - r.t_hat;
    r.phi_bound = r.t_bound * (1 - single) / (gap * gap);
    return r;
}

}  // namespace racgk
