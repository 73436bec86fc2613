#include "racgk/elliott.hpp"

#include <cstdlib>
#include <utility>

#include "racgk/error.hpp"

namespace racgk {

namespace {

__extension__ using Wide = __int128;

void require_free_product_rank(int n, const char* what) {
    if (n < 3) throw Error(std::string(what) + ": n must be at least 3 (got " + std::to_string(n) + ")");
}

void require_parameter(const Rational& q) {
    if (sgn(q) <= 0 || q > 1) throw Error("parameter q = " + to_string(q) + " outside (0, 1]");
}

// Rank of a small integer matrix given as rows, by fraction-free elimination.
int integer_rank(std::vector<std::vector<Wide>> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        const auto& p = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            const Wide f = rows[r][col];
            if (f == 0) continue;
            for (std::size_t c = col; c < cols; ++c) rows[r][c] = rows[r][c] * p[col] - p[c] * f;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::Simple: return "Simple";
        case Regime::Boundary: return "Boundary";
        case Regime::NonSimple: return "NonSimple";
    }
    return "?";
}

std::string to_string(TraceSimplex t) { return t == TraceSimplex::Point ? "Point" : "Interval"; }

std::string to_string(ClassificationVerdict v) {
    switch (v) {
        case ClassificationVerdict::NotIsomorphic_RegimeMismatch: return "NotIsomorphic_RegimeMismatch";
        case ClassificationVerdict::NotIsomorphic_InvariantMismatch: return "NotIsomorphic_InvariantMismatch";
        case ClassificationVerdict::InvariantIsomorphic_AlgebraOpen: return "InvariantIsomorphic_AlgebraOpen";
    }
    return "?";
}

Regime regime(int n, const Rational& q) {
    require_free_product_rank(n, "regime");
    require_parameter(q);
    const Rational critical(1, n - 1);
    if (q > critical) return Regime::Simple;
    if (q == critical) return Regime::Boundary;
    return Regime::NonSimple;
}

UnorderedElliottInvariant free_product_invariant(int n, const Rational& q) {
    const Regime r = regime(n, q);
    if (r == Regime::Boundary) {
        throw Error("free_product_invariant: q = 1/(n-1) is the boundary regime, whose trace simplex is not computed");
    }
    UnorderedElliottInvariant inv;
    inv.k0_rank = n + 1;
    inv.k1_rank = 0;
    inv.unit.assign(static_cast<std::size_t>(n) + 1, 0);
    inv.unit[0] = 1;
    auto row = [n](const Rational& generator_value) {
        std::vector<Rational> v(static_cast<std::size_t>(n) + 1, generator_value);
        v[0] = 1;
        return v;
    };
    if (r == Regime::Simple) {
        inv.trace_simplex = TraceSimplex::Point;
        inv.extremal_pairings.push_back(row(1 / (1 + q)));
    } else {
        // epsilon (the character through p) first, then phi.
        inv.trace_simplex = TraceSimplex::Interval;
        inv.extremal_pairings.push_back(row(Rational(1)));
        inv.extremal_pairings.push_back(row(Rational(n - 1, n)));
    }
    return inv;
}

FreeProductTraceData free_product_trace_data(int n, const Rational& q) {
    if (regime(n, q) != Regime::NonSimple) {
        throw Error("free_product_trace_data: requires q < 1/(n-1), got q = " + to_string(q));
    }
    FreeProductTraceData d;
    d.n = n;
    d.q = q;
    d.t = (1 - (n - 1) * q) / (1 + q);
    d.eta_norm_sq = (1 + q) / (1 - (n - 1) * q);
    // phi = (tau - t*epsilon)/(1 - t) evaluated on p_i, where epsilon(p_i) = 1.
    d.phi_value = (1 / (1 + q) - d.t) / (1 - d.t);
    return d;
}

Integer order_in_Q_mod_Z(const Rational& x) { return x.get_den(); }

bool subgroup_equal(const Rational& x, const Rational& y) { return order_in_Q_mod_Z(x) == order_in_Q_mod_Z(y); }

bool affine_orbit_same(const Rational& x, const Rational& y, int n) {
    require_free_product_rank(n, "affine_orbit_same");
    return x == y || order_in_Q_mod_Z(x) == order_in_Q_mod_Z(y);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m{n, std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0)};
    for (int i = 0; i < n; ++i) m.entries[static_cast<std::size_t>(i * n + i)] = 1;
    return m;
}

std::int64_t determinant(const IntMatrix& m) {
    // Bareiss elimination; every division is exact.
    const int n = m.n;
    if (n == 0) return 1;
    std::vector<Wide> a(m.entries.begin(), m.entries.end());
    auto at = [&](int r, int c) -> Wide& { return a[static_cast<std::size_t>(r * n + c)]; };
    int sign = 1;
    Wide prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        }
        prev = at(k, k);
    }
    return static_cast<std::int64_t>(sign * at(n - 1, n - 1));
}

bool verify_affine_witness(const AffineWitness& w, const Rational& x, const Rational& y) {
    const int n = w.b.n;
    if (static_cast<int>(w.c.size()) != n) return false;
    const auto det = determinant(w.b);
    if (det != 1 && det != -1) return false;
    for (int i = 0; i < n; ++i) {
        Rational image = Rational(static_cast<long>(w.c[static_cast<std::size_t>(i)]));
        for (int j = 0; j < n; ++j) image += Rational(static_cast<long>(w.b(i, j))) * y;
        if (image != x) return false;
    }
    return true;
}

std::optional<AffineWitness> affine_orbit_witness_search(const Rational& x, const Rational& y, int n,
                                                         int entry_bound, std::uint64_t cap) {
    if (n < 1) throw Error("affine_orbit_witness_search: n must be positive");
    if (entry_bound < 0) throw Error("affine_orbit_witness_search: negative entry bound");

    // Row i of B contributes y * (row sum) to coordinate i, so a row is usable
    // iff x - y * rowsum is an integer; that integer is then C_i.
    auto offset_for = [&](std::int64_t row_sum) -> std::optional<std::int64_t> {
        const Rational c = x - y * Rational(static_cast<long>(row_sum));
        if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
        return c.get_num().get_si();
    };

    if (auto c = offset_for(1)) {
        return AffineWitness{IntMatrix::identity(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), *c)};
    }

    const std::uint64_t width = static_cast<std::uint64_t>(2 * entry_bound + 1);
    std::uint64_t row_space = 1;
    for (int i = 0; i < n; ++i) {
        row_space *= width;
        if (row_space > cap) throw Error("affine_orbit_witness_search: search space exceeds the candidate cap");
    }
    std::uint64_t examined = row_space;

    // Usable rows in lexicographic order of entries from -bound to +bound.
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> offsets;
    std::vector<std::int64_t> row(static_cast<std::size_t>(n), -entry_bound);
    for (std::uint64_t idx = 0; idx < row_space; ++idx) {
        std::uint64_t rest = idx;
        std::int64_t sum = 0;
        for (int j = n - 1; j >= 0; --j) {
            row[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(rest % width) - entry_bound;
            rest /= width;
            sum += row[static_cast<std::size_t>(j)];
        }
        if (auto c = offset_for(sum)) {
            rows.push_back(row);
            offsets.push_back(*c);
        }
    }

    std::vector<std::size_t> chosen;
    std::optional<AffineWitness> found;
    auto as_int128 = [&](const std::vector<std::size_t>& picks) {
        std::vector<std::vector<Wide>> m;
        for (auto p : picks) m.emplace_back(rows[p].begin(), rows[p].end());
        return m;
    };
    auto search = [&](auto&& self) -> bool {
        if (static_cast<int>(chosen.size()) == n) {
            IntMatrix b{n, {}};
            for (auto p : chosen) b.entries.insert(b.entries.end(), rows[p].begin(), rows[p].end());
            const auto det = determinant(b);
            if (det != 1 && det != -1) return false;
            std::vector<std::int64_t> c;
            for (auto p : chosen) c.push_back(offsets[p]);
            found = AffineWitness{std::move(b), std::move(c)};
            return true;
        }
        for (std::size_t p = 0; p < rows.size(); ++p) {
            if (++examined > cap) throw Error("affine_orbit_witness_search: candidate cap exceeded");
            chosen.push_back(p);
            // Prune as soon as the partial rows are linearly dependent.
            if (integer_rank(as_int128(chosen)) == static_cast<int>(chosen.size()) && self(self)) return true;
            chosen.pop_back();
        }
        return false;
    };
    search(search);
    return found;
}

Classification classify_pair(int n, const Rational& q1, const Rational& q2) {
    Classification c{regime(n, q1), regime(n, q2), order_in_Q_mod_Z(1 / (1 + q1)), order_in_Q_mod_Z(1 / (1 + q2)),
                     ClassificationVerdict::InvariantIsomorphic_AlgebraOpen};
    if (c.regime1 != c.regime2) {
        c.verdict = ClassificationVerdict::NotIsomorphic_RegimeMismatch;
    } else if (c.regime1 == Regime::Simple && c.order1 != c.order2) {
        c.verdict = ClassificationVerdict::NotIsomorphic_InvariantMismatch;
    }
    // NonSimple: the invariant does not depend on q. Boundary: q1 == q2.
    return c;
}

Integer building_thickness_order([[maybe_unused]] int n, int d) {
    if (d < 2) throw Error("building_thickness_order: thickness must be at least 2");
    const Rational q(1, d);
    return order_in_Q_mod_Z(1 / (1 + q));
}

}  // namespace racgk
