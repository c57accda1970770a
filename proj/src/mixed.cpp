#include "lefrees/mixed.hpp"

#include "lefrees/lefschetz.hpp"
#include "lefrees/ratlp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace lefrees {

namespace {

void validate_family(const std::vector<MonomialIdeal>& ideals, const std::vector<long long>& a) {
    if (ideals.empty()) throw std::invalid_argument("mixed_positivity: no ideals given");
    const int n = ideals[0].variable_count();
    for (const MonomialIdeal& ideal : ideals) {
        if (ideal.variable_count() != n)
            throw std::invalid_argument("mixed_positivity: ambient variable counts differ");
        if (ideal.is_zero() || !ideal.is_equigenerated())
            throw std::invalid_argument("mixed_positivity: ideals must be nonzero equigenerated");
        if (!ideal.is_squarefree())
            throw std::invalid_argument("mixed_positivity: ideals must be squarefree");
    }
    if (a.size() != ideals.size() + 1)
        throw std::invalid_argument("mixed_positivity: composition length must be s + 1");
    long long total = 0;
    for (long long v : a) {
        if (v < 0) throw std::invalid_argument("mixed_positivity: negative composition entry");
        total += v;
    }
    if (total != n - 1)
        throw std::invalid_argument("mixed_positivity: composition must sum to n - 1");
}

}  // namespace

MixedSpreadTable::MixedSpreadTable(const std::vector<MonomialIdeal>& ideals) {
    if (ideals.empty()) throw std::invalid_argument("MixedSpreadTable: no ideals given");
    s_ = static_cast<int>(ideals.size());
    n_ = ideals[0].variable_count();
    spread_by_mask_.assign(std::size_t{1} << s_, 0);
    std::vector<MonomialIdeal> product_by_mask(std::size_t{1} << s_, MonomialIdeal::zero(n_));
    for (std::uint32_t mask = 1; mask < (1u << s_); ++mask) {
        const int low = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        product_by_mask[mask] =
            rest == 0 ? ideals[low] : product(product_by_mask[rest], ideals[low]);
        spread_by_mask_[mask] = analytic_spread(product_by_mask[mask]);
    }
}

MixedPositivityReport MixedSpreadTable::verdict(const std::vector<long long>& a) const {
    if (static_cast<int>(a.size()) != s_ + 1)
        throw std::invalid_argument("MixedSpreadTable: composition length must be s + 1");
    long long total = 0;
    for (long long v : a) {
        if (v < 0) throw std::invalid_argument("MixedSpreadTable: negative composition entry");
        total += v;
    }
    if (total != n_ - 1)
        throw std::invalid_argument("MixedSpreadTable: composition must sum to n - 1");

    MixedPositivityReport rep;
    rep.positive = true;
    for (std::uint32_t mask = 1; mask < (1u << s_); ++mask) {
        MixedPositivityReport::SubsetEntry entry;
        entry.spread = spread_by_mask_[mask];
        for (int j = 0; j < s_; ++j)
            if (mask & (1u << j)) {
                entry.subset.push_back(j + 1);
                entry.a_sum += a[j + 1];
            }
        entry.satisfied = entry.a_sum <= entry.spread - 1;
        if (!entry.satisfied && rep.positive) {
            rep.positive = false;
            rep.first_violated_subset = entry.subset;
        }
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

MixedPositivityReport mixed_positivity(const std::vector<MonomialIdeal>& ideals,
                                       const std::vector<long long>& a) {
    validate_family(ideals, a);
    return MixedSpreadTable(ideals).verdict(a);
}

MixedPositivityReport simplicial_mixed_eulerian_positive(const SimplicialComplex& delta,
                                                         const std::vector<long long>& a) {
    if (!delta.is_pure())
        throw std::invalid_argument("simplicial_mixed_eulerian_positive: complex is not pure");
    const int k = static_cast<int>(a.size()) - 1;
    if (k < 1 || k > delta.dim() - 1)
        throw std::invalid_argument(
            "simplicial_mixed_eulerian_positive: composition length must be 2..dim");
    std::vector<MonomialIdeal> ideals;
    for (int i = 1; i <= k; ++i) ideals.push_back(facet_ideal(pure_part(delta, i)));
    return mixed_positivity(ideals, a);
}

BigInt eulerian_number(int n, int k) {
    if (n < 1 || k < 0 || k >= n) throw std::invalid_argument("eulerian_number: need 0 <= k < n");
    std::vector<BigInt> row(1, 1);  // A(1, *)
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(m, 0);
        for (int d = 0; d < m; ++d) {
            const BigInt left = d < static_cast<int>(row.size()) ? row[d] : BigInt(0);
            const BigInt up = d >= 1 ? row[d - 1] : BigInt(0);
            next[d] = (d + 1) * left + (m - d) * up;
        }
        row = std::move(next);
    }
    return row[k];
}

namespace {

// LP deciding whether the face spanned by `targets` (one or two vertex
// indices) is exposed strictly away from all other vertices. Positive
// optimum = the targets form a vertex/edge. Returns the optimum and, via
// w_out, the separating functional.
Rational exposure_lp(const LatticePolytope& p, const std::vector<int>& targets,
                     std::vector<Rational>* w_out) {
    const int d = p.dim;
    const std::size_t nv = p.vertices.size();
    // Variables: w+ (d), w- (d), delta (1). Maximize delta.
    LpProblem lp;
    lp.c.assign(2 * d + 1, 0);
    lp.c[2 * d] = 1;
    auto add_row = [&](const std::vector<Rational>& wplus_coeff, const Rational& delta_coeff,
                       const Rational& rhs) {
        std::vector<Rational> row(2 * d + 1, 0);
        for (int c = 0; c < d; ++c) {
            row[c] = wplus_coeff[c];
            row[d + c] = -wplus_coeff[c];
        }
        row[2 * d] = delta_coeff;
        lp.a.push_back(std::move(row));
        lp.b.push_back(rhs);
    };
    // For every other vertex x and every target u: w.(x - u) + delta <= 0.
    for (std::size_t x = 0; x < nv; ++x) {
        if (std::find(targets.begin(), targets.end(), static_cast<int>(x)) != targets.end())
            continue;
        for (int u : targets) {
            std::vector<Rational> coeff(d);
            for (int c = 0; c < d; ++c)
                coeff[c] = Rational(p.vertices[x][c] - p.vertices[u][c]);
            add_row(coeff, 1, 0);
        }
    }
    // Equality w.(u0 - u1) = 0 for an edge test.
    if (targets.size() == 2) {
        std::vector<Rational> coeff(d);
        for (int c = 0; c < d; ++c)
            coeff[c] = Rational(p.vertices[targets[0]][c] - p.vertices[targets[1]][c]);
        add_row(coeff, 0, 0);
        for (Rational& v : coeff) v = -v;
        add_row(coeff, 0, 0);
    }
    // Box -1 <= w_c <= 1.
    for (int c = 0; c < d; ++c) {
        std::vector<Rational> coeff(d, 0);
        coeff[c] = 1;
        add_row(coeff, 0, 1);
        coeff[c] = -1;
        add_row(coeff, 0, 1);
    }
    const LpSolution sol = solve_lp_max(lp);
    if (sol.status != LpSolution::Status::optimal)
        throw std::logic_error("exposure_lp: unbounded (box constraint missing?)");
    if (w_out) {
        w_out->assign(d, 0);
        for (int c = 0; c < d; ++c) (*w_out)[c] = sol.x[c] - sol.x[d + c];
    }
    return sol.objective;
}

Rational dot(const std::vector<Rational>& w, const std::vector<long long>& v) {
    Rational acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * v[i];
    return acc;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(int dim, std::vector<std::vector<long long>> points,
                                             int vertex_cap) {
    if (dim < 1) throw std::invalid_argument("LatticePolytope: dimension must be positive");
    for (const auto& pt : points)
        if (static_cast<int>(pt.size()) != dim)
            throw std::invalid_argument("LatticePolytope: point dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty()) throw std::invalid_argument("LatticePolytope: no points");
    if (static_cast<int>(points.size()) > vertex_cap)
        throw std::invalid_argument("LatticePolytope: vertex cap exceeded");

    LatticePolytope all;
    all.dim = dim;
    all.vertices = points;
    if (points.size() <= 2) return all;
    // Keep extreme points only: x is extreme iff some functional exposes it.
    std::vector<std::vector<long long>> extreme;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (exposure_lp(all, {static_cast<int>(i)}, nullptr) > 0) extreme.push_back(points[i]);
    LatticePolytope out;
    out.dim = dim;
    out.vertices = std::move(extreme);
    return out;
}

LatticePolytope face_indicator_polytope(const SimplicialComplex& delta, int i) {
    if (i < 0 || i > delta.dim())
        throw std::invalid_argument("face_indicator_polytope: dimension out of range");
    std::vector<std::vector<long long>> pts;
    for (const VertexSet& f : faces(delta, i)) {
        std::vector<long long> v(delta.vertex_count(), 0);
        for (int x : f) v[x] = 1;
        pts.push_back(std::move(v));
    }
    // Distinct 0/1 points with equal coordinate sum are all extreme; the
    // constructor's LP reduction is a no-op here.
    LatticePolytope p;
    p.dim = delta.vertex_count();
    std::sort(pts.begin(), pts.end());
    p.vertices = std::move(pts);
    return p;
}

std::vector<std::pair<int, int>> polytope_edges(const LatticePolytope& p, int vertex_cap) {
    const int nv = static_cast<int>(p.vertices.size());
    if (nv > vertex_cap) throw std::invalid_argument("polytope_edges: vertex cap exceeded");
    std::vector<std::pair<int, int>> edges;
    if (nv == 2) return {{0, 1}};
    if (nv < 2) return edges;
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) {
            std::vector<Rational> w;
            const Rational opt = exposure_lp(p, {u, v}, &w);
            if (opt <= 0) continue;
            // Independent certificate check on the returned functional.
            const Rational wu = dot(w, p.vertices[u]);
            const Rational wv = dot(w, p.vertices[v]);
            if (wu != wv) throw std::logic_error("polytope_edges: certificate not constant");
            for (int x = 0; x < nv; ++x) {
                if (x == u || x == v) continue;
                if (dot(w, p.vertices[x]) + opt > wu)
                    throw std::logic_error("polytope_edges: certificate fails separation");
            }
            edges.emplace_back(u, v);
        }
    return edges;
}

GeneralizedPermutohedronReport is_generalized_permutohedron(const LatticePolytope& p,
                                                            int vertex_cap) {
    GeneralizedPermutohedronReport rep;
    rep.edges = polytope_edges(p, vertex_cap);
    for (const auto& [u, v] : rep.edges) {
        int positives = 0, negatives = 0;
        long long pos_val = 0, neg_val = 0;
        bool other = false;
        for (int c = 0; c < p.dim; ++c) {
            const long long diff = p.vertices[u][c] - p.vertices[v][c];
            if (diff > 0) {
                ++positives;
                pos_val = diff;
            } else if (diff < 0) {
                ++negatives;
                neg_val = -diff;
            }
            (void)other;
        }
        const bool ok = positives == 1 && negatives == 1 && pos_val == neg_val;
        if (!ok) rep.violating_edges.emplace_back(u, v);
    }
    rep.is_generalized_permutohedron = rep.violating_edges.empty();
    return rep;
}

}  // namespace lefrees
