#include "lefrees/lefschetz.hpp"

#include <algorithm>

namespace lefrees {

namespace {

// Large prime used to certify full rank over Q quickly: rank mod p never
// exceeds the rational rank, so full modular rank is a proof. A deficient
// modular rank falls back to exact Bareiss elimination.
constexpr std::uint32_t kCertPrime = 2147483647u;  // 2^31 - 1

BigInt factorial(int j) {
    BigInt f = 1;
    for (int i = 2; i <= j; ++i) f *= i;
    return f;
}

// 0/1 containment matrix of the map xL^j : A_i -> A_{i+j}:
// rows = (i+j-1)-faces, cols = (i-1)-faces, entry 1 iff col face <= row face.
IntMatrix containment01(const SimplicialComplex& delta, int i, int j) {
    const auto row_faces = faces(delta, i + j - 1);
    const auto col_faces = faces(delta, i - 1);
    IntMatrix m(row_faces.size(), col_faces.size());
    for (std::size_t r = 0; r < row_faces.size(); ++r)
        for (std::size_t c = 0; c < col_faces.size(); ++c)
            if (subset_of(col_faces[c], row_faces[r])) m.at(r, c) = 1;
    return m;
}

std::size_t rank_q_fast(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const std::size_t full = std::min(m.rows(), m.cols());
    const std::size_t modular = rank(m, PrimeField(kCertPrime));
    if (modular == full) return modular;
    return rank(m, PrimeField{});
}

MapRecord make_map_record(const SimplicialComplex& delta, int i, int j, std::uint32_t p) {
    MapRecord rec;
    rec.i = i;
    rec.j = j;
    const IntMatrix m01 = containment01(delta, i, j);
    rec.target_dim = static_cast<long long>(m01.rows());
    rec.source_dim = static_cast<long long>(m01.cols());

    const bool scalar_vanishes = p > 0 && factorial(j) % p == 0;
    if (scalar_vanishes)
        rec.rank = 0;
    else if (p > 0)
        rec.rank = static_cast<long long>(rank(m01, PrimeField(p)));
    else
        rec.rank = static_cast<long long>(rank_q_fast(m01));
    rec.full_rank = rec.rank == std::min(rec.source_dim, rec.target_dim);

    if (!rec.full_rank) {
        const PrimeField field = p > 0 ? PrimeField(p) : PrimeField{};
        IntMatrix witness_src = m01;
        if (scalar_vanishes) witness_src = IntMatrix(m01.rows(), m01.cols());  // zero map
        if (rec.rank < rec.target_dim)
            if (auto v = left_kernel_vector(witness_src, field)) rec.cokernel_witness = *v;
        if (rec.rank < rec.source_dim)
            if (auto v = left_kernel_vector(witness_src.transposed(), field))
                rec.kernel_witness = *v;
    }
    return rec;
}

}  // namespace

const MapRecord* LefschetzReport::find_map(int i, int j) const {
    for (const MapRecord& rec : maps)
        if (rec.i == i && rec.j == j) return &rec;
    return nullptr;
}

const MapRecord* LefschetzReport::first_failure() const {
    for (const MapRecord& rec : maps)
        if (!rec.full_rank) return &rec;
    return nullptr;
}

IntMatrix multiplication_matrix(const SimplicialComplex& delta, int i, int j, std::uint32_t p) {
    if (i < 0 || j < 1 || i + j > delta.dim() + 1)
        throw std::invalid_argument("multiplication_matrix: (i, j) out of range");
    IntMatrix m = containment01(delta, i, j);
    BigInt scalar = factorial(j);
    if (p > 0) scalar %= p;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) *= scalar;
    return m;
}

LefschetzReport wlp_verdict(const SimplicialComplex& delta, std::uint32_t p) {
    if (p > 0) PrimeField validate(p);
    LefschetzReport rep;
    rep.characteristic = p;
    for (int i = 1; i <= delta.dim(); ++i) {
        rep.maps.push_back(make_map_record(delta, i, 1, p));
        rep.wlp = rep.wlp && rep.maps.back().full_rank;
    }
    rep.slp = rep.wlp;  // only j = 1 maps were checked
    return rep;
}

LefschetzReport slp_verdict(const SimplicialComplex& delta, std::uint32_t p) {
    if (p > 0) PrimeField validate(p);
    LefschetzReport rep;
    rep.characteristic = p;
    const int socle = delta.dim() + 1;
    for (int i = 1; i < socle; ++i)
        for (int j = 1; i + j <= socle; ++j) {
            rep.maps.push_back(make_map_record(delta, i, j, p));
            const MapRecord& rec = rep.maps.back();
            rep.slp = rep.slp && rec.full_rank;
            if (j == 1) rep.wlp = rep.wlp && rec.full_rank;
        }
    return rep;
}

IntMatrix log_matrix(const MonomialIdeal& ideal) {
    IntMatrix m(ideal.gens().size(), ideal.variable_count());
    for (std::size_t r = 0; r < ideal.gens().size(); ++r)
        for (int c = 0; c < ideal.variable_count(); ++c) m.at(r, c) = ideal.gens()[r].e[c];
    return m;
}

long long analytic_spread(const MonomialIdeal& ideal) {
    if (!ideal.is_equigenerated())
        throw std::invalid_argument("analytic spread via log-rank requires equigenerated ideal");
    return static_cast<long long>(rank_q_fast(log_matrix(ideal)));
}

DaonairReport daonair_criterion(const SimplicialComplex& delta, std::uint32_t p) {
    if (p > 0) PrimeField validate(p);
    DaonairReport rep;
    const FVector fv = f_vector(delta);
    rep.prediction_applicable = fv.f(1) >= fv.f(0);
    rep.predicted_full_rank =
        p != 2 && one_skeleton_bipartiteness(delta).all_nonbipartite();
    const MapRecord rec = make_map_record(delta, 1, 1, p);
    rep.computed_full_rank = rec.full_rank;
    rep.rank = rec.rank;
    rep.source_dim = rec.source_dim;
    rep.target_dim = rec.target_dim;
    return rep;
}

std::vector<HauselEntry> hausel_check(const SimplicialComplex& delta, int k_min, int k_max) {
    if (!delta.is_pure())
        throw std::invalid_argument("hausel_check: complex must be pure (level algebra)");
    const int socle = delta.dim() + 1;
    std::vector<HauselEntry> out;
    for (int k = std::max(0, k_min); 2 * k < socle; ++k) {
        if (k_max >= 0 && k > k_max) break;
        const int j = socle - 2 * k;
        const MapRecord rec = make_map_record(delta, k, j, 0);
        HauselEntry e;
        e.k = k;
        e.power = j;
        e.source_dim = rec.source_dim;
        e.rank = rec.rank;
        e.injective = rec.rank == rec.source_dim;
        out.push_back(e);
    }
    return out;
}

TwoDimSlpReport two_dim_slp_criterion(const SimplicialComplex& delta) {
    if (!delta.is_pure()) throw std::invalid_argument("two_dim_slp_criterion: complex is not pure");
    if (delta.dim() != 2)
        throw std::invalid_argument("two_dim_slp_criterion: dimension is not 2");
    const FVector fv = f_vector(delta);
    if (fv.f(2) > fv.f(0))
        throw std::invalid_argument("two_dim_slp_criterion: hypothesis f_2 <= f_0 fails");
    TwoDimSlpReport rep;
    rep.facet_count = fv.f(2);
    rep.spread = analytic_spread(facet_ideal(delta));
    rep.slp_by_criterion = rep.spread == rep.facet_count;
    rep.slp_computed = slp_verdict(delta, 0).slp;
    return rep;
}

namespace {

// Backtracking search for a simple cycle of even length >= 4. Each cycle is
// visited once: it starts at its smallest vertex and the second vertex is
// smaller than the last.
bool find_even_cycle(const Graph& g, std::uint64_t budget, std::vector<int>& cycle_out,
                     bool& exhausted) {
    const auto adj = g.adjacency();
    std::vector<char> on_path(g.n, 0);
    std::vector<int> path;
    std::uint64_t nodes = 0;

    auto dfs = [&](auto&& self, int start, int current) -> bool {
        if (nodes++ >= budget) {
            exhausted = true;
            return false;
        }
        for (int w : adj[current]) {
            if (w == start && path.size() >= 4 && path.size() % 2 == 0 &&
                path[1] < path.back()) {
                cycle_out = path;
                return true;
            }
            if (w <= start || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            if (self(self, start, w)) return true;
            path.pop_back();
            on_path[w] = 0;
            if (exhausted) return false;
        }
        return false;
    };

    for (int s = 0; s < g.n; ++s) {
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        path.assign(1, s);
        if (dfs(dfs, s, s)) return true;
        if (exhausted) return false;
    }
    return false;
}

}  // namespace

LinearTypeReport linear_type_sufficient(const SimplicialComplex& delta, std::uint64_t budget) {
    LinearTypeReport rep;
    if (is_simplicial_forest(delta).is_forest) {
        rep.verdict = LinearTypeReport::Verdict::sufficient_yes;
        rep.reason = "simplicial forest";
        return rep;
    }
    bool exhausted = false;
    std::vector<int> cycle;
    const bool found = find_even_cycle(facet_intersection_graph(delta), budget, cycle, exhausted);
    if (found) {
        rep.verdict = LinearTypeReport::Verdict::inconclusive;
        rep.reason = "even cycle in the facet intersection graph";
        rep.even_cycle = cycle;
    } else if (exhausted) {
        rep.verdict = LinearTypeReport::Verdict::inconclusive;
        rep.reason = "cycle search budget exhausted";
    } else {
        rep.verdict = LinearTypeReport::Verdict::sufficient_yes;
        rep.reason = "no even cycles in the facet intersection graph";
    }
    return rep;
}

std::vector<std::pair<std::uint32_t, bool>> forest_slp_check(
    const SimplicialComplex& delta, const std::vector<std::uint32_t>& characteristics) {
    if (!is_simplicial_forest(delta).is_forest)
        throw std::invalid_argument("forest_slp_check: complex is not a simplicial forest");
    // Every connected component must be 2-dimensional.
    const Graph l = facet_intersection_graph(delta);
    const auto adj = l.adjacency();
    std::vector<int> comp(l.n, -1);
    int ncomp = 0;
    for (int s = 0; s < l.n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<int> comp_dim(ncomp, -1);
    for (int f = 0; f < l.n; ++f)
        comp_dim[comp[f]] =
            std::max(comp_dim[comp[f]], static_cast<int>(delta.facets()[f].size()) - 1);
    for (int c = 0; c < ncomp; ++c)
        if (comp_dim[c] != 2)
            throw std::invalid_argument(
                "forest_slp_check: a connected component is not 2-dimensional");

    std::vector<std::pair<std::uint32_t, bool>> out;
    for (std::uint32_t p : characteristics) {
        if (p == 2) throw std::invalid_argument("forest_slp_check: characteristic 2 excluded");
        out.emplace_back(p, slp_verdict(delta, p).slp);
    }
    return out;
}

NtfSlpReport ntf_slp_interplay(const SimplicialComplex& delta, int m_max) {
    if (!delta.is_pure()) throw std::invalid_argument("ntf_slp_interplay: complex is not pure");
    if (delta.dim() < 1) throw std::invalid_argument("ntf_slp_interplay: dimension must be >= 1");
    const FVector fv = f_vector(delta);
    if (fv.f(delta.dim()) < fv.f(0))
        throw std::invalid_argument("ntf_slp_interplay: hypothesis f_d >= f_0 fails");
    NtfSlpReport rep;
    rep.probe = ntf_probe(facet_ideal(delta), m_max);
    rep.slp = slp_verdict(delta, 0);
    rep.slp_failure_asserted = rep.probe.equal_up_to_m_max;
    rep.top_map = *rep.slp.find_map(1, delta.dim());
    return rep;
}

}  // namespace lefrees
