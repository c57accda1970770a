#include "lefrees/monomial.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

namespace lefrees {

namespace {

// Generators are ordered by (support tuple, exponent vector). On the
// squarefree equigenerated ideals coming from face lists this coincides
// with the lexicographic face order, so log-matrices line up row for row
// with the face-indexed multiplication matrices.
bool generator_less(const Monomial& a, const Monomial& b) {
    const VertexSet sa = a.support(), sb = b.support();
    if (sa != sb) return sa < sb;
    return a.e < b.e;
}

}  // namespace

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
    if (n <= 0) throw std::invalid_argument("MonomialIdeal: variable count must be positive");
    for (const Monomial& g : gens) {
        if (static_cast<int>(g.e.size()) != n)
            throw std::invalid_argument("MonomialIdeal: generator with wrong variable count");
        for (int x : g.e)
            if (x < 0) throw std::invalid_argument("MonomialIdeal: negative exponent");
    }
    std::sort(gens.begin(), gens.end(), generator_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i]) && !(gens[i] == gens[j])) redundant = true;
        if (!redundant) minimal.push_back(gens[i]);
    }
    MonomialIdeal out;
    out.n_ = n;
    out.gens_ = std::move(minimal);
    return out;
}

bool MonomialIdeal::is_squarefree() const {
    for (const Monomial& g : gens_)
        if (!g.is_squarefree()) return false;
    return true;
}

bool MonomialIdeal::is_equigenerated() const {
    if (gens_.empty()) return false;
    const int d = gens_[0].degree();
    for (const Monomial& g : gens_)
        if (g.degree() != d) return false;
    return true;
}

int MonomialIdeal::generator_degree() const {
    if (!is_equigenerated())
        throw std::invalid_argument("generator_degree: ideal is not equigenerated");
    return gens_[0].degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal facet_ideal(const SimplicialComplex& delta) {
    std::vector<Monomial> gens;
    for (const VertexSet& f : delta.facets())
        gens.push_back(Monomial::from_support(delta.vertex_count(), f));
    return MonomialIdeal::from_generators(delta.vertex_count(), std::move(gens));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& delta) {
    std::vector<Monomial> gens;
    for (const VertexSet& nf : minimal_non_faces(delta))
        gens.push_back(Monomial::from_support(delta.vertex_count(), nf));
    return MonomialIdeal::from_generators(delta.vertex_count(), std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (const auto& [u, v] : g.edges)
        gens.push_back(Monomial::from_support(g.n, {u, v}));
    return MonomialIdeal::from_generators(g.n, std::move(gens));
}

std::vector<VertexSet> minimal_vertex_covers(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw std::invalid_argument("minimal_vertex_covers: ideal must be squarefree");
    const int n = ideal.variable_count();
    if (n > 26) throw std::invalid_argument("minimal_vertex_covers: too many variables (max 26)");
    std::vector<std::uint64_t> supports;
    for (const Monomial& g : ideal.gens()) {
        std::uint64_t s = 0;
        for (int v : g.support()) s |= 1ull << v;
        if (s == 0) return {};  // unit ideal: the empty set cannot be hit
    }
    for (const Monomial& g : ideal.gens()) {
        std::uint64_t s = 0;
        for (int v : g.support()) s |= 1ull << v;
        supports.push_back(s);
    }
    std::vector<VertexSet> covers;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool hits = true;
        for (std::uint64_t s : supports)
            if ((s & mask) == 0) {
                hits = false;
                break;
            }
        if (!hits) continue;
        bool minimal = true;
        for (std::uint64_t bits = mask; bits && minimal; bits &= bits - 1) {
            const std::uint64_t without = mask & ~(bits & -bits);
            bool still = true;
            for (std::uint64_t s : supports)
                if ((s & without) == 0) {
                    still = false;
                    break;
                }
            if (still) minimal = false;
        }
        if (!minimal) continue;
        VertexSet c;
        for (int v = 0; v < n; ++v)
            if (mask & (1ull << v)) c.push_back(v);
        covers.push_back(std::move(c));
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

MonomialIdeal cover_ideal(const SimplicialComplex& delta) {
    const MonomialIdeal f = facet_ideal(delta);
    std::vector<Monomial> gens;
    for (const VertexSet& c : minimal_vertex_covers(f))
        gens.push_back(Monomial::from_support(delta.vertex_count(), c));
    return MonomialIdeal::from_generators(delta.vertex_count(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.variable_count() != b.variable_count())
        throw std::invalid_argument("product: ambient variable counts differ");
    std::vector<Monomial> gens;
    for (const Monomial& x : a.gens())
        for (const Monomial& y : b.gens()) gens.push_back(x * y);
    return MonomialIdeal::from_generators(a.variable_count(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int m) {
    if (m < 1) throw std::invalid_argument("power: exponent must be >= 1");
    MonomialIdeal acc = a;
    for (int i = 1; i < m; ++i) acc = product(acc, a);
    return acc;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.variable_count() != b.variable_count())
        throw std::invalid_argument("sum: ambient variable counts differ");
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal::from_generators(a.variable_count(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.variable_count() != b.variable_count())
        throw std::invalid_argument("intersect: ambient variable counts differ");
    std::vector<Monomial> gens;
    for (const Monomial& x : a.gens())
        for (const Monomial& y : b.gens()) gens.push_back(Monomial::lcm(x, y));
    return MonomialIdeal::from_generators(a.variable_count(), std::move(gens));
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int m) {
    if (!ideal.is_squarefree())
        throw std::invalid_argument(
            "symbolic_power: only squarefree ideals are supported (cover description)");
    if (m < 1) throw std::invalid_argument("symbolic_power: power must be >= 1");
    if (m == 1) return ideal;
    if (ideal.is_zero()) return ideal;
    const int n = ideal.variable_count();
    const std::vector<VertexSet> covers = minimal_vertex_covers(ideal);

    // suffix_count[c][k] = number of members of cover c with index >= k.
    std::vector<std::vector<int>> suffix_count(covers.size(), std::vector<int>(n + 1, 0));
    std::vector<std::vector<char>> in_cover(covers.size(), std::vector<char>(n, 0));
    for (std::size_t c = 0; c < covers.size(); ++c) {
        for (int v : covers[c]) in_cover[c][v] = 1;
        for (int k = n - 1; k >= 0; --k)
            suffix_count[c][k] = suffix_count[c][k + 1] + in_cover[c][k];
    }

    std::vector<Monomial> gens;
    std::vector<int> a(n, 0);
    std::vector<int> cover_sum(covers.size(), 0);

    auto dfs = [&](auto&& self, int k) -> void {
        if (k == n) {
            // All cover sums are >= m here (the pruning is exact). Keep a
            // iff every decrement breaks some constraint, i.e. every
            // positive coordinate sits in a cover whose sum is exactly m.
            for (int v = 0; v < n; ++v) {
                if (a[v] == 0) continue;
                bool tight = false;
                for (std::size_t c = 0; c < covers.size() && !tight; ++c)
                    if (in_cover[c][v] && cover_sum[c] == m) tight = true;
                if (!tight) return;
            }
            gens.push_back(Monomial{a});
            return;
        }
        for (int val = 0; val <= m; ++val) {
            a[k] = val;
            if (val > 0)
                for (std::size_t c = 0; c < covers.size(); ++c)
                    if (in_cover[c][k]) cover_sum[c] += val;
            bool feasible = true;
            for (std::size_t c = 0; c < covers.size() && feasible; ++c)
                if (cover_sum[c] + m * suffix_count[c][k + 1] < m) feasible = false;
            if (feasible) self(self, k + 1);
            if (val > 0)
                for (std::size_t c = 0; c < covers.size(); ++c)
                    if (in_cover[c][k]) cover_sum[c] -= val;
        }
        a[k] = 0;
    };
    dfs(dfs, 0);
    return MonomialIdeal::from_generators(n, std::move(gens));
}

long long sdefect(const MonomialIdeal& ideal, int m) {
    const MonomialIdeal symbolic = symbolic_power(ideal, m);
    const MonomialIdeal ordinary = power(ideal, m);
    long long count = 0;
    for (const Monomial& g : symbolic.gens())
        if (!ordinary.contains(g)) ++count;
    return count;
}

long long DefectPolynomial::coefficient(int exponent) const {
    for (const auto& [e, c] : terms)
        if (e == exponent) return c;
    return 0;
}

std::vector<long long> DefectPolynomial::coefficient_sequence() const {
    std::vector<long long> seq;
    for (const auto& [e, c] : terms) seq.push_back(c);
    return seq;
}

bool DefectPolynomial::no_internal_zeros() const {
    const auto seq = coefficient_sequence();
    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(seq.size()); ++i)
        if (seq[i] != 0) {
            if (first < 0) first = i;
            last = i;
        }
    for (int i = first; i >= 0 && i <= last; ++i)
        if (seq[i] == 0) return false;
    return true;
}

bool DefectPolynomial::unimodal() const {
    const auto seq = coefficient_sequence();
    std::size_t i = 0;
    while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
    while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
    return i + 1 >= seq.size();
}

std::string DefectPolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        os << c << "t^" << e;
        first = false;
    }
    return os.str();
}

DefectPolynomial defect_polynomial(const SimplicialComplex& delta, int m) {
    if (m < 1) throw std::invalid_argument("defect_polynomial: power must be >= 1");
    DefectPolynomial out;
    out.m = m;
    const int d = delta.dim();
    for (int i = 1; i <= d - 1; ++i) {
        const long long c = sdefect(facet_ideal(pure_part(delta, i)), m);
        out.terms.emplace_back(i + 2, c);
    }
    return out;
}

NtfProbeReport ntf_probe(const MonomialIdeal& ideal, int m_max) {
    if (m_max < 2) throw std::invalid_argument("ntf_probe: m_max must be >= 2");
    NtfProbeReport rep;
    for (int m = 2; m <= m_max; ++m) {
        NtfProbeReport::Entry entry;
        entry.m = m;
        const MonomialIdeal symbolic = symbolic_power(ideal, m);
        const MonomialIdeal ordinary = power(ideal, m);
        for (const Monomial& g : symbolic.gens())
            if (!ordinary.contains(g)) entry.witnesses.push_back(g);
        entry.equal = entry.witnesses.empty() && symbolic == ordinary;
        if (!entry.equal && rep.first_gap_m == 0) rep.first_gap_m = m;
        rep.equal_up_to_m_max = rep.equal_up_to_m_max && entry.equal;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

std::vector<VertexSet> graph_triangles(const Graph& g) {
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (const auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
    std::vector<VertexSet> tris;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            if (!adj[i][j]) continue;
            for (int k = j + 1; k < g.n; ++k)
                if (adj[i][k] && adj[j][k]) tris.push_back({i, j, k});
        }
    return tris;
}

MonomialIdeal second_power_triangle_form(const Graph& g) {
    const MonomialIdeal f = edge_ideal(g);
    if (f.is_zero()) return f;
    const MonomialIdeal square = power(f, 2);
    std::vector<Monomial> gens = square.gens();
    for (const VertexSet& t : graph_triangles(g)) gens.push_back(Monomial::from_support(g.n, t));
    return MonomialIdeal::from_generators(g.n, std::move(gens));
}

namespace {

void for_each_degree_vector(int n, int degree, std::vector<int>& buf, int k,
                            const std::function<void(const std::vector<int>&)>& visit) {
    if (k == n - 1) {
        buf[k] = degree;
        visit(buf);
        return;
    }
    for (int v = 0; v <= degree; ++v) {
        buf[k] = v;
        for_each_degree_vector(n, degree - v, buf, k + 1, visit);
    }
}

}  // namespace

std::vector<long long> quotient_hilbert(const MonomialIdeal& ideal, int m, int z_max) {
    if (z_max < 0) throw std::invalid_argument("quotient_hilbert: z_max must be >= 0");
    const int n = ideal.variable_count();
    const MonomialIdeal symbolic = symbolic_power(ideal, m);
    const MonomialIdeal ordinary = power(ideal, m);
    std::vector<long long> h(z_max + 1, 0);
    for (int z = 0; z <= z_max; ++z) {
        std::vector<int> buf(n, 0);
        long long count = 0;
        for_each_degree_vector(n, z, buf, 0, [&](const std::vector<int>& e) {
            const Monomial mono{e};
            if (symbolic.contains(mono) && !ordinary.contains(mono)) ++count;
        });
        h[z] = count;
    }
    return h;
}

namespace {

long long binom_ll(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

}  // namespace

std::vector<long long> rhs_hilbert(const Graph& g, int z_max) {
    if (z_max < 0) throw std::invalid_argument("rhs_hilbert: z_max must be >= 0");
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (const auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;

    std::vector<long long> h(z_max + 1, 0);
    for (const VertexSet& t : graph_triangles(g)) {
        // Vertices outside the closed neighborhood of the triangle.
        std::vector<int> rest;
        for (int v = 0; v < g.n; ++v) {
            bool in_nbhd = false;
            for (int u : t)
                if (v == u || adj[v][u]) in_nbhd = true;
            if (!in_nbhd) rest.push_back(v);
        }
        // Count independent sets of G - N[T] by size.
        const int r = static_cast<int>(rest.size());
        std::vector<long long> ind_by_size(r + 1, 0);
        for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
            bool independent = true;
            for (int i = 0; i < r && independent; ++i)
                for (int j = i + 1; j < r && independent; ++j)
                    if ((mask & (1u << i)) && (mask & (1u << j)) && adj[rest[i]][rest[j]])
                        independent = false;
            if (independent) ++ind_by_size[std::popcount(mask)];
        }
        for (int z = 3; z <= z_max; ++z) {
            const int k = z - 3;
            long long val = (k == 0) ? 1 : 0;
            for (int s = 1; s <= r; ++s) val += ind_by_size[s] * binom_ll(k - 1, s - 1);
            h[z] += val;
        }
    }
    return h;
}

MonomialIdeal squarefree_degree_ideal(int n, int l) {
    if (l < 1 || l > n) throw std::invalid_argument("squarefree_degree_ideal: need 1 <= l <= n");
    std::vector<Monomial> gens;
    std::vector<int> idx(l);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        VertexSet s(idx.begin(), idx.end());
        gens.push_back(Monomial::from_support(n, s));
        int i = l - 1;
        while (i >= 0 && idx[i] == n - l + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

std::string monomial_to_string(const Monomial& m) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (any) os << "*";
        os << "x" << i;
        if (m.e[i] > 1) os << "^" << m.e[i];
        any = true;
    }
    return any ? os.str() : "1";
}

}  // namespace lefrees
