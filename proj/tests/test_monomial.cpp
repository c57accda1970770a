#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefrees/monomial.hpp"

#include <functional>
#include <random>
#include <set>

using namespace lefrees;

namespace {

SimplicialComplex delta_a() {
    return SimplicialComplex::from_facets(
        6, {{0, 4, 5}, {0, 2, 4}, {2, 3, 4}, {3, 4, 5}, {1, 3, 5}});
}

SimplicialComplex delta_c() {
    return SimplicialComplex::from_facets(8, {{4, 5, 6, 7},
                                              {0, 5, 6, 7},
                                              {1, 4, 6, 7},
                                              {2, 4, 5, 7},
                                              {0, 2, 5, 7},
                                              {3, 4, 5, 6},
                                              {0, 3, 5, 6},
                                              {1, 3, 4, 6}});
}

Graph whiskered_p4() {
    return Graph::make(8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

void for_each_vector_of_degree(int n, int degree, const std::function<void(std::vector<int>&)>& f) {
    std::vector<int> buf(n, 0);
    std::function<void(int, int)> rec = [&](int k, int rest) {
        if (k == n - 1) {
            buf[k] = rest;
            f(buf);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            buf[k] = v;
            rec(k + 1, rest - v);
        }
    };
    rec(0, degree);
}

// Oracle: minimal generators of I^(m) by enumerating every monomial of
// total degree <= n*m (no box capping) that satisfies the cover
// inequalities, then taking the minimal elements under divisibility.
MonomialIdeal symbolic_power_oracle(const MonomialIdeal& ideal, int m) {
    const int n = ideal.variable_count();
    const auto covers = minimal_vertex_covers(ideal);
    std::vector<Monomial> members;
    for (int degree = 0; degree <= n * m; ++degree)
        for_each_vector_of_degree(n, degree, [&](std::vector<int>& e) {
            for (const auto& c : covers) {
                int s = 0;
                for (int v : c) s += e[v];
                if (s < m) return;
            }
            members.push_back(mono(e));
        });
    std::vector<Monomial> minimal;
    for (const Monomial& a : members) {
        bool keep = true;
        for (const Monomial& b : members)
            if (!(b == a) && b.divides(a)) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(a);
    }
    return MonomialIdeal::from_generators(n, minimal);
}

// Oracle: sdefect by the literal definition, mu(I^(m)/I^m) computed degree
// by degree as dim of I^(m) / (m*I^(m) + I^m).
long long sdefect_literal(const MonomialIdeal& ideal, int m) {
    const int n = ideal.variable_count();
    const MonomialIdeal symbolic = symbolic_power(ideal, m);
    const MonomialIdeal ordinary = power(ideal, m);
    long long total = 0;
    for (int degree = 0; degree <= n * m; ++degree)
        for_each_vector_of_degree(n, degree, [&](std::vector<int>& e) {
            const Monomial g = mono(e);
            if (!symbolic.contains(g) || ordinary.contains(g)) return;
            // In m*I^(m)? i.e. some decrement stays inside I^(m).
            for (std::size_t v = 0; v < g.e.size(); ++v) {
                if (g.e[v] == 0) continue;
                Monomial dec = g;
                --dec.e[v];
                if (symbolic.contains(dec)) return;
            }
            ++total;
        });
    return total;
}

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) edges.emplace_back(i, j);
    return Graph::make(n, std::move(edges));
}

}  // namespace

TEST_CASE("facet and Stanley-Reisner ideals of the running example") {
    const auto delta = delta_a();
    const MonomialIdeal f = facet_ideal(delta);
    CHECK(f.gens().size() == 5);
    CHECK(f.contains(mono({1, 0, 1, 0, 1, 0})));  // ace
    CHECK(f.is_squarefree());
    CHECK(f.is_equigenerated());
    const MonomialIdeal sr = stanley_reisner_ideal(delta);
    // (ab, ad, bc, be, cf), generators in support-tuple order.
    CHECK(sr.gens() == std::vector<Monomial>{mono({1, 1, 0, 0, 0, 0}),
                                             mono({1, 0, 0, 1, 0, 0}),
                                             mono({0, 1, 1, 0, 0, 0}),
                                             mono({0, 1, 0, 0, 1, 0}),
                                             mono({0, 0, 1, 0, 0, 1})});
    // Full simplex: Stanley-Reisner ideal is zero.
    const auto simplex = SimplicialComplex::from_facets(3, {{0, 1, 2}});
    CHECK(stanley_reisner_ideal(simplex).is_zero());
}

TEST_CASE("minimal vertex covers") {
    const MonomialIdeal triangle = squarefree_degree_ideal(3, 2);  // (xy, xz, yz)
    CHECK(minimal_vertex_covers(triangle) ==
          std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}});
    const MonomialIdeal single = MonomialIdeal::from_generators(1, {mono({1})});
    CHECK(minimal_vertex_covers(single) == std::vector<VertexSet>{{0}});
    // Covers of F(w(P4)) are the complements of the facets of Delta_C.
    const auto covers = minimal_vertex_covers(edge_ideal(whiskered_p4()));
    REQUIRE(covers.size() == 8);
    std::set<VertexSet> complements;
    const auto dc = delta_c();
    for (const VertexSet& f : dc.facets()) {
        VertexSet comp;
        for (int v = 0; v < 8; ++v)
            if (!std::binary_search(f.begin(), f.end(), v)) comp.push_back(v);
        complements.insert(comp);
    }
    CHECK(std::set<VertexSet>(covers.begin(), covers.end()) == complements);
}

TEST_CASE("cover ideals") {
    // w(P4) as a 1-complex.
    const auto wp4 = whiskered_p4().as_complex();
    const MonomialIdeal j = cover_ideal(wp4);
    const std::vector<VertexSet> expected = {{0, 1, 2, 3}, {0, 1, 2, 7}, {0, 1, 3, 6},
                                             {0, 2, 3, 5}, {0, 2, 5, 7}, {1, 2, 3, 4},
                                             {1, 2, 4, 7}, {1, 3, 4, 6}};
    std::vector<Monomial> gens;
    for (const auto& c : expected) gens.push_back(Monomial::from_support(8, c));
    CHECK(j == MonomialIdeal::from_generators(8, gens));
    // Triangle and single edge.
    const auto tri = SimplicialComplex::from_facets(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(cover_ideal(tri) == squarefree_degree_ideal(3, 2));
    const auto edge = SimplicialComplex::from_facets(2, {{0, 1}});
    CHECK(cover_ideal(edge).gens() == std::vector<Monomial>{mono({1, 0}), mono({0, 1})});
}

TEST_CASE("product, power, sum, intersect") {
    const MonomialIdeal x = MonomialIdeal::from_generators(2, {mono({1, 0})});
    const MonomialIdeal y = MonomialIdeal::from_generators(2, {mono({0, 1})});
    CHECK(product(x, y).gens() == std::vector<Monomial>{mono({1, 1})});
    CHECK(intersect(x, y).gens() == std::vector<Monomial>{mono({1, 1})});
    CHECK(sum(x, y).gens().size() == 2);
    const MonomialIdeal tri = squarefree_degree_ideal(3, 2);
    const MonomialIdeal sq = power(tri, 2);
    CHECK(sq.gens().size() == 6);  // the 6 minimal quadratic products
    for (const Monomial& g : sq.gens()) CHECK(g.degree() == 4);
    CHECK_THROWS_AS(power(tri, 0), std::invalid_argument);
}

TEST_CASE("containment") {
    const MonomialIdeal tri = squarefree_degree_ideal(3, 2);
    CHECK(tri.contains(mono({1, 1, 1})));           // xyz in (xy,xz,yz)
    CHECK(!power(tri, 2).contains(mono({1, 1, 1})));  // xyz not in I^2
    const MonomialIdeal x = MonomialIdeal::from_generators(1, {mono({1})});
    CHECK(!x.contains(mono({0})));  // 1 not in (x)
}

TEST_CASE("symbolic power of the triangle edge ideal") {
    const MonomialIdeal tri = squarefree_degree_ideal(3, 2);
    CHECK(symbolic_power(tri, 1) == tri);
    const MonomialIdeal s2 = symbolic_power(tri, 2);
    CHECK(s2.contains(mono({1, 1, 1})));  // xyz in I^(2)
    CHECK(s2.gens() == std::vector<Monomial>{mono({2, 2, 0}), mono({1, 1, 1}),
                                             mono({2, 0, 2}), mono({0, 2, 2})});
    CHECK_THROWS_AS(symbolic_power(MonomialIdeal::from_generators(1, {mono({2})}), 2),
                    std::invalid_argument);
}

TEST_CASE("box capping is sound: DFS matches the uncapped oracle") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<int> n_pick(2, 4), m_pick(2, 3);
        const int n = n_pick(rng);
        const int m = m_pick(rng);
        const Graph g = random_graph(rng, n, 0.6);
        const MonomialIdeal ideal = edge_ideal(g);
        if (ideal.is_zero()) continue;
        CHECK(symbolic_power(ideal, m) == symbolic_power_oracle(ideal, m));
    }
    // And on the full squarefree-degree ideals.
    CHECK(symbolic_power(squarefree_degree_ideal(4, 2), 2) ==
          symbolic_power_oracle(squarefree_degree_ideal(4, 2), 2));
    CHECK(symbolic_power(squarefree_degree_ideal(4, 3), 3) ==
          symbolic_power_oracle(squarefree_degree_ideal(4, 3), 3));
}

TEST_CASE("symbolic power containment and monotonicity invariants") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(rng, 5, 0.5);
        const MonomialIdeal ideal = edge_ideal(g);
        if (ideal.is_zero()) continue;
        CHECK(symbolic_power(ideal, 1) == ideal);
        for (int m = 2; m <= 3; ++m) {
            const MonomialIdeal symbolic = symbolic_power(ideal, m);
            const MonomialIdeal ordinary = power(ideal, m);
            for (const Monomial& gen : ordinary.gens())
                CHECK(symbolic.contains(gen));  // I^m inside I^(m)
            const MonomialIdeal higher = symbolic_power(ideal, m + 1);
            for (const Monomial& gen : higher.gens())
                CHECK(symbolic.contains(gen));  // I^(m+1) inside I^(m)
        }
    }
}

TEST_CASE("sdefect: agreement with the literal definition on small cases") {
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(rng, 4, 0.7);
        const MonomialIdeal ideal = edge_ideal(g);
        if (ideal.is_zero()) continue;
        CHECK(sdefect(ideal, 2) == sdefect_literal(ideal, 2));
    }
    CHECK(sdefect(squarefree_degree_ideal(3, 2), 2) ==
          sdefect_literal(squarefree_degree_ideal(3, 2), 2));
    CHECK(sdefect(squarefree_degree_ideal(4, 3), 2) ==
          sdefect_literal(squarefree_degree_ideal(4, 3), 2));
}

TEST_CASE("sdefect of squarefree-degree ideals: the binomial formula") {
    // sdefect(I_{n,l}, 2) = C(n, l+1); e.g. n=4, l=2 gives 4.
    CHECK(sdefect(squarefree_degree_ideal(4, 2), 2) == 4);
    for (int n = 3; n <= 6; ++n)
        for (int l = 2; l < n; ++l)
            CHECK(sdefect(squarefree_degree_ideal(n, l), 2) == binom(n, l + 1));
}

TEST_CASE("sdefect of edge ideals counts triangles") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = random_graph(rng, 6, 0.5);
        const MonomialIdeal ideal = edge_ideal(g);
        if (ideal.is_zero()) continue;
        CHECK(sdefect(ideal, 2) == static_cast<long long>(graph_triangles(g).size()));
    }
}

TEST_CASE("defect polynomial of the whiskered-path complex") {
    const auto delta = delta_c();
    const DefectPolynomial mu2 = defect_polynomial(delta, 2);
    CHECK(mu2.terms == std::vector<std::pair<int, long long>>{{3, 22}, {4, 8}});
    CHECK(mu2.to_string() == "22t^3 + 8t^4");
    const DefectPolynomial mu3 = defect_polynomial(delta, 3);
    CHECK(mu3.terms == std::vector<std::pair<int, long long>>{{3, 184}, {4, 106}});
}

TEST_CASE("defect polynomial of simplices matches the binomial expansion") {
    for (int n = 4; n <= 6; ++n) {
        VertexSet all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        const auto simplex = SimplicialComplex::from_facets(n, {all});
        const DefectPolynomial mu2 = defect_polynomial(simplex, 2);
        // Coefficient of t^{i+2} is C(n, i+2) for 1 <= i <= n-2.
        REQUIRE(static_cast<int>(mu2.terms.size()) == n - 2);
        for (const auto& [e, c] : mu2.terms) CHECK(c == binom(n, e));
    }
    // Dimension < 2: empty polynomial.
    const auto edge = SimplicialComplex::from_facets(2, {{0, 1}});
    CHECK(defect_polynomial(edge, 2).terms.empty());
}

TEST_CASE("ntf probe") {
    // Edge ideal of P4 (bipartite): no gap at any probed power.
    const Graph p4 = Graph::make(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto probe_p4 = ntf_probe(edge_ideal(p4), 4);
    CHECK(probe_p4.equal_up_to_m_max);
    CHECK(probe_p4.first_gap_m == 0);
    // The triangle: witness xyz at m = 2.
    const auto probe_tri = ntf_probe(squarefree_degree_ideal(3, 2), 3);
    CHECK(!probe_tri.equal_up_to_m_max);
    CHECK(probe_tri.first_gap_m == 2);
    REQUIRE(!probe_tri.entries[0].witnesses.empty());
    CHECK(probe_tri.entries[0].witnesses[0] == mono({1, 1, 1}));
    // Cover ideal of a whiskered bipartite graph: no gap.
    const auto j = cover_ideal(whiskered_p4().as_complex());
    CHECK(ntf_probe(j, 3).equal_up_to_m_max);
}

TEST_CASE("second power triangle form") {
    // Triangle: minimal generators {xyz, x^2y^2, x^2z^2, y^2z^2} (the
    // mixed quartics are divisible by xyz, the pure squares are not).
    const Graph tri = Graph::make(3, {{0, 1}, {0, 2}, {1, 2}});
    const MonomialIdeal form = second_power_triangle_form(tri);
    CHECK(form.gens() == std::vector<Monomial>{mono({2, 2, 0}), mono({1, 1, 1}),
                                               mono({2, 0, 2}), mono({0, 2, 2})});
    // Triangle-free graph: exactly F(G)^2.
    const Graph c4 = Graph::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(second_power_triangle_form(c4) == power(edge_ideal(c4), 2));
    // 1-skeleton of the running example: the five triangles appear.
    const auto delta = delta_a();
    const Graph skel = one_skeleton(delta);
    const MonomialIdeal form_a = second_power_triangle_form(skel);
    for (const VertexSet& t : {VertexSet{0, 4, 5}, VertexSet{0, 2, 4}, VertexSet{2, 3, 4},
                               VertexSet{3, 4, 5}, VertexSet{1, 3, 5}})
        CHECK(form_a.contains(Monomial::from_support(6, t)));
}

TEST_CASE("triangle description equals the symbolic square (small graphs)") {
    std::mt19937_64 rng(9090);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> n_pick(2, 6);
        const Graph g = random_graph(rng, n_pick(rng), 0.5);
        const MonomialIdeal ideal = edge_ideal(g);
        if (ideal.is_zero()) continue;
        CHECK(symbolic_power(ideal, 2) == second_power_triangle_form(g));
    }
}

TEST_CASE("quotient Hilbert function: worked example") {
    // G = 1-skeleton of the running example: H(3) = 5 and H(z) = 1 after.
    const Graph g = one_skeleton(delta_a());
    const int z_max = 6 + 3;
    const auto lhs = quotient_hilbert(edge_ideal(g), 2, z_max);
    CHECK(lhs[3] == 5);
    for (int z = 4; z <= z_max; ++z) CHECK(lhs[z] == 1);
    CHECK(lhs[0] == 0);
    CHECK(lhs[2] == 0);
    CHECK(rhs_hilbert(g, z_max) == lhs);
    // Triangle-free: identically zero.
    const Graph c4 = Graph::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    for (long long v : quotient_hilbert(edge_ideal(c4), 2, 7)) CHECK(v == 0);
    for (long long v : rhs_hilbert(c4, 7)) CHECK(v == 0);
    // Single triangle: H(3) = 1, nothing after.
    const Graph tri = Graph::make(3, {{0, 1}, {0, 2}, {1, 2}});
    const auto h_tri = quotient_hilbert(edge_ideal(tri), 2, 6);
    CHECK(h_tri[3] == 1);
    for (int z = 4; z <= 6; ++z) CHECK(h_tri[z] == 0);
    CHECK(rhs_hilbert(tri, 6) == h_tri);
}

TEST_CASE("quotient Hilbert equals the triangle formula on random graphs") {
    std::mt19937_64 rng(112358);
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<int> n_pick(3, 6);
        const int n = n_pick(rng);
        const Graph g = random_graph(rng, n, 0.55);
        if (g.edges.empty()) continue;
        const int z_max = n + 3;
        CHECK(quotient_hilbert(edge_ideal(g), 2, z_max) == rhs_hilbert(g, z_max));
    }
}

TEST_CASE("generator sets are antichains under divisibility") {
    std::mt19937_64 rng(654);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(rng, 5, 0.6);
        const MonomialIdeal ideal = edge_ideal(g);
        if (ideal.is_zero()) continue;
        for (const MonomialIdeal& derived :
             {power(ideal, 2), symbolic_power(ideal, 2), second_power_triangle_form(g)}) {
            const auto& gens = derived.gens();
            for (std::size_t i = 0; i < gens.size(); ++i)
                for (std::size_t j = 0; j < gens.size(); ++j)
                    if (i != j) CHECK(!gens[i].divides(gens[j]));
        }
    }
}

TEST_CASE("ideal input validation") {
    CHECK_THROWS_AS(MonomialIdeal::from_generators(2, {mono({1})}), std::invalid_argument);
    CHECK_THROWS_AS(product(MonomialIdeal::zero(2), MonomialIdeal::zero(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(symbolic_power(MonomialIdeal::zero(2), 0), std::invalid_argument);
    CHECK(symbolic_power(MonomialIdeal::zero(2), 2).is_zero());
}
