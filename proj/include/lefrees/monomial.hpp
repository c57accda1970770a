#pragma once

#include "lefrees/complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace lefrees {

/** Monomial as an exponent vector over a fixed ambient ring. */
struct Monomial {
    std::vector<int> e;

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }
    bool is_squarefree() const {
        for (int x : e)
            if (x > 1) return false;
        return true;
    }
    VertexSet support() const {
        VertexSet s;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) s.push_back(static_cast<int>(i));
        return s;
    }
    static Monomial one(int n) { return Monomial{std::vector<int>(n, 0)}; }
    static Monomial from_support(int n, const VertexSet& s) {
        Monomial m = one(n);
        for (int v : s) m.e[v] = 1;
        return m;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
        return m;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
        return m;
    }
    auto operator<=>(const Monomial&) const = default;
};

/**
 * Monomial ideal by its minimal generators (an antichain under
 * divisibility), sorted lexicographically on exponent vectors.
 */
class MonomialIdeal {
public:
    static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);
    static MonomialIdeal zero(int n) { return from_generators(n, {}); }

    int variable_count() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_squarefree() const;
    bool is_equigenerated() const;
    int generator_degree() const;  // degree of gens when equigenerated

    bool contains(const Monomial& m) const;
    bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }

private:
    int n_ = 0;
    std::vector<Monomial> gens_;
};

MonomialIdeal facet_ideal(const SimplicialComplex& delta);
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& delta);
/// Edge ideal of a graph (same as the facet ideal of its edge complex when
/// the graph has no isolated vertices).
MonomialIdeal edge_ideal(const Graph& g);

/** Minimal transversals of the supports of gens(I); I must be squarefree. */
std::vector<VertexSet> minimal_vertex_covers(const MonomialIdeal& ideal);

MonomialIdeal cover_ideal(const SimplicialComplex& delta);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int m);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/**
 * m-th symbolic power of a squarefree monomial ideal, via the cover
 * description: x^a lies in I^(m) iff sum_{i in C} a_i >= m for every
 * minimal vertex cover C. Minimal generators are found by depth-first
 * enumeration of the box [0,m]^n (capping at m is sound because the cover
 * constraints have 0/1 coefficients).
 */
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int m);

/**
 * sdefect(I, m) = number of minimal generators of I^(m) outside I^m.
 * This equals the minimal generator count of I^(m)/I^m by graded Nakayama
 * for monomial modules; the test suite checks it against the literal
 * degree-by-degree definition on small cases.
 */
long long sdefect(const MonomialIdeal& ideal, int m);

/** mu_m(Delta, t) as explicit (exponent of t, coefficient) pairs. */
struct DefectPolynomial {
    int m = 0;
    std::vector<std::pair<int, long long>> terms;  // exponent ascending

    long long coefficient(int exponent) const;
    std::vector<long long> coefficient_sequence() const;  // in exponent order
    bool no_internal_zeros() const;
    bool unimodal() const;
    std::string to_string() const;
    bool operator==(const DefectPolynomial&) const = default;
};

/**
 * mu_m(Delta, t): the coefficient of t^{i+2} is sdefect(F(Delta^[i]), m)
 * for 1 <= i <= d-1. Empty polynomial when dim Delta < 2.
 */
DefectPolynomial defect_polynomial(const SimplicialComplex& delta, int m);

struct NtfProbeReport {
    struct Entry {
        int m = 0;
        bool equal = false;
        std::vector<Monomial> witnesses;  // generators of I^(m) outside I^m
    };
    std::vector<Entry> entries;
    bool equal_up_to_m_max = true;
    int first_gap_m = 0;  // 0 when no gap found
};

/** Compares I^(m) with I^m for m = 2..m_max. A clean probe never certifies NTF. */
NtfProbeReport ntf_probe(const MonomialIdeal& ideal, int m_max = 4);

/** F(G)^2 + (x_i x_j x_k : {i,j,k} a triangle of G), minimalized. */
MonomialIdeal second_power_triangle_form(const Graph& g);

/** All triangles of a graph, lexicographically sorted. */
std::vector<VertexSet> graph_triangles(const Graph& g);

/**
 * Hilbert function of I^(m)/I^m for z = 0..z_max, by direct enumeration of
 * degree-z monomials. Intended for edge ideals with m = 2 (Cor. of the
 * triangle description), but works for any squarefree ideal.
 */
std::vector<long long> quotient_hilbert(const MonomialIdeal& ideal, int m, int z_max);

/**
 * Right-hand side of the triangle Hilbert-function formula:
 * H(z) = sum over triangles T of H_{S/I_T}(z - 3) with I_T the edge ideal
 * of G - N[T], evaluated through independent-set counts.
 */
std::vector<long long> rhs_hilbert(const Graph& g, int z_max);

/** I_{n,l}: the ideal of all squarefree degree-l monomials in n variables. */
MonomialIdeal squarefree_degree_ideal(int n, int l);

/** Render a monomial like "x0^2*x3" (or "1"). */
std::string monomial_to_string(const Monomial& m);

}  // namespace lefrees
