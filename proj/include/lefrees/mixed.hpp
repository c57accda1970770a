#pragma once

#include "lefrees/complex.hpp"
#include "lefrees/exactla.hpp"
#include "lefrees/monomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace lefrees {

/**
 * Positivity certificate for the mixed multiplicity e_a(m | I_1,...,I_s)
 * of equigenerated squarefree monomial ideals: positive iff for every
 * nonempty J subseteq {1..s} the inequality
 *     sum_{j in J} a_j <= l(prod_{j in J} I_j) - 1
 * holds. One entry per subset, in ascending bitmask order.
 */
struct MixedPositivityReport {
    struct SubsetEntry {
        std::vector<int> subset;  // 1-based ideal indices
        long long a_sum = 0;
        long long spread = 0;
        bool satisfied = false;
    };
    std::vector<SubsetEntry> entries;
    bool positive = false;
    std::optional<std::vector<int>> first_violated_subset;
};

MixedPositivityReport mixed_positivity(const std::vector<MonomialIdeal>& ideals,
                                       const std::vector<long long>& a);

/**
 * Analytic spreads of all nonempty subset products, reusable across many
 * compositions a (the spreads do not depend on a).
 */
class MixedSpreadTable {
public:
    explicit MixedSpreadTable(const std::vector<MonomialIdeal>& ideals);
    MixedPositivityReport verdict(const std::vector<long long>& a) const;
    int ideal_count() const { return s_; }
    int variable_count() const { return n_; }

private:
    int s_ = 0;
    int n_ = 0;
    std::vector<long long> spread_by_mask_;  // index = subset bitmask
};

/**
 * The skeleta specialization: ideals F(Delta^(1)), ..., F(Delta^(k)) with
 * a = (a_0,...,a_k), sum a = n - 1, 1 <= k <= dim - 1. Delta must be pure.
 */
MixedPositivityReport simplicial_mixed_eulerian_positive(const SimplicialComplex& delta,
                                                         const std::vector<long long>& a);

/** Eulerian number A(n, k): permutations of [n] with exactly k descents. */
BigInt eulerian_number(int n, int k);

/** Lattice polytope as a list of extreme integer points. */
struct LatticePolytope {
    int dim = 0;
    std::vector<std::vector<long long>> vertices;

    /// Deduplicates and removes non-extreme points (exact LP test).
    static LatticePolytope from_points(int dim, std::vector<std::vector<long long>> points,
                                       int vertex_cap = 40);
};

/** Vertices = 0/1 indicator vectors of the i-faces of Delta. */
LatticePolytope face_indicator_polytope(const SimplicialComplex& delta, int i);

/**
 * All edges of the polytope, as index pairs (u < v), found by an exact
 * rational LP: (u,v) is an edge iff some functional w with |w_c| <= 1 and
 * w.(u - v) = 0 separates {u, v} strictly from every other vertex. The
 * optimal certificate is re-verified by direct evaluation.
 */
std::vector<std::pair<int, int>> polytope_edges(const LatticePolytope& p, int vertex_cap = 40);

struct GeneralizedPermutohedronReport {
    bool is_generalized_permutohedron = false;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> violating_edges;  // direction not e_i - e_j
};

/** Checks that every edge direction is parallel to some e_i - e_j. */
GeneralizedPermutohedronReport is_generalized_permutohedron(const LatticePolytope& p,
                                                            int vertex_cap = 40);

}  // namespace lefrees
