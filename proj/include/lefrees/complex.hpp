#pragma once

#include "lefrees/exactla.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lefrees {

/// A face or facet: sorted list of 0-based vertex indices, no duplicates.
using VertexSet = std::vector<int>;

/**
 * Simplicial complex given by its facets (an antichain of vertex sets).
 *
 * Facets are stored sorted lexicographically so that every derived object
 * (face lists, incidence matrices, reports) is reproducible bit for bit.
 * Construction silently drops dominated input sets; `minimalized_input()`
 * tells whether that happened so reports can carry a warning.
 */
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets);

    int vertex_count() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    int dim() const { return dim_; }
    bool minimalized_input() const { return minimalized_input_; }

    bool is_pure() const;
    bool is_face(const VertexSet& sorted_set) const;

    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && facets_ == o.facets_;
    }

private:
    int n_ = 0;
    int dim_ = -1;
    bool minimalized_input_ = false;
    std::vector<VertexSet> facets_;
};

/** Simple graph: unordered edges over vertices 0..n-1, no loops. */
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized (i < j), sorted

    static Graph make(int n, std::vector<std::pair<int, int>> edges);

    /// Facets = edges, plus isolated vertices as 0-dimensional facets.
    SimplicialComplex as_complex() const;
    std::vector<std::vector<int>> adjacency() const;
};

/** m-uniform hypergraph: edges are distinct vertex sets of equal size. */
struct Hypergraph {
    int n = 0;
    std::vector<VertexSet> edges;

    static Hypergraph make(int n, std::vector<VertexSet> edges);
    int edge_size() const { return edges.empty() ? 0 : static_cast<int>(edges[0].size()); }
};

/** Face counts (f_{-1}, f_0, ..., f_d) with f_{-1} = 1. */
struct FVector {
    std::vector<long long> counts;  // counts[k] = f_{k-1}

    long long f(int i) const {  // i in [-1, dim]; out of range counts as 0
        const int k = i + 1;
        if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
        return counts[k];
    }
    int dim() const { return static_cast<int>(counts.size()) - 2; }
    bool operator==(const FVector& o) const { return counts == o.counts; }
    std::string to_string() const;
};

/** All i-dimensional faces, lexicographically sorted. i = -1 gives [emptyset]. */
std::vector<VertexSet> faces(const SimplicialComplex& delta, int i);

FVector f_vector(const SimplicialComplex& delta);

/** Facets = maximal faces of dimension <= i. Pre: 0 <= i <= dim. */
SimplicialComplex skeleton(const SimplicialComplex& delta, int i);

/** Delta^[i]: facets = all i-faces. Pre: 0 <= i <= dim. */
SimplicialComplex pure_part(const SimplicialComplex& delta, int i);

/**
 * (i, j)-incidence hypergraph: vertices are the i-faces (indexed by their
 * lexicographic position), one edge per j-face consisting of its i-faces.
 * Pre: -1 <= i < j <= dim (i = -1 is the degenerate single-vertex case).
 */
Hypergraph incidence_hypergraph(const SimplicialComplex& delta, int i, int j);

/** |E| x |V| 0/1 matrix; rows follow edge order, columns vertex order. */
IntMatrix incidence_matrix(const Hypergraph& h);

/** The graph L(Delta): one vertex per facet, edges between intersecting facets. */
Graph facet_intersection_graph(const SimplicialComplex& delta);

struct ForestCheck {
    bool is_forest = false;
    /// Good-leaf elimination order (facet indices): entry k is a leaf of the
    /// subcomplex generated by entries k..s-1.
    std::vector<int> elimination_order;
    /// When not a forest: facet indices of a subcollection with no leaf.
    std::vector<int> leafless_subset;
};

/**
 * Forest test by good-leaf elimination. With `debug_cross_check` set and at
 * most 12 facets, the verdict is validated against the literal definition
 * (every nonempty subcollection has a leaf); a mismatch throws.
 */
ForestCheck is_simplicial_forest(const SimplicialComplex& delta, bool debug_cross_check = false);

/** Literal definition: every nonempty subcollection of facets has a leaf. */
bool is_forest_by_definition(const SimplicialComplex& delta);

/** True if facet `f` (index) is a leaf of the subcollection `subset`. */
bool is_leaf_of(const SimplicialComplex& delta, const std::vector<int>& subset, int f);

struct BergeCycleReport {
    enum class Status { found, none, inconclusive };
    Status status = Status::none;
    std::vector<int> cycle_vertices;  // x_1, ..., x_r
    std::vector<int> cycle_edges;     // indices of E_1, ..., E_r
    std::uint64_t nodes_visited = 0;
};

/**
 * Backtracking search for an odd Berge cycle (x_1,E_1,...,x_r,E_r,x_1),
 * r odd >= 3, distinct vertices and edges, x_k, x_{k+1} in E_k.
 * Gives up with `inconclusive` after `budget` visited search nodes.
 */
BergeCycleReport has_odd_berge_cycle(const Hypergraph& h, std::uint64_t budget = 10000000);

/** Whiskered graph: vertex i gets a pendant neighbor n + i. */
Graph whisker(const Graph& g);

/** Facets = maximal independent sets (Bron-Kerbosch with pivoting). */
SimplicialComplex independence_complex(const Graph& g);

/** Minimal non-faces, lexicographically sorted within each cardinality. */
std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& delta);

/** True iff every minimal non-face has cardinality <= 2. */
bool is_flag(const SimplicialComplex& delta);

/// 1-skeleton as a graph on the ambient vertex set (edges = 1-faces).
Graph one_skeleton(const SimplicialComplex& delta);

struct ComponentBipartiteness {
    std::vector<std::vector<int>> components;  // over 0-faces only
    std::vector<bool> bipartite;               // per component
    bool all_nonbipartite() const;
};

/** Connected components of the 1-skeleton restricted to actual 0-faces. */
ComponentBipartiteness one_skeleton_bipartiteness(const SimplicialComplex& delta);

/** Sorted intersection of two sorted vertex sets. */
VertexSet intersect_sets(const VertexSet& a, const VertexSet& b);

/** True if a is a subset of b (both sorted). */
bool subset_of(const VertexSet& a, const VertexSet& b);

}  // namespace lefrees
