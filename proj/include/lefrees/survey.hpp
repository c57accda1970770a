#pragma once

#include "lefrees/complex.hpp"
#include "lefrees/monomial.hpp"

#include <string>
#include <vector>

namespace lefrees {

/** AHU canonical string of a tree (graph must be connected and acyclic). */
std::string tree_canonical_form(const Graph& tree);

/**
 * Trees on k labeled vertices from Prufer sequences, deduplicated by the
 * AHU canonical form. Exhaustive for k <= 8; larger sizes are sampled
 * (seeded), so the class list is best-effort there.
 */
std::vector<Graph> enumerate_trees(int k);

/**
 * Forests with 2..max_vertices vertices: disjoint unions of tree classes
 * (multisets), components ordered by (size, class index).
 */
std::vector<Graph> enumerate_forests(int max_vertices);

struct ForestSurveyRow {
    Graph forest;
    FVector f;                 // f-vector of Ind(forest)
    DefectPolynomial mu2;      // second symbolic defect polynomial of Ind
    bool q1_equal = false;     // mu2 == f_2 t^3 + ... + f_d t^{d+1}
    bool q2_no_internal_zeros = false;
    bool q2_unimodal = false;
};

struct ForestSurveyReport {
    int max_vertices = 0;
    std::vector<ForestSurveyRow> rows;  // canonical forest order
    std::vector<std::size_t> q1_counterexamples;
    std::vector<std::size_t> q2_counterexamples;  // internal zero or not unimodal
};

/**
 * The question harness: for every enumerated forest G, compares mu_2(Ind G)
 * with the f-vector tail and records unimodality/no-internal-zero checks.
 * Rows are computed by a worker pool but merged in enumeration order, so
 * the report does not depend on the thread count.
 */
ForestSurveyReport survey_forests(int max_vertices, int threads = 1);

}  // namespace lefrees
