#pragma once

#include "lefrees/complex.hpp"
#include "lefrees/monomial.hpp"

#include <string>
#include <vector>

namespace lefrees {

/**
 * The one self-describing text document format accepted by the CLI.
 *
 * JSON object with fields (unknown fields are rejected):
 *   version: 1
 *   kind:    "complex" | "graph" | "ideal"   (default "complex")
 *   labels:  ["a", "b", ...]                  ambient vertex/variable labels
 *            (optional for complex/graph: inferred in first-appearance
 *            order; required for exponent-form ideals)
 *   facets:  [["a","e","f"], ...]             complex/graph documents
 *   generators: [["a","b"], ...]              squarefree ideal (label form)
 *               [[1,1,0], ...]                general ideal (exponent form)
 *
 * Vertices are 0-based indices internally; the document's label order is
 * the index order.
 */
struct ComplexDocument {
    enum class Kind { complex, graph, ideal };

    int version = 1;
    Kind kind = Kind::complex;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> facets;           // complex/graph
    std::vector<std::vector<std::string>> label_generators; // ideal, squarefree form
    std::vector<std::vector<int>> exponent_generators;      // ideal, exponent form

    static ComplexDocument parse(const std::string& text);
    std::string emit() const;

    SimplicialComplex to_complex() const;
    Graph to_graph() const;
    MonomialIdeal to_ideal() const;

    static ComplexDocument from_complex(const SimplicialComplex& delta,
                                        const std::vector<std::string>& labels = {});
    static ComplexDocument from_graph(const Graph& g,
                                      const std::vector<std::string>& labels = {});
    static ComplexDocument from_ideal(const MonomialIdeal& ideal,
                                      const std::vector<std::string>& labels = {});

    int index_of(const std::string& label) const;  // throws on unknown label
    bool operator==(const ComplexDocument&) const = default;
};

/** Default labels x0, x1, ... or a..z for small n. */
std::vector<std::string> default_labels(int n);

std::string kind_to_string(ComplexDocument::Kind kind);

}  // namespace lefrees
