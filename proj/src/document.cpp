#include "lefrees/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace lefrees {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
        if (n <= 26)
            out.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            out.push_back("x" + std::to_string(i));
    }
    return out;
}

std::string kind_to_string(ComplexDocument::Kind kind) {
    switch (kind) {
        case ComplexDocument::Kind::complex: return "complex";
        case ComplexDocument::Kind::graph: return "graph";
        case ComplexDocument::Kind::ideal: return "ideal";
    }
    return "complex";
}

namespace {

ComplexDocument::Kind kind_from_string(const std::string& s) {
    if (s == "complex") return ComplexDocument::Kind::complex;
    if (s == "graph") return ComplexDocument::Kind::graph;
    if (s == "ideal") return ComplexDocument::Kind::ideal;
    throw std::invalid_argument("document: unknown kind '" + s + "'");
}

}  // namespace

ComplexDocument ComplexDocument::parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("document: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("document: top level must be an object");

    static const std::set<std::string> known = {"version", "kind", "labels", "facets",
                                                "generators"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.count(key))
            throw std::invalid_argument("document: unknown field '" + key + "'");
    }

    ComplexDocument doc;
    if (!j.contains("version") || !j["version"].is_number_integer())
        throw std::invalid_argument("document: missing integer field 'version'");
    doc.version = j["version"].get<int>();
    if (doc.version != 1)
        throw std::invalid_argument("document: unsupported version " +
                                    std::to_string(doc.version));
    if (j.contains("kind")) {
        if (!j["kind"].is_string()) throw std::invalid_argument("document: 'kind' must be a string");
        doc.kind = kind_from_string(j["kind"].get<std::string>());
    }

    if (j.contains("labels")) {
        if (!j["labels"].is_array())
            throw std::invalid_argument("document: 'labels' must be an array of strings");
        std::set<std::string> seen;
        for (const auto& v : j["labels"]) {
            if (!v.is_string())
                throw std::invalid_argument("document: 'labels' must be an array of strings");
            const std::string label = v.get<std::string>();
            if (label.empty()) throw std::invalid_argument("document: empty label");
            if (!seen.insert(label).second)
                throw std::invalid_argument("document: duplicate label '" + label + "'");
            doc.labels.push_back(label);
        }
    }

    const bool want_ideal = doc.kind == Kind::ideal;
    if (want_ideal) {
        if (j.contains("facets"))
            throw std::invalid_argument("document: ideal documents use 'generators', not 'facets'");
        if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
            throw std::invalid_argument("document: ideal needs a nonempty 'generators' array");
        const json& gens = j["generators"];
        const bool exponent_form = gens[0].is_array() && !gens[0].empty() &&
                                   gens[0][0].is_number_integer();
        for (const auto& g : gens) {
            if (!g.is_array() || g.empty())
                throw std::invalid_argument("document: generator must be a nonempty array");
            if (exponent_form) {
                std::vector<int> e;
                for (const auto& v : g) {
                    if (!v.is_number_integer())
                        throw std::invalid_argument("document: mixed generator forms");
                    e.push_back(v.get<int>());
                    if (e.back() < 0)
                        throw std::invalid_argument("document: negative exponent");
                }
                doc.exponent_generators.push_back(std::move(e));
            } else {
                std::vector<std::string> s;
                for (const auto& v : g) {
                    if (!v.is_string())
                        throw std::invalid_argument("document: mixed generator forms");
                    s.push_back(v.get<std::string>());
                }
                doc.label_generators.push_back(std::move(s));
            }
        }
        if (exponent_form) {
            if (doc.labels.empty())
                throw std::invalid_argument(
                    "document: exponent-form generators require explicit 'labels'");
            for (const auto& e : doc.exponent_generators)
                if (e.size() != doc.labels.size())
                    throw std::invalid_argument(
                        "document: exponent vector length differs from label count");
        }
    } else {
        if (j.contains("generators"))
            throw std::invalid_argument("document: 'generators' is only valid for kind 'ideal'");
        if (!j.contains("facets") || !j["facets"].is_array() || j["facets"].empty())
            throw std::invalid_argument("document: needs a nonempty 'facets' array");
        for (const auto& f : j["facets"]) {
            if (!f.is_array() || f.empty())
                throw std::invalid_argument("document: facet must be a nonempty array of labels");
            std::vector<std::string> facet;
            for (const auto& v : f) {
                if (!v.is_string())
                    throw std::invalid_argument("document: facet entries must be labels");
                facet.push_back(v.get<std::string>());
            }
            doc.facets.push_back(std::move(facet));
        }
    }

    // Infer labels in first-appearance order when absent; reject unknown
    // labels when present.
    auto all_label_lists = [&]() {
        std::vector<const std::vector<std::vector<std::string>>*> lists;
        lists.push_back(&doc.facets);
        lists.push_back(&doc.label_generators);
        return lists;
    };
    if (doc.labels.empty()) {
        std::set<std::string> seen;
        for (const auto* list : all_label_lists())
            for (const auto& entry : *list)
                for (const std::string& label : entry)
                    if (seen.insert(label).second) doc.labels.push_back(label);
    } else {
        const std::set<std::string> known_labels(doc.labels.begin(), doc.labels.end());
        for (const auto* list : all_label_lists())
            for (const auto& entry : *list)
                for (const std::string& label : entry)
                    if (!known_labels.count(label))
                        throw std::invalid_argument("document: unknown label '" + label + "'");
    }
    if (doc.labels.empty()) throw std::invalid_argument("document: no labels");
    return doc;
}

std::string ComplexDocument::emit() const {
    ordered_json j;
    j["version"] = version;
    j["kind"] = kind_to_string(kind);
    j["labels"] = labels;
    if (kind == Kind::ideal) {
        ordered_json gens = ordered_json::array();
        for (const auto& g : label_generators) gens.push_back(g);
        for (const auto& e : exponent_generators) gens.push_back(e);
        j["generators"] = std::move(gens);
    } else {
        j["facets"] = facets;
    }
    return j.dump(2) + "\n";
}

int ComplexDocument::index_of(const std::string& label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw std::invalid_argument("document: unknown label '" + label + "'");
    return static_cast<int>(it - labels.begin());
}

SimplicialComplex ComplexDocument::to_complex() const {
    if (kind == Kind::ideal)
        throw std::invalid_argument("document: ideal document cannot be read as a complex");
    std::vector<VertexSet> fs;
    for (const auto& f : facets) {
        VertexSet s;
        for (const std::string& label : f) s.push_back(index_of(label));
        fs.push_back(std::move(s));
    }
    return SimplicialComplex::from_facets(static_cast<int>(labels.size()), std::move(fs));
}

Graph ComplexDocument::to_graph() const {
    if (kind != Kind::graph)
        throw std::invalid_argument("document: not a graph document");
    std::vector<std::pair<int, int>> edges;
    for (const auto& f : facets) {
        if (f.size() != 2)
            throw std::invalid_argument("document: graph facets must have exactly 2 labels");
        edges.emplace_back(index_of(f[0]), index_of(f[1]));
    }
    return Graph::make(static_cast<int>(labels.size()), std::move(edges));
}

MonomialIdeal ComplexDocument::to_ideal() const {
    const int n = static_cast<int>(labels.size());
    if (kind == Kind::ideal) {
        std::vector<Monomial> gens;
        for (const auto& g : label_generators) {
            VertexSet s;
            for (const std::string& label : g) s.push_back(index_of(label));
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            gens.push_back(Monomial::from_support(n, s));
        }
        for (const auto& e : exponent_generators) gens.push_back(Monomial{e});
        return MonomialIdeal::from_generators(n, std::move(gens));
    }
    if (kind == Kind::graph) return edge_ideal(to_graph());
    return facet_ideal(to_complex());
}

namespace {

std::vector<std::string> labels_or_default(int n, const std::vector<std::string>& labels) {
    if (labels.empty()) return default_labels(n);
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("document: label count mismatch");
    return labels;
}

}  // namespace

ComplexDocument ComplexDocument::from_complex(const SimplicialComplex& delta,
                                              const std::vector<std::string>& labels) {
    ComplexDocument doc;
    doc.kind = Kind::complex;
    doc.labels = labels_or_default(delta.vertex_count(), labels);
    for (const VertexSet& f : delta.facets()) {
        std::vector<std::string> facet;
        for (int v : f) facet.push_back(doc.labels[v]);
        doc.facets.push_back(std::move(facet));
    }
    return doc;
}

ComplexDocument ComplexDocument::from_graph(const Graph& g,
                                            const std::vector<std::string>& labels) {
    ComplexDocument doc;
    doc.kind = Kind::graph;
    doc.labels = labels_or_default(g.n, labels);
    for (const auto& [u, v] : g.edges)
        doc.facets.push_back({doc.labels[u], doc.labels[v]});
    return doc;
}

ComplexDocument ComplexDocument::from_ideal(const MonomialIdeal& ideal,
                                            const std::vector<std::string>& labels) {
    ComplexDocument doc;
    doc.kind = Kind::ideal;
    doc.labels = labels_or_default(ideal.variable_count(), labels);
    if (ideal.is_squarefree()) {
        for (const Monomial& g : ideal.gens()) {
            std::vector<std::string> gen;
            for (int v : g.support()) gen.push_back(doc.labels[v]);
            doc.label_generators.push_back(std::move(gen));
        }
    } else {
        for (const Monomial& g : ideal.gens()) doc.exponent_generators.push_back(g.e);
    }
    return doc;
}

}  // namespace lefrees
