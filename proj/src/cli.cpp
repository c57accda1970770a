#include "lefrees/cli.hpp"

#include "lefrees/document.hpp"
#include "lefrees/lefschetz.hpp"
#include "lefrees/mixed.hpp"
#include "lefrees/survey.hpp"

#include <algorithm>
#include <sstream>

namespace lefrees::cli {

using nlohmann::ordered_json;

namespace {

ordered_json base_object(const std::string& command) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    return j;
}

std::string label_set(const ComplexDocument& doc, const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += doc.labels[s[i]];
    }
    return out + "}";
}

ordered_json label_set_json(const ComplexDocument& doc, const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    for (int v : s) arr.push_back(doc.labels[v]);
    return arr;
}

ordered_json bigint_vector_json(const std::vector<BigInt>& v) {
    ordered_json arr = ordered_json::array();
    for (const BigInt& x : v) arr.push_back(x.str());
    return arr;
}

ordered_json fvector_json(const FVector& fv) {
    ordered_json arr = ordered_json::array();
    for (long long c : fv.counts) arr.push_back(c);
    return arr;
}

ordered_json map_record_json(const MapRecord& rec) {
    ordered_json j;
    j["i"] = rec.i;
    j["j"] = rec.j;
    j["source_dim"] = rec.source_dim;
    j["target_dim"] = rec.target_dim;
    j["rank"] = rec.rank;
    j["full_rank"] = rec.full_rank;
    if (!rec.kernel_witness.empty()) j["kernel_witness"] = bigint_vector_json(rec.kernel_witness);
    if (!rec.cokernel_witness.empty())
        j["cokernel_witness"] = bigint_vector_json(rec.cokernel_witness);
    return j;
}

ordered_json defect_polynomial_json(const DefectPolynomial& mu) {
    ordered_json j;
    j["m"] = mu.m;
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : mu.terms) terms.push_back(ordered_json::array({e, c}));
    j["terms"] = std::move(terms);
    j["pretty"] = mu.to_string();
    return j;
}

SimplicialComplex doc_complex(const ComplexDocument& doc) {
    if (doc.kind == ComplexDocument::Kind::graph) return doc.to_graph().as_complex();
    return doc.to_complex();
}

}  // namespace

ordered_json error_object(const std::string& command, const std::string& message) {
    ordered_json j = base_object(command);
    j["error"] = ordered_json{{"message", message}};
    return j;
}

CmdResult cmd_analyze(const std::string& document_text, std::uint64_t budget) {
    const ComplexDocument doc = ComplexDocument::parse(document_text);
    const SimplicialComplex delta = doc_complex(doc);
    CmdResult res;
    res.machine = base_object("analyze");

    const FVector fv = f_vector(delta);
    const bool pure = delta.is_pure();
    const auto nonfaces = minimal_non_faces(delta);
    const bool flag = is_flag(delta);
    const ForestCheck forest = is_simplicial_forest(delta);
    const ComponentBipartiteness comps = one_skeleton_bipartiteness(delta);
    const LinearTypeReport lt = linear_type_sufficient(delta, budget);

    ordered_json results;
    results["labels"] = doc.labels;
    results["warning_nonminimal_input"] = delta.minimalized_input();
    results["dimension"] = delta.dim();
    results["f_vector"] = fvector_json(fv);
    results["pure"] = pure;
    results["flag"] = flag;
    {
        ordered_json arr = ordered_json::array();
        for (const VertexSet& nf : nonfaces) arr.push_back(label_set_json(doc, nf));
        results["minimal_non_faces"] = std::move(arr);
    }
    {
        ordered_json fj;
        fj["is_forest"] = forest.is_forest;
        if (forest.is_forest) {
            ordered_json order = ordered_json::array();
            for (int idx : forest.elimination_order)
                order.push_back(label_set_json(doc, delta.facets()[idx]));
            fj["leaf_elimination_order"] = std::move(order);
        } else {
            ordered_json bad = ordered_json::array();
            for (int idx : forest.leafless_subset)
                bad.push_back(label_set_json(doc, delta.facets()[idx]));
            fj["leafless_subcollection"] = std::move(bad);
        }
        results["simplicial_forest"] = std::move(fj);
    }
    {
        ordered_json arr = ordered_json::array();
        for (std::size_t c = 0; c < comps.components.size(); ++c) {
            ordered_json cj;
            cj["vertices"] = label_set_json(doc, comps.components[c]);
            cj["bipartite"] = static_cast<bool>(comps.bipartite[c]);
            arr.push_back(std::move(cj));
        }
        results["one_skeleton_components"] = std::move(arr);
    }
    {
        ordered_json lj;
        lj["verdict"] = lt.verdict == LinearTypeReport::Verdict::sufficient_yes
                            ? "linear type (sufficient condition)"
                            : "inconclusive";
        lj["reason"] = lt.reason;
        if (!lt.even_cycle.empty()) {
            ordered_json cyc = ordered_json::array();
            for (int idx : lt.even_cycle)
                cyc.push_back(label_set_json(doc, delta.facets()[idx]));
            lj["even_cycle"] = std::move(cyc);
        }
        results["linear_type"] = std::move(lj);
    }
    res.machine["results"] = std::move(results);

    std::ostringstream os;
    os << "analyze\n";
    if (delta.minimalized_input())
        os << "  warning: facet input was not an antichain; dominated sets dropped\n";
    os << "  f-vector:  " << fv.to_string() << "\n";
    os << "  dimension: " << delta.dim() << (pure ? "  (pure)" : "  (not pure)") << "\n";
    os << "  flag:      " << (flag ? "yes" : "no") << "\n";
    os << "  forest:    " << (forest.is_forest ? "yes" : "no");
    if (!forest.is_forest) {
        os << "  (leafless subcollection:";
        for (int idx : forest.leafless_subset) os << " " << label_set(doc, delta.facets()[idx]);
        os << ")";
    }
    os << "\n";
    os << "  1-skeleton components:";
    for (std::size_t c = 0; c < comps.components.size(); ++c)
        os << " " << label_set(doc, comps.components[c])
           << (comps.bipartite[c] ? " bipartite" : " non-bipartite");
    os << "\n";
    os << "  linear type: "
       << (lt.verdict == LinearTypeReport::Verdict::sufficient_yes
               ? "yes (sufficient condition: " + lt.reason + ")"
               : "inconclusive (" + lt.reason + ")")
       << "\n";
    res.human = os.str();
    return res;
}

CmdResult cmd_lefschetz(const std::string& document_text,
                        const std::vector<std::uint32_t>& characteristics,
                        const std::string& maps_mode) {
    if (maps_mode != "all" && maps_mode != "wlp" && maps_mode != "slp")
        throw std::invalid_argument("lefschetz: --maps must be all, wlp or slp");
    const ComplexDocument doc = ComplexDocument::parse(document_text);
    const SimplicialComplex delta = doc_complex(doc);

    CmdResult res;
    res.machine = base_object("lefschetz");
    res.machine["maps"] = maps_mode;
    ordered_json chars = ordered_json::array();
    std::ostringstream os;
    os << "lefschetz (maps: " << maps_mode << ")\n";
    for (std::uint32_t p : characteristics) {
        const LefschetzReport rep =
            maps_mode == "wlp" ? wlp_verdict(delta, p) : slp_verdict(delta, p);
        ordered_json cj;
        cj["p"] = p;
        ordered_json maps = ordered_json::array();
        for (const MapRecord& rec : rep.maps) maps.push_back(map_record_json(rec));
        cj["map_records"] = std::move(maps);
        cj["wlp"] = rep.wlp;
        if (maps_mode != "wlp") cj["slp"] = rep.slp;
        chars.push_back(std::move(cj));

        os << "  p = " << p << ":  WLP " << (rep.wlp ? "holds" : "FAILS");
        if (maps_mode != "wlp") os << ",  SLP " << (rep.slp ? "holds" : "FAILS");
        os << "\n";
        for (const MapRecord& rec : rep.maps) {
            os << "    xL^" << rec.j << ": A_" << rec.i << " -> A_" << rec.i + rec.j << "   "
               << rec.target_dim << "x" << rec.source_dim << "  rank " << rec.rank
               << (rec.full_rank ? "  (full)" : "  (NOT full)") << "\n";
            if (!rec.cokernel_witness.empty()) {
                os << "      cokernel witness: (";
                for (std::size_t i = 0; i < rec.cokernel_witness.size(); ++i)
                    os << (i ? "," : "") << rec.cokernel_witness[i];
                os << ")\n";
            }
        }
    }
    res.machine["characteristics"] = std::move(chars);
    res.human = os.str();
    return res;
}

CmdResult cmd_sdefect(const std::string& document_text, int m, bool poly) {
    const ComplexDocument doc = ComplexDocument::parse(document_text);
    CmdResult res;
    res.machine = base_object("sdefect");
    res.machine["m"] = m;
    std::ostringstream os;
    if (poly) {
        const SimplicialComplex delta = doc_complex(doc);
        const DefectPolynomial mu = defect_polynomial(delta, m);
        res.machine["results"] = ordered_json{{"polynomial", defect_polynomial_json(mu)}};
        os << "mu_" << m << "(Delta, t) = " << mu.to_string() << "\n";
    } else {
        const MonomialIdeal ideal = doc.to_ideal();
        const long long d = sdefect(ideal, m);
        res.machine["results"] = ordered_json{{"sdefect", d}};
        os << "sdefect(I, " << m << ") = " << d << "\n";
    }
    res.human = os.str();
    return res;
}

CmdResult cmd_survey_forests(int max_vertices, const std::string& question, int threads) {
    if (question != "7.1" && question != "7.2" && question != "both")
        throw std::invalid_argument("survey-forests: --question must be 7.1, 7.2 or both");
    if (max_vertices < 1 || max_vertices > 11)
        throw std::invalid_argument("survey-forests: --max-vertices must be in 1..11");
    const ForestSurveyReport rep = survey_forests(max_vertices, threads);

    CmdResult res;
    res.machine = base_object("survey-forests");
    res.machine["max_vertices"] = max_vertices;
    res.machine["question"] = question;
    ordered_json rows = ordered_json::array();
    for (const ForestSurveyRow& row : rep.rows) {
        ordered_json rj;
        rj["n"] = row.forest.n;
        ordered_json edges = ordered_json::array();
        for (const auto& [u, v] : row.forest.edges) edges.push_back(ordered_json::array({u, v}));
        rj["edges"] = std::move(edges);
        rj["f_vector"] = fvector_json(row.f);
        rj["mu2"] = defect_polynomial_json(row.mu2);
        if (question != "7.2") rj["q1_f_tail_equality"] = row.q1_equal;
        if (question != "7.1") {
            rj["q2_no_internal_zeros"] = row.q2_no_internal_zeros;
            rj["q2_unimodal"] = row.q2_unimodal;
        }
        rows.push_back(std::move(rj));
    }
    ordered_json results;
    results["forest_count"] = rep.rows.size();
    results["rows"] = std::move(rows);
    if (question != "7.2") {
        ordered_json arr = ordered_json::array();
        for (std::size_t i : rep.q1_counterexamples) arr.push_back(i);
        results["q1_counterexamples"] = std::move(arr);
    }
    if (question != "7.1") {
        ordered_json arr = ordered_json::array();
        for (std::size_t i : rep.q2_counterexamples) arr.push_back(i);
        results["q2_counterexamples"] = std::move(arr);
    }
    res.machine["results"] = std::move(results);

    std::ostringstream os;
    os << "survey-forests: " << rep.rows.size() << " forests on 2.." << max_vertices
       << " vertices\n";
    if (question != "7.2")
        os << "  question 7.1 (mu2 = f-vector tail): " << rep.q1_counterexamples.size()
           << " counterexample(s)\n";
    if (question != "7.1")
        os << "  question 7.2 (unimodal, no internal zeros): " << rep.q2_counterexamples.size()
           << " counterexample(s)\n";
    for (std::size_t i : rep.q1_counterexamples) {
        if (question == "7.2") break;
        const ForestSurveyRow& row = rep.rows[i];
        os << "  q1 counterexample: n=" << row.forest.n << " edges=[";
        for (std::size_t k = 0; k < row.forest.edges.size(); ++k)
            os << (k ? "," : "") << "(" << row.forest.edges[k].first << ","
               << row.forest.edges[k].second << ")";
        os << "]  f=" << row.f.to_string() << "  mu2=" << row.mu2.to_string() << "\n";
    }
    for (std::size_t i : rep.q2_counterexamples) {
        if (question == "7.1") break;
        const ForestSurveyRow& row = rep.rows[i];
        os << "  q2 counterexample: n=" << row.forest.n << "  mu2=" << row.mu2.to_string()
           << "\n";
    }
    res.human = os.str();
    return res;
}

CmdResult cmd_mixed(const std::string& document_text,
                    const std::optional<std::vector<long long>>& composition, bool all) {
    if (composition.has_value() == all)
        throw std::invalid_argument("mixed: give exactly one of --a or --all");
    const ComplexDocument doc = ComplexDocument::parse(document_text);
    const SimplicialComplex delta = doc_complex(doc);
    if (!delta.is_pure()) throw std::invalid_argument("mixed: complex must be pure");
    const int d = delta.dim();
    if (d < 2) throw std::invalid_argument("mixed: dimension must be >= 2");
    const int n = delta.vertex_count();

    CmdResult res;
    res.machine = base_object("mixed");
    std::ostringstream os;
    if (!all) {
        const MixedPositivityReport rep = simplicial_mixed_eulerian_positive(delta, *composition);
        res.machine["a"] = *composition;
        ordered_json subsets = ordered_json::array();
        for (const auto& entry : rep.entries) {
            ordered_json ej;
            ej["subset"] = entry.subset;
            ej["a_sum"] = entry.a_sum;
            ej["spread"] = entry.spread;
            ej["satisfied"] = entry.satisfied;
            subsets.push_back(std::move(ej));
        }
        res.machine["results"] =
            ordered_json{{"positive", rep.positive}, {"subsets", std::move(subsets)}};
        os << "mixed multiplicity e_a(m | F(Delta^(1)),...,F(Delta^(" << composition->size() - 1
           << "))) with a = (";
        for (std::size_t i = 0; i < composition->size(); ++i)
            os << (i ? "," : "") << (*composition)[i];
        os << "): " << (rep.positive ? "POSITIVE" : "ZERO") << "\n";
        for (const auto& entry : rep.entries) {
            os << "  J = {";
            for (std::size_t i = 0; i < entry.subset.size(); ++i)
                os << (i ? "," : "") << entry.subset[i];
            os << "}: sum a_J = " << entry.a_sum << " <= l - 1 = " << entry.spread - 1 << "  "
               << (entry.satisfied ? "ok" : "VIOLATED") << "\n";
        }
    } else {
        // Sweep every composition of n - 1 into d parts.
        std::vector<MonomialIdeal> ideals;
        for (int i = 1; i <= d - 1; ++i) ideals.push_back(facet_ideal(pure_part(delta, i)));
        const MixedSpreadTable table(ideals);
        long long total = 0, positive = 0;
        ordered_json violations = ordered_json::array();
        std::vector<long long> a(d, 0);
        auto rec = [&](auto&& self, int idx, long long remaining) -> void {
            if (idx == d - 1) {
                a[idx] = remaining;
                ++total;
                const MixedPositivityReport rep = table.verdict(a);
                if (rep.positive)
                    ++positive;
                else {
                    ordered_json vj;
                    vj["a"] = a;
                    vj["violated_subset"] = *rep.first_violated_subset;
                    violations.push_back(std::move(vj));
                }
                return;
            }
            for (long long v = 0; v <= remaining; ++v) {
                a[idx] = v;
                self(self, idx + 1, remaining - v);
            }
        };
        rec(rec, 0, n - 1);
        res.machine["results"] = ordered_json{{"composition_count", total},
                                              {"positive_count", positive},
                                              {"violations", std::move(violations)}};
        os << "mixed --all: " << positive << "/" << total
           << " compositions positive over the skeleta family\n";
    }
    res.human = os.str();
    return res;
}

CmdResult cmd_permutohedron(const std::string& document_text, int face_dim) {
    const ComplexDocument doc = ComplexDocument::parse(document_text);
    const SimplicialComplex delta = doc_complex(doc);
    const LatticePolytope p = face_indicator_polytope(delta, face_dim);
    const GeneralizedPermutohedronReport rep = is_generalized_permutohedron(p);

    CmdResult res;
    res.machine = base_object("permutohedron");
    res.machine["dim"] = face_dim;
    ordered_json results;
    results["vertex_count"] = p.vertices.size();
    ordered_json verts = ordered_json::array();
    for (const auto& v : p.vertices) verts.push_back(v);
    results["vertices"] = std::move(verts);
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : rep.edges) edges.push_back(ordered_json::array({u, v}));
    results["edges"] = std::move(edges);
    results["is_generalized_permutohedron"] = rep.is_generalized_permutohedron;
    ordered_json bad = ordered_json::array();
    for (const auto& [u, v] : rep.violating_edges) bad.push_back(ordered_json::array({u, v}));
    results["violating_edges"] = std::move(bad);
    res.machine["results"] = std::move(results);

    std::ostringstream os;
    os << "permutohedron check of the " << face_dim << "-face indicator polytope\n";
    os << "  vertices: " << p.vertices.size() << ", edges: " << rep.edges.size() << "\n";
    os << "  generalized permutohedron: "
       << (rep.is_generalized_permutohedron ? "yes" : "NO") << "\n";
    for (const auto& [u, v] : rep.violating_edges) {
        os << "  witness edge: (";
        for (std::size_t i = 0; i < p.vertices[u].size(); ++i)
            os << (i ? "," : "") << p.vertices[u][i];
        os << ") -- (";
        for (std::size_t i = 0; i < p.vertices[v].size(); ++i)
            os << (i ? "," : "") << p.vertices[v][i];
        os << ")\n";
    }
    res.human = os.str();
    return res;
}

}  // namespace lefrees::cli
