#include "lefrees/complex.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <sstream>

namespace lefrees {

VertexSet intersect_sets(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> facets) {
    if (n <= 0) throw std::invalid_argument("SimplicialComplex: vertex count must be positive");
    if (facets.empty()) throw std::invalid_argument("SimplicialComplex: facet list is empty");
    for (VertexSet& f : facets) {
        if (f.empty()) throw std::invalid_argument("SimplicialComplex: empty facet");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.front() < 0 || f.back() >= n)
            throw std::invalid_argument("SimplicialComplex: vertex index out of range");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // Antichain: drop any set contained in another.
    const std::size_t before = facets.size();
    std::vector<VertexSet> kept;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < facets.size() && !dominated; ++j)
            if (i != j && facets[i].size() < facets[j].size() && subset_of(facets[i], facets[j]))
                dominated = true;
        if (!dominated) kept.push_back(facets[i]);
    }
    SimplicialComplex c;
    c.n_ = n;
    c.facets_ = std::move(kept);
    c.minimalized_input_ = c.facets_.size() != before;
    for (const VertexSet& f : c.facets_) c.dim_ = std::max<int>(c.dim_, static_cast<int>(f.size()) - 1);
    return c;
}

bool SimplicialComplex::is_pure() const {
    for (const VertexSet& f : facets_)
        if (static_cast<int>(f.size()) != dim_ + 1) return false;
    return true;
}

bool SimplicialComplex::is_face(const VertexSet& s) const {
    for (const VertexSet& f : facets_)
        if (subset_of(s, f)) return true;
    return false;
}

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("Graph: vertex index out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{n, std::move(edges)};
}

SimplicialComplex Graph::as_complex() const {
    std::vector<VertexSet> facets;
    std::vector<char> covered(n, 0);
    for (const auto& [u, v] : edges) {
        facets.push_back({u, v});
        covered[u] = covered[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!covered[v]) facets.push_back({v});
    return SimplicialComplex::from_facets(n, std::move(facets));
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

Hypergraph Hypergraph::make(int n, std::vector<VertexSet> edges) {
    if (n <= 0) throw std::invalid_argument("Hypergraph: vertex count must be positive");
    std::size_t m = edges.empty() ? 0 : edges[0].size();
    for (VertexSet& e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.empty()) throw std::invalid_argument("Hypergraph: empty edge");
        if (e.size() != m) throw std::invalid_argument("Hypergraph: edges of unequal cardinality");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("Hypergraph: vertex index out of range");
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i] == edges[j]) throw std::invalid_argument("Hypergraph: duplicate edge");
    return Hypergraph{n, std::move(edges)};
}

std::string FVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i];
    os << ")";
    return os.str();
}

namespace {

void k_subsets_of(const VertexSet& base, int k, std::set<VertexSet>& out) {
    const int sz = static_cast<int>(base.size());
    if (k < 0 || k > sz) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s(k);
        for (int i = 0; i < k; ++i) s[i] = base[idx[i]];
        out.insert(std::move(s));
        int i = k - 1;
        while (i >= 0 && idx[i] == sz - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (k == 0) out.insert(VertexSet{});
}

}  // namespace

std::vector<VertexSet> faces(const SimplicialComplex& delta, int i) {
    if (i == -1) return {VertexSet{}};
    if (i < -1 || i > delta.dim()) return {};
    std::set<VertexSet> acc;
    for (const VertexSet& f : delta.facets()) k_subsets_of(f, i + 1, acc);
    return {acc.begin(), acc.end()};
}

FVector f_vector(const SimplicialComplex& delta) {
    FVector fv;
    fv.counts.resize(delta.dim() + 2, 0);
    fv.counts[0] = 1;
    for (int i = 0; i <= delta.dim(); ++i)
        fv.counts[i + 1] = static_cast<long long>(faces(delta, i).size());
    return fv;
}

SimplicialComplex skeleton(const SimplicialComplex& delta, int i) {
    if (i < 0 || i > delta.dim()) throw std::invalid_argument("skeleton: dimension out of range");
    std::vector<VertexSet> facets;
    for (const VertexSet& f : delta.facets())
        if (static_cast<int>(f.size()) <= i) facets.push_back(f);
    for (const VertexSet& s : faces(delta, i)) facets.push_back(s);
    return SimplicialComplex::from_facets(delta.vertex_count(), std::move(facets));
}

SimplicialComplex pure_part(const SimplicialComplex& delta, int i) {
    if (i < 0 || i > delta.dim()) throw std::invalid_argument("pure_part: dimension out of range");
    return SimplicialComplex::from_facets(delta.vertex_count(), faces(delta, i));
}

Hypergraph incidence_hypergraph(const SimplicialComplex& delta, int i, int j) {
    if (i < -1 || i >= j || j > delta.dim())
        throw std::invalid_argument("incidence_hypergraph: need -1 <= i < j <= dim");
    const std::vector<VertexSet> ifaces = faces(delta, i);
    const std::vector<VertexSet> jfaces = faces(delta, j);
    std::vector<VertexSet> edges;
    std::set<VertexSet> seen;
    for (const VertexSet& sigma : jfaces) {
        std::set<VertexSet> subs;
        k_subsets_of(sigma, i + 1, subs);
        VertexSet edge;
        for (const VertexSet& tau : subs) {
            const auto it = std::lower_bound(ifaces.begin(), ifaces.end(), tau);
            edge.push_back(static_cast<int>(it - ifaces.begin()));
        }
        std::sort(edge.begin(), edge.end());
        if (seen.insert(edge).second) edges.push_back(std::move(edge));
    }
    return Hypergraph::make(static_cast<int>(ifaces.size()), std::move(edges));
}

IntMatrix incidence_matrix(const Hypergraph& h) {
    IntMatrix m(h.edges.size(), h.n);
    for (std::size_t r = 0; r < h.edges.size(); ++r)
        for (int v : h.edges[r]) m.at(r, v) = 1;
    return m;
}

Graph facet_intersection_graph(const SimplicialComplex& delta) {
    const auto& fs = delta.facets();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (!intersect_sets(fs[i], fs[j]).empty())
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::make(static_cast<int>(fs.size()), std::move(edges));
}

bool is_leaf_of(const SimplicialComplex& delta, const std::vector<int>& subset, int f) {
    const auto& fs = delta.facets();
    if (subset.size() == 1) return subset[0] == f;
    for (int g : subset) {
        if (g == f) continue;
        const VertexSet fg = intersect_sets(fs[f], fs[g]);
        bool ok = true;
        for (int h : subset) {
            if (h == f || h == g) continue;
            if (!subset_of(intersect_sets(fs[f], fs[h]), fg)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

namespace {

// Good leaf: the intersections with the other members form a chain.
bool is_good_leaf_of(const std::vector<VertexSet>& fs, const std::vector<int>& subset, int f) {
    std::vector<VertexSet> inters;
    for (int g : subset)
        if (g != f) inters.push_back(intersect_sets(fs[f], fs[g]));
    std::sort(inters.begin(), inters.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (std::size_t i = 0; i + 1 < inters.size(); ++i)
        if (!subset_of(inters[i], inters[i + 1])) return false;
    return true;
}

bool subset_has_leaf(const SimplicialComplex& delta, const std::vector<int>& subset) {
    for (int f : subset)
        if (is_leaf_of(delta, subset, f)) return true;
    return false;
}

}  // namespace

bool is_forest_by_definition(const SimplicialComplex& delta) {
    const int s = static_cast<int>(delta.facets().size());
    if (s > 20) throw std::invalid_argument("is_forest_by_definition: too many facets");
    for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < s; ++i)
            if (mask & (1u << i)) subset.push_back(i);
        if (!subset_has_leaf(delta, subset)) return false;
    }
    return true;
}

ForestCheck is_simplicial_forest(const SimplicialComplex& delta, bool debug_cross_check) {
    const auto& fs = delta.facets();
    const int s = static_cast<int>(fs.size());
    ForestCheck out;
    std::vector<int> remaining(s);
    for (int i = 0; i < s; ++i) remaining[i] = i;

    // Good-leaf elimination. Plain leaf orders do not characterize forests;
    // good leaves do (a forest always has one, and removing it keeps the
    // forest property for every subcollection).
    while (!remaining.empty()) {
        int leaf = -1;
        for (int f : remaining)
            if (remaining.size() == 1 || is_good_leaf_of(fs, remaining, f)) {
                leaf = f;
                break;
            }
        if (leaf < 0) break;
        out.elimination_order.push_back(leaf);
        remaining.erase(std::find(remaining.begin(), remaining.end(), leaf));
    }
    out.is_forest = remaining.empty();
    if (!out.is_forest) {
        // Search the stuck collection for a subcollection with no leaf
        // (one exists: a collection without a good leaf is not a forest).
        out.leafless_subset = remaining;
        const int r = static_cast<int>(remaining.size());
        std::uint64_t nodes = 0;
        bool found = false;
        for (int k = 3; k <= r && !found && nodes < (1ull << 22); ++k) {
            std::vector<int> idx(k);
            for (int i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                std::vector<int> subset(k);
                for (int i = 0; i < k; ++i) subset[i] = remaining[idx[i]];
                ++nodes;
                if (!subset_has_leaf(delta, subset)) {
                    out.leafless_subset = subset;
                    found = true;
                    break;
                }
                int i = k - 1;
                while (i >= 0 && idx[i] == r - k + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                if (nodes >= (1ull << 22)) break;
            }
        }
        out.elimination_order.clear();
    }
    if (debug_cross_check && s <= 12) {
        if (is_forest_by_definition(delta) != out.is_forest)
            throw std::logic_error("is_simplicial_forest: cross-check against definition failed");
    }
    return out;
}

BergeCycleReport has_odd_berge_cycle(const Hypergraph& h, std::uint64_t budget) {
    BergeCycleReport rep;
    const int ne = static_cast<int>(h.edges.size());
    std::vector<std::vector<char>> in_edge(ne, std::vector<char>(h.n, 0));
    for (int e = 0; e < ne; ++e)
        for (int v : h.edges[e]) in_edge[e][v] = 1;

    std::vector<char> used_vertex(h.n, 0), used_edge(ne, 0);
    std::vector<int> path_vertices, path_edges;
    bool exhausted = false;

    // Depth-first over alternating vertex/edge sequences; x_1 is the
    // smallest vertex of the cycle, so extensions only use larger vertices.
    auto dfs = [&](auto&& self, int start, int current) -> bool {
        if (rep.nodes_visited++ >= budget) {
            exhausted = true;
            return false;
        }
        const int r = static_cast<int>(path_vertices.size());
        for (int e = 0; e < ne; ++e) {
            if (used_edge[e] || !in_edge[e][current]) continue;
            if (r >= 3 && r % 2 == 1 && in_edge[e][start]) {
                path_edges.push_back(e);
                return true;
            }
            used_edge[e] = 1;
            path_edges.push_back(e);
            for (int w : h.edges[e]) {
                if (w <= start || used_vertex[w]) continue;
                used_vertex[w] = 1;
                path_vertices.push_back(w);
                if (self(self, start, w)) return true;
                path_vertices.pop_back();
                used_vertex[w] = 0;
                if (exhausted) break;
            }
            path_edges.pop_back();
            used_edge[e] = 0;
            if (exhausted) break;
        }
        return false;
    };

    for (int s = 0; s < h.n && !exhausted; ++s) {
        used_vertex.assign(h.n, 0);
        used_edge.assign(ne, 0);
        path_vertices.assign(1, s);
        path_edges.clear();
        used_vertex[s] = 1;
        if (dfs(dfs, s, s)) {
            rep.status = BergeCycleReport::Status::found;
            rep.cycle_vertices = path_vertices;
            rep.cycle_edges = path_edges;
            return rep;
        }
    }
    rep.status = exhausted ? BergeCycleReport::Status::inconclusive : BergeCycleReport::Status::none;
    return rep;
}

Graph whisker(const Graph& g) {
    std::vector<std::pair<int, int>> edges = g.edges;
    for (int v = 0; v < g.n; ++v) edges.emplace_back(v, g.n + v);
    return Graph::make(2 * g.n, std::move(edges));
}

SimplicialComplex independence_complex(const Graph& g) {
    if (g.n < 1 || g.n > 63)
        throw std::invalid_argument("independence_complex: vertex count must be in 1..63");
    std::vector<std::uint64_t> cadj(g.n, 0);  // complement adjacency
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (u != v) cadj[u] |= 1ull << v;
    for (const auto& [u, v] : g.edges) {
        cadj[u] &= ~(1ull << v);
        cadj[v] &= ~(1ull << u);
    }

    std::vector<VertexSet> facets;
    // Bron-Kerbosch with pivoting on the complement graph.
    auto bk = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
        if (!p && !x) {
            VertexSet f;
            for (int v = 0; v < g.n; ++v)
                if (r & (1ull << v)) f.push_back(v);
            facets.push_back(std::move(f));
            return;
        }
        int pivot = -1, best = -1;
        for (std::uint64_t px = p | x; px; px &= px - 1) {
            const int u = std::countr_zero(px);
            const int deg = std::popcount(p & cadj[u]);
            if (deg > best) {
                best = deg;
                pivot = u;
            }
        }
        std::uint64_t cand = p & ~cadj[pivot];
        while (cand) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            const std::uint64_t bit = 1ull << v;
            self(self, r | bit, p & cadj[v], x & cadj[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    bk(bk, 0, g.n == 64 ? ~0ull : (1ull << g.n) - 1, 0);
    return SimplicialComplex::from_facets(g.n, std::move(facets));
}

std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& delta) {
    std::vector<VertexSet> out;
    const int n = delta.vertex_count();
    // DFS over sets all of whose proper subsets are faces; a non-face among
    // them is a minimal non-face and is not extended further.
    auto extend = [&](auto&& self, const VertexSet& sigma) -> void {
        const int lo = sigma.empty() ? 0 : sigma.back() + 1;
        for (int v = lo; v < n; ++v) {
            VertexSet next = sigma;
            next.push_back(v);
            bool boundary_ok = true;
            for (std::size_t drop = 0; drop + 1 < next.size() && boundary_ok; ++drop) {
                VertexSet sub;
                for (std::size_t i = 0; i < next.size(); ++i)
                    if (i != drop) sub.push_back(next[i]);
                boundary_ok = delta.is_face(sub);
            }
            if (!boundary_ok) continue;
            if (delta.is_face(next))
                self(self, next);
            else
                out.push_back(next);
        }
    };
    extend(extend, {});
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

bool is_flag(const SimplicialComplex& delta) {
    for (const VertexSet& nf : minimal_non_faces(delta))
        if (nf.size() > 2) return false;
    return true;
}

Graph one_skeleton(const SimplicialComplex& delta) {
    std::vector<std::pair<int, int>> edges;
    for (const VertexSet& e : faces(delta, 1)) edges.emplace_back(e[0], e[1]);
    return Graph::make(delta.vertex_count(), std::move(edges));
}

bool ComponentBipartiteness::all_nonbipartite() const {
    for (bool b : bipartite)
        if (b) return false;
    return !bipartite.empty();
}

ComponentBipartiteness one_skeleton_bipartiteness(const SimplicialComplex& delta) {
    ComponentBipartiteness out;
    const Graph g = one_skeleton(delta);
    const auto adj = g.adjacency();
    std::vector<char> active(g.n, 0);
    for (const VertexSet& v : faces(delta, 0)) active[v[0]] = 1;

    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (!active[s] || color[s] != -1) continue;
        std::vector<int> comp;
        bool bip = true;
        std::queue<int> q;
        color[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    bip = false;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
        out.bipartite.push_back(bip);
    }
    return out;
}

}  // namespace lefrees
