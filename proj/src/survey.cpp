#include "lefrees/survey.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <thread>

namespace lefrees {

namespace {

Graph tree_from_prufer(const std::vector<int>& code, int k) {
    std::vector<int> degree(k, 1);
    for (int v : code) ++degree[v];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < k; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<int> seq = code;
    for (int v : seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1) leaves.insert(v);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph::make(k, std::move(edges));
}

std::string rooted_canon(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> parts;
    for (int w : adj[v])
        if (w != parent) parts.push_back(rooted_canon(adj, w, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const std::string& p : parts) out += p;
    out += ")";
    return out;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
    const int k = tree.n;
    if (k == 1) return "()";
    const auto adj = tree.adjacency();
    // Strip leaves layer by layer; the last one or two vertices are centers.
    std::vector<int> degree(k);
    for (int v = 0; v < k; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    std::vector<char> removed(k, 0);
    int remaining = k;
    for (int v = 0; v < k; ++v)
        if (degree[v] <= 1) layer.push_back(v);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int w : adj[v])
                if (!removed[w] && --degree[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::string best;
    for (int c : layer) {
        const std::string canon = rooted_canon(adj, c, -1);
        if (best.empty() || canon < best) best = canon;
    }
    return best;
}

std::vector<Graph> enumerate_trees(int k) {
    if (k < 1) throw std::invalid_argument("enumerate_trees: need k >= 1");
    if (k == 1) return {Graph::make(1, {})};
    if (k == 2) return {Graph::make(2, {{0, 1}})};

    std::map<std::string, Graph> classes;
    const long long exhaustive_cap = 8;  // k^(k-2) stays manageable up to here
    if (k <= exhaustive_cap) {
        std::vector<int> code(k - 2, 0);
        while (true) {
            Graph t = tree_from_prufer(code, k);
            classes.emplace(tree_canonical_form(t), std::move(t));
            int i = k - 3;
            while (i >= 0 && code[i] == k - 1) code[i--] = 0;
            if (i < 0) break;
            ++code[i];
        }
    } else {
        // Best-effort sampling for large sizes: seeded random Prufer codes.
        std::mt19937_64 rng(0xC0FFEEULL + static_cast<std::uint64_t>(k));
        std::uniform_int_distribution<int> pick(0, k - 1);
        std::vector<int> code(k - 2);
        for (int trial = 0; trial < 400000; ++trial) {
            for (int& c : code) c = pick(rng);
            Graph t = tree_from_prufer(code, k);
            classes.emplace(tree_canonical_form(t), std::move(t));
        }
        // Always include the extreme shapes the sampler is unlikely to hit.
        std::vector<int> star(k - 2, 0);
        classes.emplace(tree_canonical_form(tree_from_prufer(star, k)),
                        tree_from_prufer(star, k));
        std::vector<int> path(k - 2);
        for (int i = 0; i < k - 2; ++i) path[i] = i + 1;
        classes.emplace(tree_canonical_form(tree_from_prufer(path, k)),
                        tree_from_prufer(path, k));
    }
    std::vector<Graph> out;
    for (auto& [canon, tree] : classes) out.push_back(std::move(tree));
    return out;
}

std::vector<Graph> enumerate_forests(int max_vertices) {
    if (max_vertices < 1) throw std::invalid_argument("enumerate_forests: need max_vertices >= 1");
    std::vector<std::vector<Graph>> trees_by_size(max_vertices + 1);
    for (int k = 1; k <= max_vertices; ++k) trees_by_size[k] = enumerate_trees(k);

    // Multisets of tree classes, components in nonincreasing (size, index)
    // order, with 2..max_vertices vertices in total.
    std::vector<Graph> forests;
    std::vector<std::pair<int, int>> chosen;  // (size, class index)
    auto emit_forest = [&]() {
        int n = 0;
        std::vector<std::pair<int, int>> edges;
        for (const auto& [size, idx] : chosen) {
            const Graph& t = trees_by_size[size][idx];
            for (const auto& [u, v] : t.edges) edges.emplace_back(n + u, n + v);
            n += size;
        }
        forests.push_back(Graph::make(n, std::move(edges)));
    };
    auto rec = [&](auto&& self, int budget, int max_size, int max_idx_at_max_size) -> void {
        if (!chosen.empty()) {
            int total = 0;
            for (const auto& [size, idx] : chosen) total += size;
            if (total >= 2) emit_forest();
        }
        for (int size = std::min(budget, max_size); size >= 1; --size) {
            const int idx_cap = size == max_size ? max_idx_at_max_size
                                                 : static_cast<int>(trees_by_size[size].size()) - 1;
            for (int idx = idx_cap; idx >= 0; --idx) {
                chosen.emplace_back(size, idx);
                self(self, budget - size, size, idx);
                chosen.pop_back();
            }
        }
    };
    rec(rec, max_vertices, max_vertices,
        static_cast<int>(trees_by_size[max_vertices].size()) - 1);

    // Deterministic order: by vertex count, then edge list.
    std::sort(forests.begin(), forests.end(), [](const Graph& a, const Graph& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.edges < b.edges;
    });
    return forests;
}

namespace {

ForestSurveyRow survey_one(const Graph& forest) {
    ForestSurveyRow row;
    row.forest = forest;
    const SimplicialComplex ind = independence_complex(forest);
    row.f = f_vector(ind);
    row.mu2 = defect_polynomial(ind, 2);
    row.q1_equal = true;
    const int d = ind.dim();
    for (int e = 3; e <= d + 1; ++e)
        if (row.mu2.coefficient(e) != row.f.f(e - 1)) row.q1_equal = false;
    // No stray terms outside t^3..t^{d+1} (none by construction).
    for (const auto& [e, c] : row.mu2.terms)
        if ((e < 3 || e > d + 1) && c != 0) row.q1_equal = false;
    row.q2_no_internal_zeros = row.mu2.no_internal_zeros();
    row.q2_unimodal = row.mu2.unimodal();
    return row;
}

}  // namespace

ForestSurveyReport survey_forests(int max_vertices, int threads) {
    ForestSurveyReport rep;
    rep.max_vertices = max_vertices;
    const std::vector<Graph> forests =
        max_vertices >= 2 ? enumerate_forests(max_vertices) : std::vector<Graph>{};
    rep.rows.resize(forests.size());

    threads = std::max(1, threads);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= forests.size()) break;
            rep.rows[i] = survey_one(forests[i]);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        if (!rep.rows[i].q1_equal) rep.q1_counterexamples.push_back(i);
        if (!rep.rows[i].q2_no_internal_zeros || !rep.rows[i].q2_unimodal)
            rep.q2_counterexamples.push_back(i);
    }
    return rep;
}

}  // namespace lefrees
