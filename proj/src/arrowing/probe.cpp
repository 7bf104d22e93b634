#include <algorithm>
#include <functional>
#include <unordered_set>

#include "ramsey/arrowing.hpp"
#include "ramsey/error.hpp"

namespace ramsey {

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.n();
    require(n <= 8, "canonical_code handles at most 8 vertices");
    std::vector<int> deg = g.degrees();
    std::vector<Vertex> byDeg(n);
    for (int i = 0; i < n; ++i) byDeg[i] = i;
    std::stable_sort(byDeg.begin(), byDeg.end(), [&](Vertex a, Vertex b) { return deg[a] < deg[b]; });

    // Class boundaries: new label positions [lo, hi) take vertices of one degree.
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && deg[byDeg[j]] == deg[byDeg[i]]) ++j;
        classes.emplace_back(i, j);
        i = j;
    }

    std::uint64_t best = ~std::uint64_t{0};
    std::vector<Vertex> label = byDeg;  // label[new position] = old vertex
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == classes.size()) {
            std::uint64_t code = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) code = (code << 1) | (g.has_edge(label[a], label[b]) ? 1u : 0u);
            best = std::min(best, code);
            return;
        }
        auto [lo, hi] = classes[k];
        std::sort(label.begin() + lo, label.begin() + hi);
        do {
            rec(k + 1);
        } while (std::next_permutation(label.begin() + lo, label.begin() + hi));
    };
    rec(0);
    return best | (static_cast<std::uint64_t>(n) << 56);
}

ProbeResult simplicity_probe_tiny(const Graph& h, int q, const ProbeOptions& options) {
    Graph hs = h.strip_isolated();
    require(hs.m() > 0, "H needs an edge");
    require(hs.n() <= 4, "tiny probe handles v(H) <= 4");
    require(q >= 1 && q <= 2, "tiny probe handles q <= 2");
    require(options.max_order >= 1 && options.max_order <= 7, "tiny probe handles hosts of order <= 7");

    ProbeResult r;
    r.target_degree = q * (hs.min_degree() - 1) + 1;
    for (int n = 1; n <= options.max_order; ++n) {
        std::vector<Edge> pairs;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        const int P = static_cast<int>(pairs.size());
        std::unordered_set<std::uint64_t> seen;
        for (int m = static_cast<int>(hs.m()); m <= P; ++m) {
            std::vector<int> pick(m);
            for (int i = 0; i < m; ++i) pick[i] = i;
            while (true) {
                Graph g(n);
                for (int i : pick) g.add_edge(pairs[i].first, pairs[i].second);
                // Minimal Ramsey graphs have minimum degree at least the target,
                // so only hosts attaining it exactly can witness simplicity.
                if (g.min_degree() == r.target_degree && seen.insert(canonical_code(g)).second) {
                    if (r.hosts_examined == options.graph_budget) return r;
                    ++r.hosts_examined;
                    ArrowResult a = arrows(g, hs, q, options.arrow);
                    if (a.budget_hit) throw BudgetExceeded("arrow search exceeded its budget inside the probe");
                    if (a.arrows && is_minimal_ramsey(g, hs, q, options.arrow, 1).minimal) {
                        r.found = true;
                        r.witness = g;
                        for (Vertex v = 0; v < n; ++v)
                            if (g.degree(v) == r.target_degree) {
                                r.low_vertex = v;
                                break;
                            }
                        return r;
                    }
                }
                int k = m - 1;
                while (k >= 0 && pick[k] == P - m + k) --k;
                if (k < 0) break;
                ++pick[k];
                for (int j = k + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    }
    r.exhausted = true;
    return r;
}

} // namespace ramsey
