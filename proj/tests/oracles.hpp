#pragma once

// Brute-force reference implementations used only by tests. They touch
// graphs through has_edge/n() alone and share no search code with the
// library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "ramsey/coloured_graph.hpp"
#include "ramsey/graph.hpp"

namespace oracle {

using ramsey::ColouredGraph;
using ramsey::Graph;

inline std::vector<std::pair<int, int>> pairs_of(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

inline int naive_degree(const Graph& g, int v) {
    int d = 0;
    for (int u = 0; u < g.n(); ++u) d += (u != v && g.has_edge(u, v)) ? 1 : 0;
    return d;
}

/// Enumerates every injective map of the non-isolated pattern vertices into
/// `allowed` host vertices and checks all pattern edges at the leaf.
inline bool copy_exists(const Graph& host, const Graph& pattern, const std::vector<int>& allowed) {
    std::vector<int> verts;
    for (int v = 0; v < pattern.n(); ++v)
        if (naive_degree(pattern, v) > 0) verts.push_back(v);
    auto edges = pairs_of(pattern);
    std::vector<int> image(pattern.n(), -1);
    std::vector<char> used(host.n(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == verts.size()) {
            for (auto [a, b] : edges)
                if (!host.has_edge(image[a], image[b])) return false;
            return true;
        }
        for (int x : allowed) {
            if (used[x]) continue;
            used[x] = 1;
            image[verts[i]] = x;
            bool ok = rec(i + 1);
            used[x] = 0;
            if (ok) return true;
        }
        return false;
    };
    return rec(0);
}

inline bool copy_exists(const Graph& host, const Graph& pattern) {
    std::vector<int> all(host.n());
    for (int i = 0; i < host.n(); ++i) all[i] = i;
    return copy_exists(host, pattern, all);
}

/// Same question as copy_exists, but each partial map is rejected as soon
/// as a placed pattern edge is missing; usable on hosts of a few hundred vertices.
inline bool copy_exists_pruned(const Graph& host, const Graph& pattern) {
    std::vector<int> verts;
    for (int v = 0; v < pattern.n(); ++v)
        if (naive_degree(pattern, v) > 0) verts.push_back(v);
    std::vector<int> hdeg(host.n());
    for (int x = 0; x < host.n(); ++x) hdeg[x] = naive_degree(host, x);
    std::vector<int> image(pattern.n(), -1);
    std::vector<char> used(host.n(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == verts.size()) return true;
        int p = verts[i];
        for (int x = 0; x < host.n(); ++x) {
            if (used[x] || hdeg[x] < naive_degree(pattern, p)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (pattern.has_edge(p, verts[j]) && !host.has_edge(x, image[verts[j]])) ok = false;
            if (!ok) continue;
            used[x] = 1;
            image[p] = x;
            bool found = rec(i + 1);
            used[x] = 0;
            if (found) return true;
        }
        return false;
    };
    return rec(0);
}

/// True if some colour class of `c` contains a copy of `pattern`.
inline bool has_monochromatic_copy(const ColouredGraph& c, const Graph& pattern) {
    for (int i = 1; i <= c.q(); ++i) {
        Graph cls(c.n());
        for (auto [u, v] : pairs_of(c.graph()))
            if (c.colour(u, v) == i) cls.add_edge(u, v);
        if (copy_exists(cls, pattern)) return true;
    }
    return false;
}

inline bool connected_without(const Graph& g, const std::vector<char>& removed) {
    int start = -1;
    int alive = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int u = 0; u < g.n(); ++u)
            if (!removed[u] && !seen[u] && g.has_edge(u, v)) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    return count == alive;
}

/// v(G) > k and no vertex subset of size < k disconnects G.
inline bool k_connected_exhaustive(const Graph& g, int k) {
    int n = g.n();
    if (n <= k) return false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) >= k) continue;
        std::vector<char> removed(n, 0);
        for (int v = 0; v < n; ++v) removed[v] = (mask >> v) & 1u;
        if (!connected_without(g, removed)) return false;
    }
    return true;
}

inline bool is_cycle_free(const Graph& g) {
    // Union-find over edges.
    std::vector<int> parent(g.n());
    for (int i = 0; i < g.n(); ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [u, v] : pairs_of(g)) {
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

/// Sizes of the connected components of G minus `removed`.
inline std::vector<int> component_sizes(const Graph& g, const std::vector<char>& removed) {
    std::vector<int> sizes;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (removed[s] || seen[s]) continue;
        int count = 0;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int u = 0; u < g.n(); ++u)
                if (!removed[u] && !seen[u] && g.has_edge(u, v)) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        sizes.push_back(count);
    }
    return sizes;
}

/// True if deleting some set of exactly `cut` vertices leaves a component
/// whose size lies in [lo, hi]. Bitmask enumeration, n <= 20.
inline bool cut_creates_component(const Graph& g, int cut, int lo, int hi) {
    int n = g.n();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != cut) continue;
        std::vector<char> removed(n, 0);
        for (int v = 0; v < n; ++v) removed[v] = (mask >> v) & 1u;
        for (int size : component_sizes(g, removed))
            if (lo <= size && size <= hi) return true;
    }
    return false;
}

inline int max_codegree(const Graph& g) {
    int best = 0;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            int c = 0;
            for (int w = 0; w < g.n(); ++w) c += (g.has_edge(a, w) && g.has_edge(b, w)) ? 1 : 0;
            best = std::max(best, c);
        }
    return best;
}

/// G -> (H)_q by enumerating all q^{e(G)} colourings.
inline bool arrows_exhaustive(const Graph& g, const Graph& h, int q) {
    auto edges = pairs_of(g);
    std::vector<int> colour(edges.size(), 1);
    while (true) {
        ColouredGraph c(g, q);
        for (std::size_t i = 0; i < edges.size(); ++i) c.set_colour(edges[i].first, edges[i].second, colour[i]);
        if (!has_monochromatic_copy(c, h)) return false;
        std::size_t i = 0;
        while (i < colour.size() && colour[i] == q) colour[i++] = 1;
        if (i == colour.size()) return true;
        ++colour[i];
    }
}

inline long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace oracle
