#include "ramsey/random_graph.hpp"

#include <queue>

#include "ramsey/error.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    require(n >= 1, "G(n,p) needs n >= 1");
    require(p > 0.0 && p < 1.0, "G(n,p) needs 0 < p < 1");
    Graph g(n);
    Rng rng(seed);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "tree needs at least one vertex");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    Rng rng(seed);
    std::vector<int> code(n - 2);
    for (int& c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    for (int c : code) {
        int leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, c);
        if (--degree[c] == 1) leaves.push(c);
    }
    int a = leaves.top();
    leaves.pop();
    g.add_edge(a, leaves.top());
    return g;
}

Graph random_forest(int n, double keep, std::uint64_t seed) {
    Graph tree = random_tree(n, seed);
    Graph g(n);
    Rng rng(derive_seed(seed, 1));
    for (auto [u, v] : tree.edges())
        if (rng.bernoulli(keep)) g.add_edge(u, v);
    return g;
}

ColouredGraph random_colouring(const Graph& g, int q, std::uint64_t seed) {
    ColouredGraph out(g, q);
    Rng rng(seed);
    for (auto [u, v] : g.edges()) out.set_colour(u, v, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(q))));
    return out;
}

} // namespace ramsey
