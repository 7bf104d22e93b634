#include <algorithm>
#include <cmath>
#include <deque>

#include "ramsey/error.hpp"
#include "ramsey/gamma.hpp"

namespace ramsey {

namespace {

struct Trees {
    Graph stripped;
    std::vector<Vertex> kept;              // stripped label -> original label
    std::vector<std::vector<Vertex>> comps;  // stripped labels, largest first, BFS order
    std::vector<Vertex> parent;            // BFS parent in stripped labels, -1 at roots
};

Trees split_forest(const Graph& forest) {
    Trees t;
    t.stripped = forest.strip_isolated(&t.kept);
    require(t.stripped.is_forest(), "forest embedding needs an acyclic pattern");
    std::vector<Vertex> order = forest_order(t.stripped);
    t.parent.assign(t.stripped.n(), -1);
    std::vector<char> placed(t.stripped.n(), 0);
    for (Vertex v : order) {
        Vertex par = -1;
        for (Vertex w : t.stripped.neighbours(v))
            if (placed[w]) par = w;
        if (par < 0) t.comps.emplace_back();
        t.parent[v] = par;
        t.comps.back().push_back(v);
        placed[v] = 1;
    }
    return t;
}

Embedding finish(const Graph& gi, const VertexSet& U, const Graph& forest, const Trees& t,
                 const std::vector<Vertex>& image) {
    Embedding out(forest.n(), -1);
    for (Vertex v = 0; v < t.stripped.n(); ++v) out[t.kept[v]] = image[v];
    bool inside = true;
    for (Vertex x : out)
        if (x >= 0 && !U.contains(x)) inside = false;
    if (!inside || !is_embedding(gi, forest, out))
        throw VerificationFailure("forest embedding failed re-validation");
    return out;
}

} // namespace

std::optional<Embedding> embed_forest_pigeonhole(const Graph& gi, const VertexSet& U, const Graph& forest) {
    require(U.universe() == gi.n(), "vertex set does not match the graph");
    Trees t = split_forest(forest);

    // Cliques of Γ_i[U], each as an ascending list of unused vertices.
    std::vector<std::vector<Vertex>> cliques;
    std::vector<char> seen(gi.n(), 0);
    for (Vertex v : U.to_vector()) {
        if (seen[v]) continue;
        std::vector<Vertex> comp{v};
        seen[v] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : gi.neighbours(comp[i]))
                if (U.contains(w) && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        for (Vertex a : comp)
            require(intersection_count(gi.row(a), U.bits()) == static_cast<int>(comp.size()) - 1,
                    "pigeonhole embedding needs the colour class to be a disjoint union of cliques");
        cliques.push_back(std::move(comp));
    }

    std::vector<Vertex> image(t.stripped.n(), -1);
    for (const auto& tree : t.comps) {
        std::size_t best = 0;
        for (std::size_t c = 1; c < cliques.size(); ++c)
            if (cliques[c].size() > cliques[best].size()) best = c;
        if (cliques.empty() || cliques[best].size() < tree.size()) return std::nullopt;
        auto& pool = cliques[best];
        for (std::size_t i = 0; i < tree.size(); ++i) image[tree[i]] = pool[i];
        pool.erase(pool.begin(), pool.begin() + static_cast<long>(tree.size()));
    }
    return finish(gi, U, forest, t, image);
}

std::optional<Embedding> embed_forest_peeling(const Graph& gi, const VertexSet& U, const Graph& forest,
                                              int threshold) {
    require(U.universe() == gi.n(), "vertex set does not match the graph");
    Trees t = split_forest(forest);
    const int n = gi.n();

    std::vector<int> deg(n, 0);
    long long twice_edges = 0;
    for (Vertex v : U.to_vector()) {
        deg[v] = intersection_count(gi.row(v), U.bits());
        twice_edges += deg[v];
    }
    if (threshold < 0) {
        int size = U.size();
        threshold = size == 0 ? 0 : static_cast<int>(std::ceil(static_cast<double>(twice_edges) / size / 2.0));
    }

    VertexSet core = U;
    std::deque<Vertex> low;
    for (Vertex v : U.to_vector())
        if (deg[v] < threshold) low.push_back(v);
    while (!low.empty()) {
        Vertex v = low.front();
        low.pop_front();
        if (!core.contains(v)) continue;
        core.erase(v);
        for (Vertex w : gi.neighbours(v))
            if (core.contains(w) && --deg[w] < threshold) low.push_back(w);
    }

    std::vector<char> used(n, 0);
    std::vector<Vertex> image(t.stripped.n(), -1);
    const std::vector<Vertex> roots = core.to_vector();
    for (const auto& tree : t.comps) {
        bool placed = false;
        for (Vertex r : roots) {
            if (used[r]) continue;
            std::vector<Vertex> taken{r};
            used[r] = 1;
            image[tree[0]] = r;
            bool ok = true;
            for (std::size_t i = 1; i < tree.size() && ok; ++i) {
                Vertex host = image[t.parent[tree[i]]];
                Vertex pick = -1;
                for (Vertex w : gi.neighbours(host))
                    if (core.contains(w) && !used[w]) {
                        pick = w;
                        break;
                    }
                if (pick < 0) {
                    ok = false;
                    break;
                }
                used[pick] = 1;
                taken.push_back(pick);
                image[tree[i]] = pick;
            }
            if (ok) {
                placed = true;
                break;
            }
            for (Vertex x : taken) used[x] = 0;
        }
        if (!placed) return std::nullopt;
    }
    return finish(gi, U, forest, t, image);
}

} // namespace ramsey
