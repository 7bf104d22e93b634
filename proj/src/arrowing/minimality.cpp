#include <algorithm>
#include <cmath>

#include "ramsey/arrowing.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/error.hpp"
#include "ramsey/gnp_analysis.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

// Colouring c of G restricted to the spanning subgraph `sub` (same vertex set).
ColouredGraph restrict_to(const ColouredGraph& c, const Graph& sub) {
    ColouredGraph out(sub, c.q());
    for (auto [u, v] : sub.edges()) out.set_colour(u, v, c.colour(u, v));
    return out;
}

std::vector<Vertex> all_but(int n, Vertex skip) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (v != skip) keep.push_back(v);
    return keep;
}

void require_budget(const ArrowResult& r) {
    if (r.budget_hit) throw BudgetExceeded("arrow search exceeded its budget after " + std::to_string(r.nodes) + " nodes");
}

} // namespace

MinimalityReport is_minimal_ramsey(const Graph& g, const Graph& h, int q, const ArrowOptions& options, int threads) {
    MinimalityReport rep;
    ArrowResult whole = arrows(g, h, q, options);
    require_budget(whole);
    rep.is_ramsey = whole.arrows;
    rep.nodes = whole.nodes;
    rep.edges = g.edges();
    rep.edge_verdicts.resize(rep.edges.size());

    if (!rep.is_ramsey) {
        // Subgraphs of a non-Ramsey graph inherit its H-free colouring.
        for (std::size_t i = 0; i < rep.edges.size(); ++i) {
            auto [u, v] = rep.edges[i];
            rep.edge_verdicts[i] = {static_cast<int>(i), false, restrict_to(*whole.witness, g.without_edge(u, v))};
        }
        for (Vertex v = 0; v < g.n(); ++v) rep.vertex_verdicts.push_back({v, false, whole.witness->induced(all_but(g.n(), v))});
        return rep;
    }

    std::vector<ArrowResult> sub(rep.edges.size());
    parallel_for(rep.edges.size(), threads > 0 ? threads : default_threads(), [&](std::size_t i) {
        sub[i] = arrows(g.without_edge(rep.edges[i].first, rep.edges[i].second), h, q, options);
    });
    bool minimal = true;
    for (std::size_t i = 0; i < sub.size(); ++i) {
        require_budget(sub[i]);
        rep.nodes += sub[i].nodes;
        rep.edge_verdicts[i] = {static_cast<int>(i), sub[i].arrows, sub[i].witness};
        minimal = minimal && !sub[i].arrows;
    }

    // G - v sits inside G - e for any edge e at v, so its verdict follows by
    // restriction. An isolated vertex can be dropped without changing
    // anything, which already breaks minimality.
    for (Vertex v = 0; v < g.n(); ++v) {
        DeletionVerdict d{v, true, std::nullopt};
        for (std::size_t i = 0; i < rep.edges.size(); ++i) {
            auto [a, b] = rep.edges[i];
            if (a != v && b != v) continue;
            d.arrows = sub[i].arrows;
            if (!d.arrows) d.witness = sub[i].witness->induced(all_but(g.n(), v));
            break;
        }
        minimal = minimal && !d.arrows;
        rep.vertex_verdicts.push_back(std::move(d));
    }
    rep.minimal = minimal;
    return rep;
}

ColouredGraph lift_colouring(const Graph& g, Vertex w, const ColouredGraph& without_w) {
    g.check_vertex(w);
    require(without_w.n() == g.n() - 1, "colouring of G - w has the wrong order");
    ColouredGraph out(g, without_w.q());
    auto down = [w](Vertex x) { return x < w ? x : x - 1; };
    for (auto [u, v] : g.edges()) {
        if (u == w || v == w) continue;
        require(without_w.graph().has_edge(down(u), down(v)), "colouring of G - w misses an edge of G");
        out.set_colour(u, v, without_w.colour(down(u), down(v)));
    }
    require(without_w.graph().m() == g.m() - g.degree(w), "colouring of G - w has extra edges");
    return out;
}

NecessityReport necessity_gamma(const Graph& g, const Graph& h, int q, Vertex w,
                                const std::optional<ColouredGraph>& colouring, Vertex u,
                                const ArrowOptions& options, double subset_limit) {
    require(q >= 1, "need q >= 1");
    g.check_vertex(w);
    Graph hs = h.strip_isolated();
    require(hs.n() >= 2, "H needs an edge");
    NecessityReport rep;
    rep.w = w;
    rep.delta = hs.min_degree();
    if (u < 0) {
        u = neighbourhood_profile(hs).u;
    } else {
        require(0 <= u && u < h.n(), "u out of range");
        std::vector<Vertex> kept;
        h.strip_isolated(&kept);
        auto it = std::find(kept.begin(), kept.end(), u);
        require(it != kept.end(), "u is isolated in H");
        u = static_cast<Vertex>(it - kept.begin());
        require(hs.degree(u) == rep.delta, "u must have minimum degree in H");
    }
    rep.u = u;
    rep.F = hs.induced(hs.neighbours(u));

    const int need = q * (rep.delta - 1) + 1;
    if (g.degree(w) != need)
        throw InvalidArgument("degree precondition: d(w) = " + std::to_string(g.degree(w)) +
                              " but q(delta(H)-1)+1 = " + std::to_string(need));

    ColouredGraph c;
    if (colouring) {
        c = *colouring;
    } else {
        ArrowResult r = arrows(g.without_vertex(w), h, q, options);
        require_budget(r);
        if (r.arrows) throw Infeasible("G - w already arrows H, so no H-free colouring of G - w exists");
        c = *r.witness;
    }
    require(c.q() == q, "colouring uses a different palette");
    if (has_monochromatic_copy(c, hs)) throw InvalidArgument("supplied colouring of G - w is not H-free");
    ColouredGraph lifted = lift_colouring(g, w, c);

    rep.gamma_vertices = g.neighbours(w);
    rep.gamma = lifted.induced(rep.gamma_vertices);

    const int d = static_cast<int>(rep.gamma_vertices.size());
    double count = std::exp(std::lgamma(d + 1.0) - std::lgamma(rep.delta + 1.0) - std::lgamma(d - rep.delta + 1.0));
    if (count > subset_limit) throw BudgetExceeded("too many delta-subsets of N(w) to enumerate");

    Graph pattern = rep.F.strip_isolated();
    std::vector<Graph> classes = rep.gamma.colour_classes();
    std::vector<Vertex> U(rep.delta);
    for (int i = 0; i < rep.delta; ++i) U[i] = i;
    while (true) {
        ++rep.subsets_checked;
        if (pattern.m() > 0) {
            VertexSet within(d);
            for (Vertex x : U) within.insert(x);
            EmbedOptions opt;
            opt.within = &within;
            for (int i = 1; i <= q; ++i) {
                if (find_embedding(classes[i - 1], pattern, opt)) continue;
                rep.holds = false;
                for (Vertex x : U) rep.violation_U.push_back(rep.gamma_vertices[x]);
                rep.violation_colour = i;
                return rep;
            }
        }
        int k = rep.delta - 1;
        while (k >= 0 && U[k] == d - rep.delta + k) --k;
        if (k < 0) break;
        ++U[k];
        for (int j = k + 1; j < rep.delta; ++j) U[j] = U[j - 1] + 1;
    }
    return rep;
}

RefuterResult triangle_refuter(const Graph& g, Vertex w, const Graph& h, const ColouredGraph& without_w) {
    g.check_vertex(w);
    Graph hs = h.strip_isolated();
    require(hs.m() > 0 && hs.every_edge_in_triangle(), "triangle refuter needs every edge of H in a triangle");
    require(without_w.q() == 2, "triangle refuter works with 2 colours");
    const int delta = hs.min_degree();
    require(g.degree(w) == 2 * delta - 1, "triangle refuter needs d(w) = 2 delta(H) - 1");
    if (has_monochromatic_copy(without_w, hs)) throw InvalidArgument("colouring of G - w is not H-free");
    ColouredGraph base = lift_colouring(g, w, without_w);
    std::vector<Vertex> nw = g.neighbours(w);

    for (Vertex v : nw)
        for (int k = 1; k <= 2; ++k) {
            std::vector<Vertex> W;
            for (Vertex x : nw) {
                if (x == v) continue;
                if (!g.has_edge(v, x) || base.colour(v, x) == k) W.push_back(x);
                if (static_cast<int>(W.size()) == delta - 1) break;
            }
            if (static_cast<int>(W.size()) < delta - 1) continue;
            RefuterResult out;
            out.v = v;
            out.shared_colour = k;
            out.U = W;
            out.U.push_back(v);
            std::sort(out.U.begin(), out.U.end());
            out.extended = base;
            for (Vertex x : nw) {
                bool in_u = std::binary_search(out.U.begin(), out.U.end(), x);
                out.extended.set_colour(w, x, in_u ? 3 - k : k);
            }
            if (has_monochromatic_copy(out.extended, hs))
                throw VerificationFailure("triangle refuter extension contains a monochromatic copy of H");
            return out;
        }
    throw Infeasible("no vertex v in N(w) with delta(H)-1 neighbours of w sharing one colour towards v");
}

} // namespace ramsey
