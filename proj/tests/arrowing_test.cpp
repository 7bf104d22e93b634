#include <doctest.h>

#include "oracles.hpp"
#include "ramsey/arrowing.hpp"
#include "ramsey/error.hpp"
#include "ramsey/gamma.hpp"
#include "ramsey/random_graph.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

Graph matching2() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
}

Graph diamond() {
    Graph g = Graph::complete(4);
    g.remove_edge(0, 1);
    return g;
}

Graph with_isolated(const Graph& g) {
    Graph out(g.n() + 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    return out;
}

// Γ plus a new vertex joined to all of it; the new vertex is last.
Graph cone(const Graph& gamma) {
    Graph g(gamma.n() + 1);
    for (auto [u, v] : gamma.edges()) g.add_edge(u, v);
    for (Vertex v = 0; v < gamma.n(); ++v) g.add_edge(v, gamma.n());
    return g;
}

std::vector<ColouredGraph> all_colourings(const Graph& g, int q) {
    std::vector<ColouredGraph> out;
    auto edges = g.edges();
    std::vector<int> colour(edges.size(), 1);
    while (true) {
        ColouredGraph c(g, q);
        for (std::size_t i = 0; i < edges.size(); ++i) c.set_colour(edges[i].first, edges[i].second, colour[i]);
        out.push_back(c);
        std::size_t i = 0;
        while (i < colour.size() && colour[i] == q) colour[i++] = 1;
        if (i == colour.size()) return out;
        ++colour[i];
    }
}

} // namespace

TEST_CASE("arrows: classical instances") {
    auto k6 = arrows(Graph::complete(6), Graph::complete(3), 2);
    CHECK(k6.arrows);
    CHECK_FALSE(k6.budget_hit);
    CHECK_FALSE(k6.witness.has_value());

    auto k5 = arrows(Graph::complete(5), Graph::complete(3), 2);
    CHECK_FALSE(k5.arrows);
    REQUIRE(k5.witness.has_value());
    CHECK_FALSE(oracle::has_monochromatic_copy(*k5.witness, Graph::complete(3)));
    // The only triangle-free 2-colouring of K_5 is pentagon / pentagram.
    for (int c = 1; c <= 2; ++c) {
        Graph cls = k5.witness->colour_class(c);
        CHECK(cls.m() == 5);
        for (Vertex v = 0; v < 5; ++v) CHECK(cls.degree(v) == 2);
        CHECK(cls.components().size() == 1);
    }

    CHECK(arrows(Graph::star(3), Graph::path(3), 2).arrows);
    CHECK_FALSE(arrows(Graph::star(2), Graph::path(3), 2).arrows);
}

TEST_CASE("arrows agrees with exhaustive colouring enumeration") {
    const std::vector<Graph> patterns{Graph::complete(3), Graph::path(3), matching2(), Graph::path(4), Graph::star(3)};
    for (std::uint64_t t = 0; t < 150; ++t) {
        int n = 4 + static_cast<int>(t % 4);
        Graph g = sample_gnp(n, 0.55, derive_seed(51, t));
        if (g.m() > 12) continue;
        const Graph& h = patterns[t % patterns.size()];
        int q = (t % 7 == 0 && g.m() <= 8) ? 3 : 2;
        auto r = arrows(g, h, q);
        CHECK(r.arrows == oracle::arrows_exhaustive(g, h, q));
        if (!r.arrows) {
            REQUIRE(r.witness.has_value());
            CHECK(r.witness->is_total());
            CHECK_FALSE(oracle::has_monochromatic_copy(*r.witness, h));
        }
    }
}

TEST_CASE("arrows with one colour is subgraph containment") {
    for (std::uint64_t t = 0; t < 100; ++t) {
        Graph g = sample_gnp(6, 0.4, derive_seed(52, t));
        for (const Graph& h : {Graph::complete(3), Graph::path(4), Graph::cycle(4), matching2()})
            CHECK(arrows(g, h, 1).arrows == oracle::copy_exists(g, h));
    }
}

TEST_CASE("arrows is monotone under supergraphs") {
    for (std::uint64_t t = 0; t < 60; ++t) {
        Graph g = sample_gnp(6, 0.5, derive_seed(53, t));
        Graph bigger = g;
        Rng rng(derive_seed(54, t));
        for (int k = 0; k < 3; ++k) {
            auto pick = rng.subset(6, 2);
            if (!bigger.has_edge(pick[0], pick[1])) bigger.add_edge(pick[0], pick[1]);
        }
        if (arrows(g, Graph::complete(3), 2).arrows) CHECK(arrows(bigger, Graph::complete(3), 2).arrows);
        if (arrows(g, Graph::path(3), 2).arrows) CHECK(arrows(bigger, Graph::path(3), 2).arrows);
    }
}

TEST_CASE("relabelling the colours of a witness keeps it H-free") {
    auto r = arrows(Graph::complete(5), Graph::complete(3), 2);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(oracle::has_monochromatic_copy(r.witness->relabelled({2, 1}), Graph::complete(3)));
    auto r3 = arrows(Graph::complete(6), Graph::path(3), 3);
    if (r3.witness) {
        for (std::vector<int> perm : {std::vector<int>{2, 3, 1}, std::vector<int>{3, 1, 2}, std::vector<int>{1, 3, 2}})
            CHECK_FALSE(oracle::has_monochromatic_copy(r3.witness->relabelled(perm), Graph::path(3)));
    }
}

TEST_CASE("arrows: budgets are reported, never guessed") {
    ArrowOptions tight;
    tight.node_limit = 5;
    auto r = arrows(Graph::complete(6), Graph::complete(3), 2, tight);
    CHECK(r.budget_hit);
    CHECK_FALSE(r.witness.has_value());

    ArrowOptions small;
    small.max_edges = 10;
    CHECK(arrows(Graph::complete(6), Graph::complete(3), 2, small).budget_hit);

    CHECK_THROWS_AS(arrows(Graph::complete(4), Graph::complete(3), 0), InvalidArgument);
    CHECK_THROWS_AS(arrows(Graph::complete(4), Graph(1), 2), InvalidArgument);
}

TEST_CASE("is_minimal_ramsey") {
    auto k6 = is_minimal_ramsey(Graph::complete(6), Graph::complete(3), 2);
    CHECK(k6.is_ramsey);
    CHECK(k6.minimal);
    CHECK(k6.edge_verdicts.size() == 15);
    for (std::size_t i = 0; i < k6.edge_verdicts.size(); ++i) {
        const auto& d = k6.edge_verdicts[i];
        CHECK_FALSE(d.arrows);
        REQUIRE(d.witness.has_value());
        auto [u, v] = k6.edges[i];
        CHECK(d.witness->graph() == Graph::complete(6).without_edge(u, v));
        CHECK_FALSE(oracle::has_monochromatic_copy(*d.witness, Graph::complete(3)));
    }
    for (const auto& d : k6.vertex_verdicts) {
        REQUIRE(d.witness.has_value());
        CHECK(d.witness->n() == 5);
        CHECK_FALSE(oracle::has_monochromatic_copy(*d.witness, Graph::complete(3)));
    }

    auto star = is_minimal_ramsey(Graph::star(3), Graph::path(3), 2);
    CHECK(star.minimal);
    CHECK(Graph::star(3).min_degree() == 2 * (Graph::path(3).min_degree() - 1) + 1);

    auto k7 = is_minimal_ramsey(Graph::complete(7), Graph::complete(3), 2);
    CHECK(k7.is_ramsey);
    CHECK_FALSE(k7.minimal);

    auto padded = is_minimal_ramsey(with_isolated(Graph::complete(6)), Graph::complete(3), 2);
    CHECK(padded.is_ramsey);
    CHECK_FALSE(padded.minimal);
    CHECK(padded.vertex_verdicts.back().arrows);

    auto k5 = is_minimal_ramsey(Graph::complete(5), Graph::complete(3), 2);
    CHECK_FALSE(k5.is_ramsey);
    CHECK_FALSE(k5.minimal);
    for (const auto& d : k5.edge_verdicts) CHECK_FALSE(oracle::has_monochromatic_copy(*d.witness, Graph::complete(3)));
}

TEST_CASE("minimality agrees with deletion-by-deletion oracle") {
    for (std::uint64_t t = 0; t < 40; ++t) {
        Graph g = sample_gnp(5, 0.7, derive_seed(55, t));
        const Graph& h = t % 2 == 0 ? Graph::path(3) : matching2();
        auto rep = is_minimal_ramsey(g, h, 2);
        bool ramsey = oracle::arrows_exhaustive(g, h, 2);
        bool minimal = ramsey;
        for (auto [u, v] : oracle::pairs_of(g)) minimal = minimal && !oracle::arrows_exhaustive(g.without_edge(u, v), h, 2);
        for (Vertex v = 0; v < g.n(); ++v) minimal = minimal && !oracle::arrows_exhaustive(g.without_vertex(v), h, 2);
        CHECK(rep.is_ramsey == ramsey);
        CHECK(rep.minimal == minimal);
    }
}

TEST_CASE("necessity_gamma: K_3 with a degree-3 vertex always fails") {
    Graph g = Graph::complete(4);
    for (const ColouredGraph& c : all_colourings(Graph::complete(3), 2)) {
        if (oracle::has_monochromatic_copy(c, Graph::complete(3))) continue;
        auto rep = necessity_gamma(g, Graph::complete(3), 2, 0, c);
        CHECK_FALSE(rep.holds);
        CHECK(rep.violation_U.size() == 2);
        CHECK(rep.gamma.n() == 3);
    }
    auto searched = necessity_gamma(g, Graph::complete(3), 2, 3);
    CHECK_FALSE(searched.holds);
}

TEST_CASE("necessity_gamma: an edgeless F holds vacuously") {
    // P_3 with u an endpoint: F is a single vertex, and q(delta-1)+1 = 1.
    Graph star = Graph::star(3);
    auto rep = necessity_gamma(star, Graph::path(3), 2, 1);
    CHECK(rep.holds);
    CHECK(rep.delta == 1);
    CHECK(rep.F.n() == 1);
    CHECK(rep.subsets_checked == 1);
}

TEST_CASE("necessity_gamma: degree precondition") {
    CHECK_THROWS_AS(necessity_gamma(Graph::complete(6), Graph::complete(3), 2, 0), InvalidArgument);
    CHECK_THROWS_AS(necessity_gamma(Graph::complete(4), Graph::complete(3), 2, 0, std::nullopt, 0, {}, 0.5),
                    BudgetExceeded);
}

TEST_CASE("necessity_gamma agrees with check_cover_condition") {
    // H = K_4 minus an edge: delta = 2, F = K_2.
    for (int q : {2, 3}) {
        int N = q + 1;
        for (std::uint64_t t = 0; t < 40; ++t) {
            Graph base = sample_gnp(N, 0.8, derive_seed(56, t));
            ColouredGraph c = random_colouring(base, q, derive_seed(57, t));
            if (oracle::has_monochromatic_copy(c, diamond())) continue;
            Graph g = cone(base);
            auto rep = necessity_gamma(g, diamond(), q, N, c);
            auto cover = check_cover_condition(c, Graph::path(2), 2);
            CHECK(rep.holds == cover.cover_ok);
            if (!rep.holds) {
                CHECK_FALSE(cover_holds(c, Graph::path(2), rep.violation_U, rep.violation_colour));
            }
        }
    }
}

TEST_CASE("triangle_refuter on C_4 plus a degree-3 vertex") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    for (Vertex v : {0, 1, 2}) g.add_edge(4, v);
    for (const ColouredGraph& c : all_colourings(g.without_vertex(4), 2)) {
        auto r = triangle_refuter(g, 4, Graph::complete(3), c);
        CHECK(r.extended.is_total());
        CHECK_FALSE(oracle::has_monochromatic_copy(r.extended, Graph::complete(3)));
        CHECK(r.U.size() == 2);
        for (auto [a, b] : oracle::pairs_of(g))
            if (a != 4 && b != 4) CHECK(r.extended.colour(a, b) == c.colour(a, b));
    }
}

TEST_CASE("triangle_refuter: edgeless G - w and bad inputs") {
    Graph star = Graph::star(3);  // centre 0 has degree 3 = 2*2 - 1
    ColouredGraph none(Graph(3), 2);
    auto r = triangle_refuter(star, 0, Graph::complete(3), none);
    CHECK_FALSE(oracle::has_monochromatic_copy(r.extended, Graph::complete(3)));
    CHECK_THROWS_AS(triangle_refuter(star, 0, Graph::path(3), none), InvalidArgument);
    CHECK_THROWS_AS(triangle_refuter(Graph::complete(5), 0, Graph::complete(3), ColouredGraph(Graph::complete(4), 2)),
                    InvalidArgument);
}

TEST_CASE("triangle_refuter extensions stay H-free on random hosts") {
    int done = 0;
    for (std::uint64_t t = 0; t < 200 && done < 40; ++t) {
        Graph g = sample_gnp(7, 0.5, derive_seed(58, t));
        Vertex w = -1;
        for (Vertex v = 0; v < 7; ++v)
            if (g.degree(v) == 3) w = v;
        if (w < 0) continue;
        auto r = arrows(g.without_vertex(w), Graph::complete(3), 2);
        if (r.arrows) continue;
        auto ext = triangle_refuter(g, w, Graph::complete(3), *r.witness);
        CHECK_FALSE(oracle::has_monochromatic_copy(ext.extended, Graph::complete(3)));
        ++done;
    }
    CHECK(done >= 20);
}

TEST_CASE("canonical_code is invariant under relabelling") {
    for (std::uint64_t t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(t % 7);
        Graph g = sample_gnp(n, 0.5, derive_seed(59, t));
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        Rng rng(derive_seed(60, t));
        rng.shuffle(perm);
        Graph relabelled(n);
        for (auto [u, v] : g.edges()) relabelled.add_edge(perm[u], perm[v]);
        CHECK(canonical_code(g) == canonical_code(relabelled));
    }
    CHECK(canonical_code(Graph::path(4)) != canonical_code(Graph::star(3)));
}

TEST_CASE("simplicity_probe_tiny") {
    auto p3 = simplicity_probe_tiny(Graph::path(3), 2);
    REQUIRE(p3.found);
    CHECK(p3.target_degree == 1);
    CHECK(canonical_code(*p3.witness) == canonical_code(Graph::star(3)));
    CHECK(p3.witness->degree(p3.low_vertex) == 1);

    auto k3 = simplicity_probe_tiny(Graph::complete(3), 2);
    CHECK_FALSE(k3.found);
    CHECK(k3.exhausted);
    CHECK(k3.target_degree == 3);

    auto m2 = simplicity_probe_tiny(matching2(), 2);
    REQUIRE(m2.found);
    CHECK(m2.witness->degree(m2.low_vertex) == 1);
    CHECK(is_minimal_ramsey(*m2.witness, matching2(), 2).minimal);

    ProbeOptions stingy;
    stingy.graph_budget = 0;
    auto none = simplicity_probe_tiny(Graph::path(3), 2, stingy);
    CHECK_FALSE(none.found);
    CHECK_FALSE(none.exhausted);
}
