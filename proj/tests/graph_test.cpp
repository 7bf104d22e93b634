#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "ramsey/connectivity.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/error.hpp"
#include "ramsey/io.hpp"
#include "ramsey/random_graph.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

void check_well_formed(const Graph& g) {
    long long degree_sum = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
        CHECK_FALSE(g.has_edge(u, u));
        for (Vertex v = 0; v < g.n(); ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
        CHECK(g.degree(u) == oracle::naive_degree(g, u));
        degree_sum += g.degree(u);
    }
    CHECK(degree_sum == 2 * g.m());
}

Graph k4_minus_edge() {
    Graph g = Graph::complete(4);
    g.remove_edge(0, 1);
    return g;
}

} // namespace

TEST_CASE("sample_gnp: near-certain acceptance gives the complete graph") {
    Graph g = sample_gnp(4, 1.0 - 1e-15, 11);
    CHECK(g.m() == 6);
    CHECK(g == Graph::complete(4));
}

TEST_CASE("sample_gnp is deterministic and well formed") {
    Graph a = sample_gnp(100, 0.5, 42);
    Graph b = sample_gnp(100, 0.5, 42);
    CHECK(a == b);
    CHECK(a.edges() == b.edges());
    CHECK_FALSE(a == sample_gnp(100, 0.5, 43));
    check_well_formed(a);
}

TEST_CASE("sample_gnp consumes one draw per pair in row-major order") {
    Graph g = sample_gnp(30, 0.3, 2026);
    CHECK(to_graph6(g) == to_graph6(sample_gnp(30, 0.3, 2026)));
    Rng rng(2026);
    for (Vertex u = 0; u < 30; ++u)
        for (Vertex v = u + 1; v < 30; ++v) CHECK(g.has_edge(u, v) == rng.bernoulli(0.3));
}

TEST_CASE("sample_gnp mean edge count matches n^2 p / 2 within 2%") {
    const int n = 2000;
    const double p = 0.5;
    Seed seed{7};
    double total = 0;
    for (int k = 0; k < 50; ++k) total += static_cast<double>(sample_gnp(n, p, seed.stream(k)).m());
    double expected = n * (n - 1) / 2.0 * p;
    CHECK(std::abs(total / 50 - expected) <= 0.02 * expected);
}

TEST_CASE("sample_gnp rejects bad parameters") {
    CHECK_THROWS_AS(sample_gnp(0, 0.5, 1), InvalidArgument);
    CHECK_THROWS_AS(sample_gnp(5, 0.0, 1), InvalidArgument);
    CHECK_THROWS_AS(sample_gnp(5, 1.0, 1), InvalidArgument);
    CHECK_THROWS_AS(sample_gnp(5, -0.1, 1), InvalidArgument);
}

TEST_CASE("codegree") {
    CHECK(Graph::complete(3).codegree(0, 1) == 1);
    Graph c5 = Graph::cycle(5);
    for (auto [u, v] : c5.edges()) CHECK(c5.codegree(u, v) == 0);
    Graph k5 = Graph::complete(5);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) {
            int common = 0;
            for (Vertex w = 0; w < 5; ++w) common += (k5.has_edge(u, w) && k5.has_edge(v, w)) ? 1 : 0;
            CHECK(k5.codegree(u, v) == common);
            CHECK(common == 3);
        }
    CHECK_THROWS_AS(k5.codegree(0, 5), InvalidArgument);
    CHECK_THROWS_AS(k5.codegree(1, 1), InvalidArgument);
}

TEST_CASE("k_connected examples") {
    CHECK(k_connected(Graph::complete(4), 3).connected);
    CHECK_FALSE(k_connected(Graph::complete(3), 3).connected);
    auto c5 = k_connected(Graph::cycle(5), 3);
    CHECK_FALSE(c5.connected);
    CHECK(c5.cut.size() <= 2);
    Graph petersen = Graph::petersen();
    CHECK(oracle::k_connected_exhaustive(petersen, 3));
    CHECK(k_connected(petersen, 3).connected);
    CHECK_FALSE(k_connected(petersen, 4).connected);
    CHECK_THROWS_AS(k_connected(petersen, 0), InvalidArgument);
}

TEST_CASE("k_connected agrees with exhaustive cut enumeration (n <= 10, k <= 3)") {
    for (std::uint64_t trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(trial % 9);
        double p = 0.25 + 0.5 * static_cast<double>(trial % 7) / 6.0;
        Graph g = sample_gnp(n, p, derive_seed(99, trial));
        for (int k = 1; k <= 3; ++k) {
            auto result = k_connected(g, k);
            CHECK(result.connected == oracle::k_connected_exhaustive(g, k));
            if (!result.connected && g.n() > k) {
                CHECK(static_cast<int>(result.cut.size()) < k);
                std::vector<char> removed(g.n(), 0);
                for (Vertex v : result.cut) removed[v] = 1;
                CHECK_FALSE(oracle::connected_without(g, removed));
            }
        }
    }
}

TEST_CASE("contains_forest_copy examples") {
    CHECK(contains_forest_copy(Graph::complete(4), Graph::path(3)).has_value());
    CHECK_FALSE(contains_forest_copy(Graph::cycle(5), Graph::star(3)).has_value());
    CHECK_THROWS_AS(contains_forest_copy(Graph::complete(5), Graph::cycle(3)), InvalidArgument);
}

TEST_CASE("contains_forest_copy strips isolated vertices of the pattern") {
    Graph f(6);
    f.add_edge(0, 1);  // K_2 plus four isolated vertices
    auto emb = contains_forest_copy(Graph::path(2), f);
    REQUIRE(emb.has_value());
    CHECK((*emb)[2] == -1);
    CHECK(is_embedding(Graph::path(2), f, *emb));
}

TEST_CASE("contains_forest_copy agrees with injective-map enumeration on G(20,0.3)") {
    for (std::uint64_t trial = 0; trial < 4; ++trial) {
        Graph host = sample_gnp(20, 0.3, derive_seed(5, trial));
        Graph forest = random_forest(6, 0.8, derive_seed(6, trial));
        auto emb = contains_forest_copy(host, forest);
        CHECK(emb.has_value() == oracle::copy_exists(host, forest));
        if (emb) CHECK(is_embedding(host, forest, *emb));
    }
}

TEST_CASE("contains_forest_copy agrees with the oracle for v(G) <= 8, v(F) <= 5") {
    for (std::uint64_t trial = 0; trial < 600; ++trial) {
        int n = 3 + static_cast<int>(trial % 6);
        int k = 2 + static_cast<int>((trial / 6) % 4);
        Graph host = sample_gnp(n, 0.2 + 0.1 * static_cast<double>(trial % 5), derive_seed(17, trial));
        Graph forest = random_forest(k, 0.7, derive_seed(18, trial));
        auto emb = contains_forest_copy(host, forest);
        CHECK(emb.has_value() == oracle::copy_exists(host, forest));
        if (emb) CHECK(is_embedding(host, forest, *emb));
    }
}

TEST_CASE("find_embedding handles small general patterns and pinning") {
    Graph k6 = Graph::complete(6);
    CHECK(find_embedding(k6, Graph::complete(3)).has_value());
    CHECK_FALSE(find_embedding(Graph::complete_bipartite(3, 3), Graph::complete(3)).has_value());

    EmbedOptions pin;
    pin.pinned = {{0, 4}, {1, 2}};
    auto emb = find_embedding(k6, Graph::complete(3), pin);
    REQUIRE(emb.has_value());
    CHECK((*emb)[0] == 4);
    CHECK((*emb)[1] == 2);

    CHECK_THROWS_AS(find_embedding(Graph::complete(12), Graph::complete(11)), InvalidArgument);

    EmbedOptions tight;
    tight.node_limit = 3;
    CHECK_THROWS_AS(find_embedding(Graph::complete_bipartite(5, 5), Graph::complete(3), tight), BudgetExceeded);
}

TEST_CASE("every_edge_in_triangle") {
    CHECK(Graph::complete(4).every_edge_in_triangle());
    CHECK_FALSE(Graph::path(3).every_edge_in_triangle());
    Graph g = k4_minus_edge();
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (Vertex w = 0; w < 4; ++w) found = found || (g.has_edge(u, w) && g.has_edge(v, w));
        CHECK(found);
    }
    CHECK(g.every_edge_in_triangle());
}

TEST_CASE("forest_order: components by decreasing size, BFS from smallest vertex") {
    Graph f(7);
    f.add_edge(0, 1);
    f.add_edge(2, 3);
    f.add_edge(3, 4);
    f.add_edge(3, 5);
    CHECK(forest_order(f) == std::vector<Vertex>{2, 3, 4, 5, 0, 1, 6});
}

TEST_CASE("edge list and graph6 formats") {
    CHECK(to_graph6(Graph::complete(4)) == "C~");
    CHECK(to_graph6(Graph::petersen()) == "IheA@GUAo");
    CHECK(from_graph6("IheA@GUAo") == Graph::petersen());
    CHECK(from_graph6(">>graph6<<C~\n") == Graph::complete(4));

    std::istringstream in("4 3\n0 1\n1 2\n2 3\n");
    CHECK(read_graph(in) == Graph::path(4));
    std::istringstream g6("IheA@GUAo\n");
    CHECK(read_graph(g6) == Graph::petersen());

    std::istringstream bad1("3 1\n2 1\n");
    CHECK_THROWS_AS(read_edge_list(bad1), InvalidArgument);
    std::istringstream bad2("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad2), InvalidArgument);
    std::istringstream bad3("3 1\n0 1\n1 2\n");
    CHECK_THROWS_AS(read_edge_list(bad3), InvalidArgument);
    CHECK_THROWS_AS(from_graph6("C~~"), InvalidArgument);
}

TEST_CASE("round trips preserve graphs and colourings") {
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(trial * 7 % 90);
        Graph g = sample_gnp(n, 0.3, trial);
        check_well_formed(g);
        std::stringstream el;
        write_edge_list(el, g);
        CHECK(read_edge_list(el) == g);
        CHECK(from_graph6(to_graph6(g)) == g);
        ColouredGraph c = random_colouring(g, 3, trial);
        std::stringstream cs;
        write_coloured(cs, c);
        CHECK(read_coloured(cs) == c);
    }
}

TEST_CASE("coloured graph format validates colours") {
    std::istringstream bad("3 1 2\n0 1 3\n");
    CHECK_THROWS_AS(read_coloured(bad), InvalidArgument);
    std::istringstream ok("3 2 2\n0 1 1\n1 2 2\n");
    ColouredGraph c = read_coloured(ok);
    CHECK(c.is_total());
    CHECK(c.colour_class(1).m() == 1);
    CHECK(c.colour_class(2).has_edge(1, 2));
}

TEST_CASE("random_tree is a spanning tree") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        int n = 1 + static_cast<int>(s % 12);
        Graph t = random_tree(n, s);
        CHECK(t.m() == n - 1);
        CHECK(t.is_forest());
        CHECK(oracle::is_cycle_free(t));
        CHECK(t.components().size() == 1);
    }
}
