#include <doctest.h>

#include <bit>
#include <cmath>

#include "oracles.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/error.hpp"
#include "ramsey/gamma.hpp"
#include "ramsey/random_graph.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

NeighbourhoodProfile fake_profile(int delta, int lambda, int Delta, long long e) {
    NeighbourhoodProfile p;
    p.delta = delta;
    p.lambda_F = lambda;
    p.Delta_F = Delta;
    p.e_F = e;
    return p;
}

// Largest k-sparse set by plain subset enumeration.
int max_sparse_set(const Graph& g, int k) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
        bool ok = true;
        for (int v = 0; v < g.n() && ok; ++v) {
            if (!(mask >> v & 1)) continue;
            int d = 0;
            for (int w = 0; w < g.n(); ++w) d += (mask >> w & 1) && g.has_edge(v, w);
            ok = d <= k;
        }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

int max_induced_degree(const Graph& g, const std::vector<Vertex>& U) {
    int worst = 0;
    for (Vertex v : U) {
        int d = 0;
        for (Vertex w : U) d += g.has_edge(v, w);
        worst = std::max(worst, d);
    }
    return worst;
}

} // namespace

TEST_CASE("qtilde_bounds arithmetic") {
    auto r = qtilde_bounds(fake_profile(25, 2, 1, 2), 10000, 0.04);
    CHECK(*r.upper_edges == 150);
    CHECK(*r.upper_maxdeg == 24);
    CHECK(*r.upper == 24);
    CHECK(*r.lower_affine == 5);
    CHECK(r.lower_log == 0);
    CHECK(*r.lower == 5);
    CHECK_FALSE(r.simple_all_q);

    auto empty = qtilde_bounds(fake_profile(25, 1, 0, 0), 10000, 0.04);
    CHECK(empty.simple_all_q);
    CHECK_FALSE(empty.upper.has_value());
    CHECK_FALSE(empty.upper_maxdeg.has_value());
    CHECK_FALSE(empty.upper_edges.has_value());
    CHECK_FALSE(empty.lower.has_value());

    auto logb = qtilde_bounds(fake_profile(2000, 2, 1, 3), 100, 0.04);
    CHECK(logb.lower_log == static_cast<long long>(std::floor(2000 / (80 * std::log(100.0)))));

    NeighbourhoodProfile tie = fake_profile(5, 2, 1, 1);
    tie.unique_min = false;
    CHECK_THROWS_AS(qtilde_bounds(tie, 100, 0.04), InvalidArgument);
    CHECK_THROWS_AS(qtilde_bounds(fake_profile(5, 2, 1, 1), 100, 0.3), InvalidArgument);
}

TEST_CASE("affine lower bound matches the feasibility inequalities") {
    auto largest_prime = [](int x) {
        for (int c = x; c >= 2; --c) {
            bool prime = true;
            for (int d = 2; d * d <= c && prime; ++d) prime = c % d != 0;
            if (prime) return c;
        }
        return 0;
    };
    for (int delta = 2; delta <= 400; delta += 3)
        for (int lambda = 1; lambda <= 5; ++lambda) {
            const double eps = 0.05;
            int s = largest_prime(static_cast<int>(std::floor((1 - eps) * delta / lambda + 1e-9)));
            int expect = 0;
            if (s >= 2 && static_cast<int>(std::floor((1 - eps) * delta / s + 1e-9)) >= lambda)
                for (int q = 1; q <= s && q * (delta - 1) + 1 <= s * s; ++q) expect = q;
            CHECK(affine_lower_bound(delta, lambda, eps) == expect);
        }
    for (int delta = 4; delta <= 30; delta += 2) {
        int q = affine_lower_bound(delta, 2, 0.05);
        if (q == 0) continue;
        CHECK_NOTHROW(build_affine_gamma(delta, q, 2, 0.05));
        CHECK_THROWS_AS(build_affine_gamma(delta, q + 1, 2, 0.05), Infeasible);
    }
}

TEST_CASE("upper_maxdeg floor agrees with floating point away from integers") {
    for (int d = 2; d <= 60; ++d)
        for (int D = 1; D < d; ++D) {
            double exact = (d + D - 1.0) / D - 1.0 / (d - 1);
            auto r = qtilde_bounds(fake_profile(d, D + 1, D, D), 1000, 0.05);
            if (std::abs(exact - std::round(exact)) > 1e-9) CHECK(*r.upper_maxdeg == static_cast<long long>(std::floor(exact)));
            else CHECK(*r.upper_maxdeg == std::llround(exact));
        }
}

TEST_CASE("lower <= upper on forest profiles") {
    for (std::uint64_t t = 0; t < 30; ++t) {
        Graph h = sample_gnp(600, std::pow(600.0, -0.6), derive_seed(80, t));
        auto prof = neighbourhood_profile(h);
        if (!prof.unique_min || prof.e_F == 0 || !prof.is_forest_F) continue;
        auto r = qtilde_bounds(prof, h.n(), 0.04);
        CHECK(*r.lower <= *r.upper);
    }
    for (int delta = 3; delta <= 200; delta += 3)
        for (int lambda = 2; lambda <= 6; ++lambda) {
            // A path on lambda vertices: Delta = min(2, lambda-1), e = lambda-1.
            auto r = qtilde_bounds(fake_profile(delta, lambda, std::min(2, lambda - 1), lambda - 1), 1000, 0.04);
            CHECK(*r.lower <= *r.upper);
        }
}

TEST_CASE("corollary_curves regimes") {
    const double n = 1e6;
    auto rows = corollary_curves(n, {std::pow(n, -0.55), std::pow(n, -0.45), std::pow(n, -0.62), std::pow(n, -0.7)});
    // (k+1)/(2k+1) < 0.55 < k/(2k-1) holds for k = 5.
    CHECK(rows[0].regime == "a");
    CHECK(rows[0].k_or_f == 5);
    CHECK(rows[0].lower == doctest::Approx(n * rows[0].p / 25));
    CHECK(rows[0].upper == doctest::Approx(n * rows[0].p / 4));
    CHECK(rows[1].regime == "d");
    CHECK(rows[1].upper == doctest::Approx(8 / rows[1].p));
    CHECK(rows[2].regime == "a");
    CHECK(rows[2].k_or_f == 2);
    CHECK(rows[3].regime == "unclassified");

    auto b = corollary_curves(n, {std::pow(n, -0.6)});
    CHECK(b[0].regime == "b");
    CHECK(b[0].k_or_f == 2);
    CHECK(b[0].lower == doctest::Approx(n * b[0].p / 9));
    CHECK(b[0].upper == doctest::Approx(n * b[0].p));

    auto c = corollary_curves(n, {std::pow(n, -0.51)});
    CHECK(c[0].regime == "c");
    CHECK(c[0].k_or_f == doctest::Approx(std::pow(n, 0.01)));

    CHECK_THROWS_AS(corollary_curves(n, {0.0}), InvalidArgument);
    CHECK_THROWS_AS(corollary_curves(n, {1.0}), InvalidArgument);
}

TEST_CASE("corollary_curves shape on a geometric grid") {
    auto grid = parse_p_grid("geometric:1e-4:1e-1:50");
    REQUIRE(grid.size() == 50);
    CHECK(grid.front() == doctest::Approx(1e-4));
    CHECK(grid.back() == doctest::Approx(1e-1));
    auto rows = corollary_curves(1e6, grid);
    int a_pairs = 0, d_pairs = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto &prev = rows[i - 1], &cur = rows[i];
        if (cur.regime == "a") CHECK(cur.lower < cur.upper);
        if (prev.regime == "a" && cur.regime == "a" && prev.k_or_f == cur.k_or_f) {
            CHECK(cur.lower > prev.lower);
            CHECK(cur.upper > prev.upper);
            ++a_pairs;
        }
        if (prev.regime == "d" && cur.regime == "d") {
            CHECK(cur.upper < prev.upper);
            ++d_pairs;
        }
    }
    CHECK(a_pairs > 0);
    CHECK(d_pairs > 0);
    std::string csv = curves_csv(rows);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 51);
    CHECK(csv.rfind("p,regime,k_or_f,lower,upper,flags\n", 0) == 0);
}

TEST_CASE("parse_p_grid forms and errors") {
    CHECK(parse_p_grid("0.1,0.2,0.3").size() == 3);
    auto lin = parse_p_grid("linear:0.1:0.5:5");
    CHECK(lin[2] == doctest::Approx(0.3));
    CHECK_THROWS_AS(parse_p_grid("geometric:1e-4:1e-1"), InvalidArgument);
    CHECK_THROWS_AS(parse_p_grid("geometric:a:b:3"), InvalidArgument);
    CHECK_THROWS_AS(parse_p_grid("spiral:1:2:3"), InvalidArgument);
}

TEST_CASE("kogan examples") {
    auto c5 = kogan_sparse_set(Graph::cycle(5), 1);
    CHECK(c5.exhaustive);
    CHECK(c5.bound == doctest::Approx(2.5));
    CHECK(c5.target == 3);
    CHECK(c5.U.size() >= 3);
    CHECK(c5.attained);

    auto k4 = kogan_sparse_set(Graph::complete(4), 1);
    CHECK(k4.bound == doctest::Approx(1.6));
    CHECK(k4.U.size() == 2);
    CHECK(max_induced_degree(Graph::complete(4), k4.U) == 1);

    auto e = kogan_sparse_set(Graph(7), 0);
    CHECK(e.U.size() == 7);
    CHECK_THROWS_AS(kogan_sparse_set(Graph(3), -1), InvalidArgument);
}

TEST_CASE("kogan exhaustive mode is optimal and meets the bound") {
    for (std::uint64_t t = 0; t < 120; ++t) {
        int n = 3 + static_cast<int>(t % 10);
        Graph g = sample_gnp(n, 0.2 + 0.05 * (t % 12), derive_seed(81, t));
        int k = 1 + static_cast<int>(t % 2);
        auto r = kogan_sparse_set(g, k);
        CHECK(static_cast<int>(r.U.size()) == max_sparse_set(g, k));
        CHECK(max_induced_degree(g, r.U) <= k);
        CHECK(r.attained);
    }
}

TEST_CASE("kogan greedy mode is valid and thread independent") {
    Graph g = sample_gnp(300, 0.05, 82);
    KoganOptions opt;
    opt.seed = 5;
    opt.threads = 1;
    auto one = kogan_sparse_set(g, 2, opt);
    opt.threads = 4;
    auto four = kogan_sparse_set(g, 2, opt);
    CHECK(one.U == four.U);
    CHECK_FALSE(one.exhaustive);
    CHECK(max_induced_degree(g, one.U) <= 2);
    CHECK(one.U.size() > 0);
}
