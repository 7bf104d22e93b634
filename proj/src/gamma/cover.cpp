#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>

#include "ramsey/error.hpp"
#include "ramsey/gamma.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binom_sat(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        unsigned __int128 next = static_cast<unsigned __int128>(r) * static_cast<unsigned>(n - k + i) / i;
        if (next > UINT64_MAX) return UINT64_MAX;
        r = static_cast<std::uint64_t>(next);
    }
    return r;
}

bool next_subset(std::vector<Vertex>& c, int n) {
    int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

Graph checked_forest(const Graph& forest) {
    Graph f = forest.strip_isolated();
    require(f.is_forest(), "cover condition needs F to be a forest");
    return f;
}

bool holds_in(const Graph& gi, const Graph& stripped, const std::vector<Vertex>& U) {
    if (stripped.m() == 0) return true;
    VertexSet within(gi.n());
    for (Vertex v : U) within.insert(v);
    return contains_forest_copy(gi, stripped, &within).has_value();
}

} // namespace

std::vector<Vertex> unrank_subset(int n, int k, std::uint64_t rank) {
    require(0 <= k && k <= n, "subset size out of range");
    require(rank < binom_sat(n, k), "subset rank out of range");
    std::vector<Vertex> out;
    int c = 0;
    for (int pos = 0; pos < k; ++pos) {
        while (true) {
            std::uint64_t count = binom_sat(n - c - 1, k - pos - 1);
            if (rank < count) break;
            rank -= count;
            ++c;
        }
        out.push_back(c++);
    }
    return out;
}

bool cover_holds(const ColouredGraph& gamma, const Graph& forest, const std::vector<Vertex>& U, int colour) {
    require(1 <= colour && colour <= gamma.q(), "colour outside palette");
    return holds_in(gamma.colour_class(colour), checked_forest(forest), U);
}

GammaCheckReport check_cover_condition(const ColouredGraph& gamma, const Graph& forest, int delta,
                                       const CoverOptions& options) {
    const int n = gamma.n();
    require(delta >= 0 && delta <= n, "cover condition needs delta <= v(Gamma)");
    const Graph stripped = checked_forest(forest);

    GammaCheckReport r;
    DegreeCheck deg = check_degree_condition(gamma, delta);
    r.degree_ok = deg.ok;
    r.max_degree = deg.max_degree;
    r.mode = options.mode;

    std::uint64_t total = 0;
    if (options.mode == CoverMode::Exhaustive) {
        total = binom_sat(n, delta);
        if (static_cast<double>(total) > options.exhaustive_limit)
            throw InvalidArgument("exhaustive cover check refused: C(" + std::to_string(n) + ", " +
                                  std::to_string(delta) + ") subsets exceed the limit");
    } else {
        total = options.samples;
    }

    const std::vector<Graph> classes = gamma.colour_classes();
    auto subset_at = [&](std::uint64_t i) {
        if (options.mode == CoverMode::Exhaustive) return unrank_subset(n, delta, i);
        Rng rng(derive_seed(options.seed, i));
        return rng.subset(n, delta);
    };

    // Blocks run in parallel; every index below the smallest failure found so
    // far is always evaluated, so the reported witness is the lowest failing
    // index whatever the worker count.
    constexpr std::uint64_t kBlock = 256;
    const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
    std::atomic<std::uint64_t> first_fail{total};
    std::vector<int> fail_colour(static_cast<std::size_t>(blocks), 0);

    parallel_for(blocks, options.threads > 0 ? options.threads : default_threads(), [&](std::size_t b) {
        std::uint64_t begin = b * kBlock;
        std::uint64_t end = std::min(total, begin + kBlock);
        if (begin >= first_fail.load()) return;
        std::vector<Vertex> U = subset_at(begin);
        for (std::uint64_t i = begin; i < end; ++i) {
            if (i >= first_fail.load()) return;
            if (i > begin) {
                if (options.mode == CoverMode::Exhaustive)
                    next_subset(U, n);
                else
                    U = subset_at(i);
            }
            for (int c = 1; c <= gamma.q(); ++c) {
                if (holds_in(classes[c - 1], stripped, U)) continue;
                fail_colour[b] = c;
                std::uint64_t cur = first_fail.load();
                while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    });

    std::uint64_t worst = first_fail.load();
    if (worst < total) {
        std::size_t b = static_cast<std::size_t>(worst / kBlock);
        r.cover_ok = false;
        r.witness = CoverWitness{subset_at(worst), fail_colour[b]};
        r.samples_checked = worst + 1;
    } else {
        r.samples_checked = total;
    }
    return r;
}

} // namespace ramsey
