#include <algorithm>
#include <cmath>
#include <limits>

#include "ramsey/error.hpp"
#include "ramsey/gnp_analysis.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

double chernoff_tail(double mu, double eps, Tail side) {
    require(mu > 0, "chernoff bound needs mu > 0");
    require(eps > 0 && eps < 1, "chernoff bound needs 0 < eps < 1");
    return std::exp(-mu * eps * eps / (side == Tail::Upper ? 3.0 : 2.0));
}

double chernoff_large(double mu, double t) {
    require(mu > 0, "chernoff bound needs mu > 0");
    require(t >= 7 * mu, "large-deviation bound needs t >= 7 mu");
    return std::exp(-t);
}

namespace {

long long edges_within(const Graph& h, const std::vector<Vertex>& s) {
    VertexSet set(h.n());
    for (Vertex v : s) set.insert(v);
    long long twice = 0;
    for (Vertex v : s) twice += intersection_count(h.row(v), set.bits());
    return twice / 2;
}

} // namespace

DenseSubsetReport dense_subset_edge_check(const Graph& h, double p, int samples, std::uint64_t seed,
                                          int size_override) {
    require(p > 0 && p < 1, "dense subset check needs 0 < p < 1");
    require(h.n() >= 2, "dense subset check needs at least 2 vertices");
    const int n = h.n();
    DenseSubsetReport r;
    double threshold = std::ceil(20 * std::log(static_cast<double>(n)) / p);
    r.capped = threshold > n;
    r.threshold_size = r.capped ? n : std::max(2, static_cast<int>(threshold));
    r.min_ratio = std::numeric_limits<double>::infinity();

    auto consider = [&](const std::vector<Vertex>& s) {
        ++r.subsets_checked;
        double size = static_cast<double>(s.size());
        double ratio = static_cast<double>(edges_within(h, s)) / (size * size * p);
        if (ratio < r.min_ratio) {
            r.min_ratio = ratio;
            r.worst_subset = s;
        }
    };

    int target = r.threshold_size;
    if (size_override > 0) {
        require(size_override >= 2 && size_override <= n, "subset size must lie in [2, n]");
        target = size_override;
    }
    if (n <= 20) {
        r.exhaustive = true;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) < target) continue;
            std::vector<Vertex> s;
            for (Vertex v = 0; v < n; ++v)
                if ((mask >> v) & 1u) s.push_back(v);
            consider(s);
        }
    } else if (target == n) {
        std::vector<Vertex> all(n);
        for (Vertex v = 0; v < n; ++v) all[v] = v;
        consider(all);
    } else {
        Rng rng(seed);
        for (int i = 0; i < samples; ++i) consider(rng.subset(n, target));
    }
    if (r.subsets_checked == 0) r.min_ratio = 0;
    r.passed = r.subsets_checked > 0 && r.min_ratio >= 0.25;
    return r;
}

} // namespace ramsey
