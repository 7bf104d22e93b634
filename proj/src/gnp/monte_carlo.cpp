#include <algorithm>
#include <cmath>
#include <map>

#include "ramsey/error.hpp"
#include "ramsey/gnp_analysis.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/random_graph.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

const std::map<std::string, GraphPredicate>& registry() {
    static const std::map<std::string, GraphPredicate> table = {
        {"is_forest", [](const Graph& h, int, double, std::uint64_t) { return h.is_forest(); }},
        {"every_edge_in_triangle", [](const Graph& h, int, double, std::uint64_t) { return h.every_edge_in_triangle(); }},
        {"e(F)=0", [](const Graph& h, int, double, std::uint64_t) { return neighbourhood_profile(h).e_F == 0; }},
        {"unique_min_degree", [](const Graph& h, int, double, std::uint64_t) { return neighbourhood_profile(h).unique_min; }},
        {"well_behaved",
         [](const Graph& h, int, double, std::uint64_t seed) {
             WellBehavedOptions opt;
             opt.seed = seed;
             return well_behaved(h, opt).overall;
         }},
        {"degree_concentration",
         [](const Graph& h, int n, double p, std::uint64_t) {
             double np = n * p;
             for (int d : h.degrees())
                 if (std::abs(d - np) > 0.2 * np) return false;
             return true;
         }},
        {"e(F)_window",
         [](const Graph& h, int n, double p, std::uint64_t) {
             double scale = static_cast<double>(n) * n * p * p * p;
             auto e = static_cast<double>(neighbourhood_profile(h).e_F);
             return scale / 16 <= e && e <= 4 * scale;
         }},
        {"lambda(F)<=log(n)/2",
         [](const Graph& h, int n, double, std::uint64_t) {
             return neighbourhood_profile(h).lambda_F <= 0.5 * std::log(static_cast<double>(n));
         }},
    };
    return table;
}

} // namespace

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

GraphPredicate find_property(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) {
        std::string known;
        for (const auto& k : property_names()) known += (known.empty() ? "" : ", ") + k;
        throw InvalidArgument("unknown property '" + name + "' (known: " + known + ")");
    }
    return it->second;
}

std::pair<double, double> wilson_interval(int successes, int trials) {
    require(trials >= 1 && 0 <= successes && successes <= trials, "bad binomial counts");
    constexpr double z = 1.959963984540054;
    const double t = trials;
    const double phat = successes / t;
    const double denom = 1 + z * z / t;
    const double centre = (phat + z * z / (2 * t)) / denom;
    const double half = z * std::sqrt(phat * (1 - phat) / t + z * z / (4 * t * t)) / denom;
    double lo = std::max(0.0, centre - half);
    double hi = std::min(1.0, centre + half);
    // Rounding can leave the endpoints a hair inside the point estimate at 0 or 1.
    if (successes == 0) lo = 0;
    if (successes == trials) hi = 1;
    return {lo, hi};
}

EstimateReport monte_carlo(const std::string& property, int n, double p, int trials, std::uint64_t seed,
                           int threads) {
    require(trials >= 1, "monte carlo needs trials >= 1");
    GraphPredicate pred = find_property(property);
    // Validate parameters once on the calling thread.
    require(n >= 1, "G(n,p) needs n >= 1");
    require(p > 0.0 && p < 1.0, "G(n,p) needs 0 < p < 1");

    std::vector<char> hit(static_cast<std::size_t>(trials), 0);
    parallel_for(hit.size(), threads > 0 ? threads : default_threads(), [&](std::size_t k) {
        std::uint64_t stream = derive_seed(seed, k);
        Graph h = sample_gnp(n, p, stream);
        hit[k] = pred(h, n, p, derive_seed(stream, 1)) ? 1 : 0;
    });

    EstimateReport r;
    r.property = property;
    r.n = n;
    r.p = p;
    r.trials = trials;
    r.seed = seed;
    r.successes = static_cast<int>(std::count(hit.begin(), hit.end(), 1));
    r.estimate = static_cast<double>(r.successes) / trials;
    std::tie(r.lo, r.hi) = wilson_interval(r.successes, trials);
    return r;
}

} // namespace ramsey
