#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/gnp_analysis.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// nullopt stands for "unbounded".
using Bound = std::optional<long long>;

struct BoundsReport {
    int delta = 0;
    int lambda_F = 0;
    int Delta_F = 0;
    long long e_F = 0;
    int n = 0;
    double eps = 0;
    double log_constant = 80;
    Bound lower_affine;  // largest q passing the affine feasibility checks (0 if none)
    long long lower_log = 0;
    Bound lower;
    Bound upper_maxdeg;
    Bound upper_edges;
    Bound upper;
    bool simple_all_q = false;  // e(F) = 0
};

/// Bounds on the simplicity threshold for a graph with this neighbourhood
/// profile on n vertices. Requires a unique minimum-degree vertex and
/// 0 < eps < 0.2.
BoundsReport qtilde_bounds(const NeighbourhoodProfile& profile, int n, double eps, double log_constant = 80);

/// Largest q in 1..q_max for which the affine construction is feasible, 0 if none.
int affine_lower_bound(int delta, int lambda, double eps);

struct CurveOptions {
    double boundary_margin = 0.0025;  // exponent distance treated as "p = Theta(boundary)"
    int k_max = 10;                   // constant-tree regimes beyond this are reported as the small-degree regime
};

struct CurveRow {
    double p = 0;
    std::string regime;  // "a", "b", "c", "d" or "unclassified"
    double k_or_f = 0;   // k for a/b, f = n^{-1/2}/p for c, 0 otherwise
    double lower = 0;
    double upper = 0;
    std::string flags;
};

/// Leading-order bounds (o(1) terms dropped) per p, classified by the
/// exponent x = -log p / log n.
std::vector<CurveRow> corollary_curves(double n, const std::vector<double>& p_grid, const CurveOptions& options = {});

/// "geometric:lo:hi:count" or "linear:lo:hi:count" or a comma list of values.
std::vector<double> parse_p_grid(const std::string& text);

/// CSV with header p,regime,k_or_f,lower,upper,flags.
std::string curves_csv(const std::vector<CurveRow>& rows);

struct KoganReport {
    std::vector<Vertex> U;
    int k = 0;
    double average_degree = 0;
    double bound = 0;           // (k+1)n/(d+k+1)
    long long target = 0;       // ceil(bound)
    bool exhaustive = false;    // U is a largest such set
    bool attained = false;      // |U| >= target
    int restarts = 0;
};

struct KoganOptions {
    int restarts = 64;
    std::uint64_t seed = 0;
    int threads = 0;
    int exhaustive_max_n = 20;
};

/// A set U with Δ(G[U]) <= k: exhaustive for small n, otherwise the best of
/// several randomised greedy passes.
KoganReport kogan_sparse_set(const Graph& g, int k, const KoganOptions& options = {});

} // namespace ramsey
