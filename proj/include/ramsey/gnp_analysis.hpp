#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct NeighbourhoodProfile {
    Vertex u = 0;
    bool unique_min = true;
    int delta = 0;
    Graph F;
    std::vector<Vertex> neighbours;  // F's vertex i is H's vertex neighbours[i]
    int lambda_F = 0;
    int Delta_F = 0;
    long long e_F = 0;
    bool is_forest_F = true;
};

NeighbourhoodProfile neighbourhood_profile(const Graph& h);

struct WellBehavedOptions {
    double exact_cutset_limit = 1e6;  // enumerate all delta-subsets when C(n, delta) is at most this
    int random_cutsets = 2000;
    int greedy_starts = 64;
    std::uint64_t seed = 0;
};

struct WellBehavedReport {
    bool w1 = true;
    std::optional<std::pair<Vertex, Vertex>> w1_tie;

    bool w2 = true;
    std::optional<std::pair<Vertex, Vertex>> w2_pair;
    int w2_codegree = 0;

    bool w3 = true;
    std::vector<Vertex> w3_cut;

    bool w4 = true;
    bool w4_exact = true;
    std::uint64_t w4_cutsets_checked = 0;
    int w4_window_lo = 0;
    int w4_window_hi = 0;
    std::vector<Vertex> w4_cutset;
    std::vector<Vertex> w4_component;

    bool overall = true;
};

WellBehavedReport well_behaved(const Graph& h, const WellBehavedOptions& options = {});

// Components of H - removed whose size lies in [lo, hi]; returns the first such
// component (ordered by smallest vertex) or an empty vector.
std::vector<Vertex> component_in_window(const Graph& h, const VertexSet& removed, int lo, int hi);

// Predicates get the sampling parameters and a per-trial seed for any
// internal sampling of their own.
using GraphPredicate = std::function<bool(const Graph&, int n, double p, std::uint64_t seed)>;

const std::vector<std::string>& property_names();
GraphPredicate find_property(const std::string& name);

struct EstimateReport {
    std::string property;
    int n = 0;
    double p = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int successes = 0;
    double estimate = 0;
    double lo = 0;
    double hi = 0;
};

// Wilson score interval at 95%.
std::pair<double, double> wilson_interval(int successes, int trials);

// Trial k samples G(n, p) with derive_seed(seed, k).
EstimateReport monte_carlo(const std::string& property, int n, double p, int trials, std::uint64_t seed,
                           int threads = 0);

enum class Tail { Upper, Lower };

double chernoff_tail(double mu, double eps, Tail side);
double chernoff_large(double mu, double t);

struct DenseSubsetReport {
    int threshold_size = 0;  // ceil(20 log n / p), capped at n
    bool capped = false;
    bool exhaustive = false;
    std::uint64_t subsets_checked = 0;
    double min_ratio = 0;  // min e(S) / (|S|^2 p)
    std::vector<Vertex> worst_subset;
    bool passed = false;  // min_ratio >= 1/4
};

// Samples subsets of the threshold size (or size_override when > 0). For
// n <= 20 every subset of at least that size is checked instead.
DenseSubsetReport dense_subset_edge_check(const Graph& h, double p, int samples, std::uint64_t seed,
                                          int size_override = 0);

} // namespace ramsey
