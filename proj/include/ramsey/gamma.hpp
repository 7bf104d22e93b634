#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey/coloured_graph.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

std::uint64_t largest_prime_leq(std::uint64_t m);
bool is_prime(std::uint64_t m);

/// Points of F_s^2 as (x, y) residue pairs.
using Point = std::pair<int, int>;

struct AffineGamma {
    int s = 0;
    int q = 0;
    std::vector<Point> points;
    ColouredGraph coloured;
};

/// Parallel class of the line through two distinct points: slopes 0..s-1,
/// then s for vertical lines.
int parallel_class(int s, Point a, Point b);

/// Line of class `cls` containing `a`, as an index in 0..s-1.
int line_index(int s, int cls, Point a);

/// The first N points of F_s^2 in row-major order (x outer), joined when
/// their line lies in one of the classes 0..q-1, coloured class + 1.
AffineGamma make_affine_gamma(int s, int q, int N);

struct AffineParameters {
    int s = 0;  // prime
    int N = 0;  // q(delta-1)+1
};

/// The feasibility inequalities of build_affine_gamma without building
/// anything. Throws Infeasible naming the inequality that fails.
AffineParameters affine_parameters(int delta, int q, int lambda, double eps);

/// s = largest prime <= (1-eps) delta / lambda, then N = q(delta-1)+1.
/// Throws Infeasible naming the first failed inequality.
AffineGamma build_affine_gamma(int delta, int q, int lambda, double eps);

ColouredGraph build_random_gamma(int delta, int q, std::uint64_t seed);
ColouredGraph build_empty_gamma(int delta, int q);

struct DegreeCheck {
    bool ok = true;
    int max_degree = 0;
};

DegreeCheck check_degree_condition(const ColouredGraph& gamma, int delta);

enum class CoverMode { Exhaustive, Sampled };

struct CoverOptions {
    CoverMode mode = CoverMode::Exhaustive;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    int threads = 0;
    double exhaustive_limit = 1e7;
};

struct CoverWitness {
    std::vector<Vertex> U;
    int colour = 0;
};

struct GammaCheckReport {
    bool degree_ok = true;
    int max_degree = 0;
    bool cover_ok = true;
    CoverMode mode = CoverMode::Exhaustive;
    std::uint64_t samples_checked = 0;
    std::optional<CoverWitness> witness;
};

/// Condition (i) for every delta-subset U (or k seeded ones) and every
/// colour: some copy of F inside Γ_i[U]. Condition (ii) is reported too.
GammaCheckReport check_cover_condition(const ColouredGraph& gamma, const Graph& forest, int delta,
                                       const CoverOptions& options = {});

/// Exact test for one (U, colour) pair.
bool cover_holds(const ColouredGraph& gamma, const Graph& forest, const std::vector<Vertex>& U, int colour);

/// k-th delta-subset of {0..n-1} in lexicographic order.
std::vector<Vertex> unrank_subset(int n, int k, std::uint64_t rank);

/// Γ_i[U] must be a disjoint union of cliques. Trees of F go largest first
/// into the clique with the most unused vertices of U.
std::optional<Embedding> embed_forest_pigeonhole(const Graph& gi, const VertexSet& U, const Graph& forest);

/// Strips Γ_i[U] down to its threshold-core, then embeds each tree
/// greedily by BFS. threshold < 0 means ceil(average degree of Γ_i[U] / 2).
std::optional<Embedding> embed_forest_peeling(const Graph& gi, const VertexSet& U, const Graph& forest,
                                              int threshold = -1);

void write_affine(std::ostream& out, const AffineGamma& gamma);
AffineGamma read_affine(std::istream& in);

} // namespace ramsey
