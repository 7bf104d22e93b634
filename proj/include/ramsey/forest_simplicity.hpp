#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ramsey/coloured_graph.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct Bipartition {
    std::vector<Vertex> A;  // sorted
    std::vector<Vertex> B;  // sorted
};

/// Proper 2-colouring of a forest with |A| as small as possible. Each
/// component contributes its smaller side; on equal sides the side holding
/// the component's smallest vertex goes to A, which makes A the
/// lexicographically least optimum. Rejects cycles and isolated vertices.
Bipartition min_bipartition(const Graph& forest);

/// Host graph on X ∪ Y ∪ Z: complete bipartite X-Y plus, for each y, a star
/// to its own block Z_y of b*q leaves.
///   x_i     = i                     (0 <= i < r)
///   y_j     = r + j                 (0 <= j < s)
///   z_{j,k} = r + s + j*b*q + k     (0 <= k < b*q)
/// Edges are indexed the same way: x_i y_j is i*s + j, y_j z_{j,k} is
/// r*s + j*b*q + k. Colourings of G are vectors over that index.
struct SzzGraph {
    Graph F;
    int q = 2;
    int a = 0, b = 0;
    std::vector<Vertex> A, B, B1, B2;
    int r = 0, s = 0, t = 0;
    Graph G;

    int n() const { return r + s + t; }
    std::int64_t m() const { return static_cast<std::int64_t>(r) * s + t; }
    Vertex x(int i) const { return i; }
    Vertex y(int j) const { return r + j; }
    Vertex z(int j, int k) const { return r + s + j * b * q + k; }
    std::int64_t xy_edge(int i, int j) const { return static_cast<std::int64_t>(i) * s + j; }
    std::int64_t pendant_edge(int j, int k) const { return static_cast<std::int64_t>(r) * s + j * b * q + k; }
    /// Index of edge uv, or -1 if uv is not an edge.
    std::int64_t edge_index(Vertex u, Vertex v) const;
};

using SzzColouring = std::vector<int>;

struct SzzOptions {
    std::int64_t max_edges = 200000;  // guard on r*s + t
};

SzzGraph construct_szz(const Graph& forest, int q, const SzzOptions& options = {});

/// Colouring of G - Z (vertices X ∪ Y, same labels as in G): X is cut into
/// q consecutive blocks of a-1 vertices and block i sends colour i to Y.
/// Re-verified to contain no monochromatic F.
ColouredGraph colour_G_minus_Z(const SzzGraph& szz);

struct MonoForest {
    Embedding map;              // F vertex -> G vertex
    int colour = 0;             // colour of every image edge
    int case_number = 0;        // 1 or 2
    int pendant_colour = 0;     // the colour treated as "colour 1" of the argument
    std::vector<Vertex> Y_prime;          // the s/q vertices sharing the pendant colour
    std::vector<int> profile;             // shared colour profile
    std::vector<Vertex> profile_vertices; // v(F) vertices of Y' with that profile
    std::vector<Vertex> X_block;          // X vertices used (a in case 1, a-1 in case 2)
};

/// Extracts a monochromatic copy of F from any q-colouring of G by running
/// the pigeonhole argument step by step. The result is re-validated; a
/// failure throws VerificationFailure.
MonoForest find_mono_forest(const SzzGraph& szz, const SzzColouring& phi);

/// Every image edge exists in G and carries `colour`, and the map is injective.
bool is_mono_copy(const SzzGraph& szz, const SzzColouring& phi, const Embedding& map, int colour);

SzzColouring random_szz_colouring(const SzzGraph& szz, std::uint64_t seed);

/// X-Y colours with every profile using each colour exactly a-1 times (a
/// per-y cyclic shift), random pendant colours. Forces case 2 when a >= 2.
SzzColouring balanced_szz_colouring(const SzzGraph& szz, std::uint64_t seed);

ColouredGraph to_coloured(const SzzGraph& szz, const SzzColouring& phi);
SzzColouring from_coloured(const SzzGraph& szz, const ColouredGraph& c);

/// "szz a b r s t q" then the edge list of G.
void write_szz(std::ostream& out, const SzzGraph& szz);
/// Rebuilds from F and checks the stored header and edges against it.
SzzGraph read_szz(std::istream& in, const Graph& forest, const SzzOptions& options = {});

} // namespace ramsey
