#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/coloured_graph.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct ArrowOptions {
    int max_edges = 40;            // refuse larger hosts outright
    std::uint64_t node_limit = 0;  // 0 = unlimited
    double time_limit_ms = 0;      // 0 = unlimited
};

struct ArrowResult {
    bool arrows = false;  // meaningless when budget_hit
    bool budget_hit = false;
    std::optional<ColouredGraph> witness;  // H-free colouring when !arrows
    std::uint64_t nodes = 0;
    double millis = 0;
};

/// Exact decision of G -> (H)_q by backtracking over edge colourings.
/// Isolated vertices of H are ignored. Never guesses: a search that runs out
/// of budget comes back with budget_hit set.
ArrowResult arrows(const Graph& g, const Graph& h, int q, const ArrowOptions& options = {});

/// Some colour class of c contains a copy of H (isolated vertices of H ignored).
bool has_monochromatic_copy(const ColouredGraph& c, const Graph& h);

struct DeletionVerdict {
    int index = 0;  // edge position in g.edges(), or the vertex
    bool arrows = false;
    std::optional<ColouredGraph> witness;
};

struct MinimalityReport {
    bool is_ramsey = false;
    bool minimal = false;
    std::vector<Edge> edges;
    std::vector<DeletionVerdict> edge_verdicts;
    std::vector<DeletionVerdict> vertex_verdicts;
    std::uint64_t nodes = 0;
};

/// Minimal means G arrows H and no proper subgraph does: every G - e and
/// every G - v fails to arrow. Throws BudgetExceeded if any search does.
MinimalityReport is_minimal_ramsey(const Graph& g, const Graph& h, int q, const ArrowOptions& options = {},
                                   int threads = 0);

/// Copy of a colouring of G - w lifted back to G's labels (w's edges uncoloured).
ColouredGraph lift_colouring(const Graph& g, Vertex w, const ColouredGraph& without_w);

struct NecessityReport {
    Vertex w = 0;
    Vertex u = 0;
    int delta = 0;
    Graph F;
    std::vector<Vertex> gamma_vertices;  // G labels of Γ's vertices, i.e. N(w)
    ColouredGraph gamma;
    std::uint64_t subsets_checked = 0;
    bool holds = true;
    std::vector<Vertex> violation_U;  // G labels
    int violation_colour = 0;
};

/// Γ = G[N(w)] under an H-free colouring of G - w (searched for when not
/// supplied), then checks that every delta(H)-subset U of N(w) and every
/// colour i admit a colour-i copy of F = H[N(u)] inside Γ[U].
/// u < 0 picks the lowest-index minimum-degree vertex of H.
NecessityReport necessity_gamma(const Graph& g, const Graph& h, int q, Vertex w,
                                const std::optional<ColouredGraph>& colouring = std::nullopt, Vertex u = -1,
                                const ArrowOptions& options = {}, double subset_limit = 1e7);

struct RefuterResult {
    Vertex v = 0;
    int shared_colour = 0;  // colour of the v-W edges
    std::vector<Vertex> U;
    ColouredGraph extended;
};

/// Extends an H-free 2-colouring of G - w to all of G without creating a
/// monochromatic H, when every edge of H lies in a triangle and
/// d_G(w) = 2 delta(H) - 1.
RefuterResult triangle_refuter(const Graph& g, Vertex w, const Graph& h, const ColouredGraph& without_w);

struct ProbeOptions {
    int max_order = 6;
    std::uint64_t graph_budget = 200000;  // arrow searches allowed
    ArrowOptions arrow;
};

struct ProbeResult {
    bool found = false;
    bool exhausted = false;  // every host up to max_order was examined
    std::optional<Graph> witness;
    Vertex low_vertex = -1;  // a vertex of degree q(delta(H)-1)+1 in the witness
    int target_degree = 0;
    std::uint64_t hosts_examined = 0;
};

/// Searches hosts by non-decreasing order then size, one per isomorphism
/// class, for a minimal q-Ramsey graph of H whose minimum degree is
/// q(delta(H)-1)+1.
ProbeResult simplicity_probe_tiny(const Graph& h, int q, const ProbeOptions& options = {});

/// Canonical form of a small graph (n <= 8): lexicographically least
/// upper-triangle bit string over degree-respecting relabellings.
std::uint64_t canonical_code(const Graph& g);

} // namespace ramsey
