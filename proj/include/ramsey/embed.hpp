#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// pattern vertex -> host vertex, injective.
using Embedding = std::vector<Vertex>;

/// Largest non-forest pattern accepted by the exact matcher.
inline constexpr int kMaxGeneralPattern = 10;

struct EmbedOptions {
    /// Restrict images to this vertex set (nullptr = all host vertices).
    const VertexSet* within = nullptr;
    /// Pre-assigned pattern -> host pairs.
    std::vector<std::pair<Vertex, Vertex>> pinned;
    /// Backtracking node cap; 0 = unlimited. Exceeding it throws BudgetExceeded.
    std::uint64_t node_limit = 0;
};

struct EmbedStats {
    std::uint64_t nodes = 0;
};

/// Search order used for a forest pattern: components by decreasing size
/// (ties by smallest vertex), each in BFS order from its smallest vertex.
std::vector<Vertex> forest_order(const Graph& forest);

/// Exact backtracking search for a (not necessarily induced) copy of
/// `pattern` in `host`. Non-forest patterns are limited to
/// kMaxGeneralPattern vertices.
std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern, const EmbedOptions& options = {},
                                        EmbedStats* stats = nullptr);

/// Copy of forest F in G after stripping F's isolated vertices; the
/// returned map covers only the non-isolated vertices, indexed by their
/// original labels (isolated vertices map to -1). Throws on cyclic F.
std::optional<Embedding> contains_forest_copy(const Graph& host, const Graph& forest,
                                              const VertexSet* within = nullptr);

/// Injective, in range, and every pattern edge lands on a host edge.
/// Pattern vertices mapped to -1 must be isolated.
bool is_embedding(const Graph& host, const Graph& pattern, const Embedding& map);

} // namespace ramsey
