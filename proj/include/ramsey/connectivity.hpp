#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct ConnectivityResult {
    bool connected = false;
    /// When !connected and v(G) > k: a vertex set of size < k whose removal disconnects G.
    std::vector<Vertex> cut;
};

/// Number of internally vertex-disjoint s-t paths for non-adjacent s, t,
/// capped at `cap`; fills `cut` with a minimum s-t separator when below cap.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap, std::vector<Vertex>* cut = nullptr);

/// k-vertex-connectivity: v(G) > k and no separator of size < k.
/// Uses unit-capacity max-flow from k fixed vertices to every non-neighbour.
ConnectivityResult k_connected(const Graph& g, int k);

} // namespace ramsey
