#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// A graph together with an edge colouring over the palette 1..q.
/// Colour 0 marks "no edge" or "not yet coloured"; a finished colouring
/// has is_total() == true.
class ColouredGraph {
public:
    ColouredGraph() = default;
    ColouredGraph(Graph graph, int q);

    const Graph& graph() const { return graph_; }
    int q() const { return q_; }
    int n() const { return graph_.n(); }

    int colour(Vertex u, Vertex v) const { return colour_[index(u, v)]; }
    void set_colour(Vertex u, Vertex v, int c);

    bool is_total() const;

    /// Γ_i: the spanning subgraph of colour-i edges.
    Graph colour_class(int i) const;
    std::vector<Graph> colour_classes() const;

    /// max_i Δ(Γ_i).
    int max_class_degree() const;

    /// Restriction to an induced vertex subset (vertex j of the result is vertices[j]).
    ColouredGraph induced(const std::vector<Vertex>& vertices) const;

    /// Colours permuted by perm (perm[c-1] is the new colour of c).
    ColouredGraph relabelled(const std::vector<int>& perm) const;

    friend bool operator==(const ColouredGraph& a, const ColouredGraph& b) {
        return a.q_ == b.q_ && a.graph_ == b.graph_ && a.colour_ == b.colour_;
    }

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(graph_.n()) + static_cast<std::size_t>(v);
    }

    Graph graph_;
    int q_ = 1;
    std::vector<std::uint16_t> colour_;
};

} // namespace ramsey
