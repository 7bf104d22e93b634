#include "ramsey/coloured_graph.hpp"

#include <algorithm>
#include <string>

#include "ramsey/error.hpp"

namespace ramsey {

ColouredGraph::ColouredGraph(Graph graph, int q) : graph_(std::move(graph)), q_(q) {
    require(q >= 1, "colour count must be at least 1");
    require(q <= 65535, "colour count too large");
    colour_.assign(static_cast<std::size_t>(graph_.n()) * graph_.n(), 0);
}

void ColouredGraph::set_colour(Vertex u, Vertex v, int c) {
    graph_.check_vertex(u);
    graph_.check_vertex(v);
    require(graph_.has_edge(u, v), "cannot colour a non-edge");
    require(c >= 0 && c <= q_, "colour " + std::to_string(c) + " outside palette 1.." + std::to_string(q_));
    colour_[index(u, v)] = static_cast<std::uint16_t>(c);
    colour_[index(v, u)] = static_cast<std::uint16_t>(c);
}

bool ColouredGraph::is_total() const {
    for (auto [u, v] : graph_.edges())
        if (colour(u, v) == 0) return false;
    return true;
}

Graph ColouredGraph::colour_class(int i) const {
    Graph g(graph_.n());
    for (auto [u, v] : graph_.edges())
        if (colour(u, v) == i) g.add_edge(u, v);
    return g;
}

std::vector<Graph> ColouredGraph::colour_classes() const {
    std::vector<Graph> out(q_, Graph(graph_.n()));
    for (auto [u, v] : graph_.edges()) {
        int c = colour(u, v);
        if (c >= 1) out[c - 1].add_edge(u, v);
    }
    return out;
}

int ColouredGraph::max_class_degree() const {
    int best = 0;
    for (const Graph& g : colour_classes()) best = std::max(best, g.max_degree());
    return best;
}

ColouredGraph ColouredGraph::induced(const std::vector<Vertex>& vertices) const {
    ColouredGraph out(graph_.induced(vertices), q_);
    for (auto [i, j] : out.graph_.edges()) out.set_colour(i, j, colour(vertices[i], vertices[j]));
    return out;
}

ColouredGraph ColouredGraph::relabelled(const std::vector<int>& perm) const {
    require(static_cast<int>(perm.size()) == q_, "permutation size must equal q");
    ColouredGraph out(graph_, q_);
    for (auto [u, v] : graph_.edges()) {
        int c = colour(u, v);
        out.set_colour(u, v, c == 0 ? 0 : perm[c - 1]);
    }
    return out;
}

} // namespace ramsey
