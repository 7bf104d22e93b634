#include "ramsey/graph.hpp"

#include <algorithm>
#include <string>

#include "ramsey/error.hpp"

namespace ramsey {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    require(n >= 0, "vertex count must be non-negative");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::star(int leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph Graph::petersen() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    require(u != v, "loops are not allowed");
    if (has_edge(u, v)) return;
    mutable_row(u)[v >> 6] |= Word{1} << (v & 63);
    mutable_row(v)[u >> 6] |= Word{1} << (u & 63);
    ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !has_edge(u, v)) return;
    mutable_row(u)[v >> 6] &= ~(Word{1} << (v & 63));
    mutable_row(v)[u >> 6] &= ~(Word{1} << (u & 63));
    --m_;
}

int Graph::degree(Vertex v) const {
    int d = 0;
    for (Word w : row(v)) d += __builtin_popcountll(w);
    return d;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for_each_bit(row(v), [&](Vertex u) { out.push_back(u); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for_each_bit(row(u), [&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

int Graph::codegree(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    require(u != v, "codegree needs two distinct vertices");
    return intersection_count(row(u), row(v));
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    Graph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (has_edge(vertices[i], vertices[j])) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return g;
}

Graph Graph::without_vertex(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> keep;
    keep.reserve(n_ - 1);
    for (Vertex u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced(keep);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

Graph Graph::strip_isolated(std::vector<Vertex>* kept) const {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n_; ++v)
        if (degree(v) > 0) keep.push_back(v);
    Graph g = induced(keep);
    if (kept) *kept = std::move(keep);
    return g;
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<int> seen(n_, 0);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for_each_bit(row(v), [&](Vertex u) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::is_forest() const {
    // A graph is a forest iff m = n - (number of components).
    return m_ == static_cast<long long>(n_) - static_cast<long long>(components().size());
}

bool Graph::every_edge_in_triangle() const {
    for (Vertex u = 0; u < n_; ++u) {
        bool ok = true;
        for_each_bit(row(u), [&](Vertex v) {
            if (ok && u < v && !intersects(row(u), row(v))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

int intersection_count(std::span<const Word> a, std::span<const Word> b) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += __builtin_popcountll(a[i] & b[i]);
    return c;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

int VertexSet::size() const {
    int c = 0;
    for (Word w : bits_) c += __builtin_popcountll(w);
    return c;
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    for_each_bit(std::span<const Word>(bits_), [&](Vertex v) { out.push_back(v); });
    return out;
}

} // namespace ramsey
