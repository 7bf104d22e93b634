#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ramsey {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Word = std::uint64_t;

/// Undirected simple graph on vertices 0..n-1 with one bit-set row per
/// vertex. Rows are stored contiguously; the edge count is cached.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    static Graph empty(int n) { return Graph(n); }
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph star(int leaves);
    static Graph complete_bipartite(int a, int b);
    static Graph petersen();

    int n() const { return n_; }
    long long m() const { return m_; }
    int words() const { return words_; }

    std::span<const Word> row(Vertex v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    bool has_edge(Vertex u, Vertex v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    int degree(Vertex v) const;
    int min_degree() const;
    int max_degree() const;
    std::vector<int> degrees() const;

    std::vector<Vertex> neighbours(Vertex v) const;
    std::vector<Edge> edges() const;

    /// |N(u) ∩ N(v)|; throws on out-of-range or equal vertices.
    int codegree(Vertex u, Vertex v) const;

    /// Induced subgraph; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;
    Graph without_vertex(Vertex v) const;
    Graph without_edge(Vertex u, Vertex v) const;

    /// Copy with isolated vertices removed; `kept` receives the original labels.
    Graph strip_isolated(std::vector<Vertex>* kept = nullptr) const;

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const;
    bool is_forest() const;
    bool every_edge_in_triangle() const;

    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    Word* mutable_row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<Word> bits_;
};

/// Popcount of the intersection of two equally sized rows.
int intersection_count(std::span<const Word> a, std::span<const Word> b);
bool intersects(std::span<const Word> a, std::span<const Word> b);

/// Calls fn(v) for every set bit of a row, ascending.
template <typename Fn>
void for_each_bit(std::span<const Word> row, Fn&& fn) {
    for (std::size_t w = 0; w < row.size(); ++w) {
        Word bits = row[w];
        while (bits != 0) {
            int b = __builtin_ctzll(bits);
            fn(static_cast<Vertex>(w * 64 + b));
            bits &= bits - 1;
        }
    }
}

/// Vertex set as a bit row sized for a graph with n vertices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), bits_((n + 63) / 64, 0) {}

    void insert(Vertex v) { bits_[v >> 6] |= Word{1} << (v & 63); }
    void erase(Vertex v) { bits_[v >> 6] &= ~(Word{1} << (v & 63)); }
    bool contains(Vertex v) const { return (bits_[v >> 6] >> (v & 63)) & 1u; }
    int size() const;
    int universe() const { return n_; }
    std::span<const Word> bits() const { return bits_; }
    std::vector<Vertex> to_vector() const;

private:
    int n_ = 0;
    std::vector<Word> bits_;
};

} // namespace ramsey
