#include <algorithm>
#include <chrono>
#include <numeric>

#include "ramsey/arrowing.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/error.hpp"

namespace ramsey {

namespace {

struct OutOfBudget {};

class ArrowSearch {
public:
    ArrowSearch(const Graph& g, const Graph& h, int q, const ArrowOptions& options)
        : g_(g), h_(h), q_(q), options_(options), start_(std::chrono::steady_clock::now()) {
        order_ = g.edges();
        std::vector<int> deg = g.degrees();
        std::stable_sort(order_.begin(), order_.end(), [&](const Edge& a, const Edge& b) {
            return deg[a.first] + deg[a.second] > deg[b.first] + deg[b.second];
        });
        classes_.assign(q, Graph(g.n()));
        colour_.assign(order_.size(), 0);
        h_edges_ = h.edges();
    }

    // True if an H-free colouring exists; it is left in colour_.
    bool run() { return extend(0, 0); }

    ColouredGraph colouring() const {
        ColouredGraph out(g_, q_);
        for (std::size_t i = 0; i < order_.size(); ++i) out.set_colour(order_[i].first, order_[i].second, colour_[i]);
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool creates_copy(const Graph& cls, Vertex u, Vertex v) const {
        EmbedOptions opt;
        for (auto [a, b] : h_edges_) {
            opt.pinned = {{a, u}, {b, v}};
            if (find_embedding(cls, h_, opt)) return true;
            opt.pinned = {{a, v}, {b, u}};
            if (find_embedding(cls, h_, opt)) return true;
        }
        return false;
    }

    void tick() {
        ++nodes_;
        if (options_.node_limit != 0 && nodes_ > options_.node_limit) throw OutOfBudget{};
        if (options_.time_limit_ms > 0 && (nodes_ & 255) == 0) {
            std::chrono::duration<double, std::milli> spent = std::chrono::steady_clock::now() - start_;
            if (spent.count() > options_.time_limit_ms) throw OutOfBudget{};
        }
    }

    bool extend(std::size_t i, int used) {
        if (i == order_.size()) return true;
        auto [u, v] = order_[i];
        // Colours beyond used+1 are interchangeable with used+1.
        int limit = std::min(q_, used + 1);
        std::vector<int> cand(limit);
        std::iota(cand.begin(), cand.end(), 1);
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
            return classes_[a - 1].degree(u) + classes_[a - 1].degree(v) <
                   classes_[b - 1].degree(u) + classes_[b - 1].degree(v);
        });
        for (int c : cand) {
            tick();
            Graph& cls = classes_[c - 1];
            cls.add_edge(u, v);
            if (!creates_copy(cls, u, v)) {
                colour_[i] = c;
                if (extend(i + 1, std::max(used, c))) return true;
            }
            cls.remove_edge(u, v);
        }
        colour_[i] = 0;
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    int q_;
    ArrowOptions options_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Edge> order_;
    std::vector<Edge> h_edges_;
    std::vector<Graph> classes_;
    std::vector<int> colour_;
    std::uint64_t nodes_ = 0;
};

} // namespace

bool has_monochromatic_copy(const ColouredGraph& c, const Graph& h) {
    Graph pattern = h.strip_isolated();
    if (pattern.m() == 0) return true;
    for (const Graph& cls : c.colour_classes()) {
        bool found = pattern.is_forest() ? contains_forest_copy(cls, pattern).has_value()
                                         : find_embedding(cls, pattern).has_value();
        if (found) return true;
    }
    return false;
}

ArrowResult arrows(const Graph& g, const Graph& h, int q, const ArrowOptions& options) {
    require(q >= 1, "need q >= 1");
    require(h.n() >= 2, "need v(H) >= 2");
    auto start = std::chrono::steady_clock::now();
    ArrowResult r;
    Graph pattern = h.strip_isolated();
    if (pattern.m() == 0) {
        r.arrows = true;
        return r;
    }
    require(pattern.is_forest() || pattern.n() <= kMaxGeneralPattern,
            "non-forest H is limited to " + std::to_string(kMaxGeneralPattern) + " non-isolated vertices");
    if (options.max_edges > 0 && g.m() > options.max_edges) {
        r.budget_hit = true;
        return r;
    }
    ArrowSearch search(g, pattern, q, options);
    try {
        bool free_colouring = search.run();
        r.arrows = !free_colouring;
        if (free_colouring) {
            ColouredGraph w = search.colouring();
            if (has_monochromatic_copy(w, pattern))
                throw VerificationFailure("arrow search produced a colouring with a monochromatic copy");
            r.witness = std::move(w);
        }
    } catch (const OutOfBudget&) {
        r.budget_hit = true;
    }
    r.nodes = search.nodes();
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace ramsey
