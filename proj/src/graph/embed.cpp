#include "ramsey/embed.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ramsey/error.hpp"

namespace ramsey {

std::vector<Vertex> forest_order(const Graph& forest) {
    auto comps = forest.components();
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<Vertex> order;
    order.reserve(forest.n());
    std::vector<char> seen(forest.n(), 0);
    for (const auto& comp : comps) {
        std::deque<Vertex> queue{comp.front()};
        seen[comp.front()] = 1;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for_each_bit(forest.row(v), [&](Vertex u) {
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            });
        }
    }
    return order;
}

namespace {

std::vector<Vertex> connectivity_order(const Graph& pattern, const std::vector<std::pair<Vertex, Vertex>>& pinned) {
    int k = pattern.n();
    std::vector<Vertex> order;
    std::vector<char> placed(k, 0);
    std::vector<int> links(k, 0);
    auto place = [&](Vertex v) {
        placed[v] = 1;
        order.push_back(v);
        for_each_bit(pattern.row(v), [&](Vertex u) { ++links[u]; });
    };
    for (auto [p, h] : pinned) {
        (void)h;
        if (!placed[p]) place(p);
    }
    while (static_cast<int>(order.size()) < k) {
        Vertex best = -1;
        for (Vertex v = 0; v < k; ++v) {
            if (placed[v]) continue;
            if (best < 0 || links[v] > links[best] ||
                (links[v] == links[best] && pattern.degree(v) > pattern.degree(best)))
                best = v;
        }
        place(best);
    }
    return order;
}

class Matcher {
public:
    Matcher(const Graph& host, const Graph& pattern, const EmbedOptions& options)
        : host_(host), pattern_(pattern), options_(options), words_(host.words()) {
        int k = pattern.n();
        bool forest_like = options.pinned.empty() && pattern.is_forest();
        order_ = forest_like ? forest_order(pattern) : connectivity_order(pattern, options.pinned);

        std::vector<int> position(k, -1);
        for (int i = 0; i < k; ++i) position[order_[i]] = i;
        back_.resize(k);
        for (int i = 0; i < k; ++i)
            for_each_bit(pattern.row(order_[i]), [&](Vertex u) {
                if (position[u] < i) back_[i].push_back(u);
            });

        pin_.assign(k, -1);
        for (auto [p, h] : options.pinned) {
            pattern.check_vertex(p);
            host.check_vertex(h);
            pin_[p] = h;
        }

        allowed_.assign(words_, 0);
        if (options.within) {
            require(options.within->universe() == host.n(), "restriction set has wrong universe");
            auto bits = options.within->bits();
            std::copy(bits.begin(), bits.end(), allowed_.begin());
        } else {
            for (Vertex v = 0; v < host.n(); ++v) allowed_[v >> 6] |= Word{1} << (v & 63);
        }
        host_deg_.resize(host.n());
        for (Vertex v = 0; v < host.n(); ++v) host_deg_[v] = intersection_count(host.row(v), allowed_);
        pattern_deg_ = pattern.degrees();

        map_.assign(k, -1);
        used_.assign(words_, 0);
        scratch_.assign(static_cast<std::size_t>(k) * words_, 0);
    }

    std::optional<Embedding> run() {
        if (pattern_.n() > host_.n()) return std::nullopt;
        if (search(0)) return map_;
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool search(std::size_t depth) {
        if (depth == order_.size()) return true;
        Vertex v = order_[depth];
        Word* cand = scratch_.data() + depth * words_;
        for (int w = 0; w < words_; ++w) cand[w] = allowed_[w] & ~used_[w];
        for (Vertex b : back_[depth]) {
            auto row = host_.row(map_[b]);
            for (int w = 0; w < words_; ++w) cand[w] &= row[w];
        }
        if (pin_[v] >= 0) {
            Vertex h = pin_[v];
            bool ok = (cand[h >> 6] >> (h & 63)) & 1u;
            std::fill(cand, cand + words_, 0);
            if (ok) cand[h >> 6] |= Word{1} << (h & 63);
        }
        for (int w = 0; w < words_; ++w) {
            Word bits = cand[w];
            while (bits) {
                Vertex x = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (host_deg_[x] < pattern_deg_[v]) continue;
                if (++nodes_ > options_.node_limit && options_.node_limit != 0)
                    throw BudgetExceeded("embedding search exceeded node limit");
                map_[v] = x;
                used_[x >> 6] |= Word{1} << (x & 63);
                if (search(depth + 1)) return true;
                used_[x >> 6] &= ~(Word{1} << (x & 63));
                map_[v] = -1;
            }
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    const EmbedOptions& options_;
    int words_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> back_;
    std::vector<Vertex> pin_;
    std::vector<Word> allowed_;
    std::vector<int> host_deg_;
    std::vector<int> pattern_deg_;
    Embedding map_;
    std::vector<Word> used_;
    std::vector<Word> scratch_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern, const EmbedOptions& options,
                                        EmbedStats* stats) {
    if (pattern.n() > kMaxGeneralPattern && !pattern.is_forest())
        throw InvalidArgument("general subgraph search is limited to patterns on at most " +
                              std::to_string(kMaxGeneralPattern) + " vertices");
    Matcher matcher(host, pattern, options);
    auto result = matcher.run();
    if (stats) stats->nodes += matcher.nodes();
    return result;
}

std::optional<Embedding> contains_forest_copy(const Graph& host, const Graph& forest, const VertexSet* within) {
    if (!forest.is_forest()) throw InvalidArgument("pattern is not a forest");
    std::vector<Vertex> kept;
    Graph core = forest.strip_isolated(&kept);
    EmbedOptions options;
    options.within = within;
    auto inner = find_embedding(host, core, options);
    if (!inner) return std::nullopt;
    Embedding out(forest.n(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) out[kept[i]] = (*inner)[i];
    return out;
}

bool is_embedding(const Graph& host, const Graph& pattern, const Embedding& map) {
    if (static_cast<int>(map.size()) != pattern.n()) return false;
    std::vector<char> hit(host.n(), 0);
    for (Vertex v = 0; v < pattern.n(); ++v) {
        Vertex x = map[v];
        if (x == -1) {
            if (pattern.degree(v) != 0) return false;
            continue;
        }
        if (x < 0 || x >= host.n() || hit[x]) return false;
        hit[x] = 1;
    }
    for (auto [a, b] : pattern.edges())
        if (!host.has_edge(map[a], map[b])) return false;
    return true;
}

} // namespace ramsey
