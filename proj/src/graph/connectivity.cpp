#include "ramsey/connectivity.hpp"

#include <algorithm>
#include <deque>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

// Vertex-split network: v_in = 2v, v_out = 2v+1, unit capacity v_in -> v_out,
// "infinite" capacity u_out -> v_in for every edge.
class SplitNetwork {
public:
    explicit SplitNetwork(const Graph& g) : n_(g.n()), head_(2 * g.n(), -1) {
        for (Vertex v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
        for (auto [u, v] : g.edges()) {
            add_arc(2 * u + 1, 2 * v, kInf);
            add_arc(2 * v + 1, 2 * u, kInf);
        }
    }

    int max_flow(Vertex s, Vertex t, int cap, std::vector<Vertex>* cut) {
        residual_ = capacity_;
        int source = 2 * s + 1;
        int sink = 2 * t;
        int flow = 0;
        std::vector<int> via(head_.size());
        while (flow < cap) {
            std::fill(via.begin(), via.end(), -2);
            via[source] = -1;
            std::deque<int> queue{source};
            while (!queue.empty() && via[sink] == -2) {
                int x = queue.front();
                queue.pop_front();
                for (int a = head_[x]; a != -1; a = next_[a]) {
                    int y = to_[a];
                    if (residual_[a] > 0 && via[y] == -2) {
                        via[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if (via[sink] == -2) {
                if (cut) {
                    cut->clear();
                    for (Vertex v = 0; v < n_; ++v)
                        if (v != s && v != t && via[2 * v] != -2 && via[2 * v + 1] == -2) cut->push_back(v);
                }
                return flow;
            }
            for (int x = sink; x != source;) {
                int a = via[x];
                residual_[a] -= 1;
                residual_[a ^ 1] += 1;
                x = to_[a ^ 1];
            }
            ++flow;
        }
        return flow;
    }

private:
    static constexpr int kInf = 1 << 29;

    void add_arc(int from, int to, int cap) {
        to_.push_back(to);
        capacity_.push_back(cap);
        next_.push_back(head_[from]);
        head_[from] = static_cast<int>(to_.size()) - 1;
        to_.push_back(from);
        capacity_.push_back(0);
        next_.push_back(head_[to]);
        head_[to] = static_cast<int>(to_.size()) - 1;
    }

    int n_;
    std::vector<int> head_;
    std::vector<int> to_;
    std::vector<int> next_;
    std::vector<int> capacity_;
    std::vector<int> residual_;
};

} // namespace

int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap, std::vector<Vertex>* cut) {
    g.check_vertex(s);
    g.check_vertex(t);
    require(s != t && !g.has_edge(s, t), "local connectivity needs distinct non-adjacent vertices");
    SplitNetwork net(g);
    return net.max_flow(s, t, cap, cut);
}

ConnectivityResult k_connected(const Graph& g, int k) {
    require(k >= 1, "connectivity order must be at least 1");
    ConnectivityResult result;
    if (g.n() <= k) return result;

    // A separator S with |S| < k misses one of the vertices 0..k-1, say s;
    // some vertex t beyond S is then cut off from s and non-adjacent to it.
    SplitNetwork net(g);
    for (Vertex s = 0; s < k; ++s) {
        for (Vertex t = 0; t < g.n(); ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            std::vector<Vertex> cut;
            if (net.max_flow(s, t, k, &cut) < k) {
                result.cut = std::move(cut);
                return result;
            }
        }
    }
    result.connected = true;
    return result;
}

} // namespace ramsey
