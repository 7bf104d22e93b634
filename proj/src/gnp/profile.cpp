#include <algorithm>
#include <cmath>

#include "ramsey/connectivity.hpp"
#include "ramsey/error.hpp"
#include "ramsey/gnp_analysis.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

NeighbourhoodProfile neighbourhood_profile(const Graph& h) {
    require(h.n() >= 1, "neighbourhood profile needs at least one vertex");
    NeighbourhoodProfile out;
    std::vector<int> deg = h.degrees();
    auto it = std::min_element(deg.begin(), deg.end());
    out.u = static_cast<Vertex>(it - deg.begin());
    out.delta = *it;
    out.unique_min = std::count(deg.begin(), deg.end(), out.delta) == 1;
    out.neighbours = h.neighbours(out.u);
    out.F = h.induced(out.neighbours);
    out.e_F = out.F.m();
    out.Delta_F = out.F.max_degree();
    out.is_forest_F = out.F.is_forest();
    for (const auto& comp : out.F.components()) out.lambda_F = std::max(out.lambda_F, static_cast<int>(comp.size()));
    return out;
}

std::vector<Vertex> component_in_window(const Graph& h, const VertexSet& removed, int lo, int hi) {
    const int words = h.words();
    std::vector<Word> unseen(words, 0);
    for (Vertex v = 0; v < h.n(); ++v)
        if (!removed.contains(v)) unseen[v >> 6] |= Word{1} << (v & 63);
    std::vector<Word> frontier(words);
    std::vector<Word> next(words);
    for (int w = 0; w < words; ++w) {
        while (unseen[w] != 0) {
            Vertex start = w * 64 + __builtin_ctzll(unseen[w]);
            std::vector<Vertex> comp;
            std::fill(frontier.begin(), frontier.end(), 0);
            frontier[start >> 6] = Word{1} << (start & 63);
            unseen[start >> 6] &= ~frontier[start >> 6];
            bool any = true;
            while (any) {
                std::fill(next.begin(), next.end(), 0);
                for_each_bit(std::span<const Word>(frontier), [&](Vertex v) {
                    comp.push_back(v);
                    auto row = h.row(v);
                    for (int i = 0; i < words; ++i) next[i] |= row[i];
                });
                any = false;
                for (int i = 0; i < words; ++i) {
                    next[i] &= unseen[i];
                    unseen[i] &= ~next[i];
                    any = any || next[i] != 0;
                }
                frontier.swap(next);
            }
            int size = static_cast<int>(comp.size());
            if (lo <= size && size <= hi) {
                std::sort(comp.begin(), comp.end());
                return comp;
            }
        }
    }
    return {};
}

namespace {

double log_binom(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

struct W4Search {
    const Graph& h;
    int delta;
    int lo;
    int hi;
    WellBehavedReport& report;

    bool try_cutset(const std::vector<Vertex>& cut) {
        ++report.w4_cutsets_checked;
        VertexSet removed(h.n());
        for (Vertex v : cut) removed.insert(v);
        auto comp = component_in_window(h, removed, lo, hi);
        if (comp.empty()) return false;
        report.w4 = false;
        report.w4_cutset = cut;
        report.w4_component = std::move(comp);
        return true;
    }

    void exhaustive() {
        const int n = h.n();
        std::vector<Vertex> cut(delta);
        for (int i = 0; i < delta; ++i) cut[i] = i;
        while (true) {
            if (try_cutset(cut)) return;
            int i = delta - 1;
            while (i >= 0 && cut[i] == n - delta + i) --i;
            if (i < 0) return;
            ++cut[i];
            for (int j = i + 1; j < delta; ++j) cut[j] = cut[j - 1] + 1;
        }
    }

    // Grows a connected set K from `start`, each step adding the boundary
    // vertex that keeps the outer boundary N(K) \ K smallest. Whenever |K| is
    // in the window and the boundary fits in delta vertices, the boundary
    // (padded to exactly delta) is tested as a cut-set.
    bool greedy(Vertex start) {
        const int n = h.n();
        const int words = h.words();
        std::vector<Word> inside(words, 0), boundary(words, 0);
        auto add = [&](Vertex x) {
            inside[x >> 6] |= Word{1} << (x & 63);
            auto row = h.row(x);
            for (int i = 0; i < words; ++i) boundary[i] = (boundary[i] | row[i]) & ~inside[i];
        };
        add(start);
        for (int size = 1; size <= hi; ++size) {
            int bsize = 0;
            for (Word w : boundary) bsize += __builtin_popcountll(w);
            if (size >= lo && bsize <= delta && n - size >= delta) {
                std::vector<Vertex> cut;
                for_each_bit(std::span<const Word>(boundary), [&](Vertex v) { cut.push_back(v); });
                for (Vertex v = 0; v < n && static_cast<int>(cut.size()) < delta; ++v) {
                    bool used = ((inside[v >> 6] | boundary[v >> 6]) >> (v & 63)) & 1u;
                    if (!used) cut.push_back(v);
                }
                std::sort(cut.begin(), cut.end());
                if (try_cutset(cut)) return true;
            }
            if (bsize == 0) return false;
            Vertex best = -1;
            int best_size = 0;
            for_each_bit(std::span<const Word>(boundary), [&](Vertex x) {
                auto row = h.row(x);
                int s = 0;
                for (int i = 0; i < words; ++i) {
                    Word w = (boundary[i] | row[i]) & ~inside[i];
                    if (i == (x >> 6)) w &= ~(Word{1} << (x & 63));
                    s += __builtin_popcountll(w);
                }
                if (best < 0 || s < best_size) {
                    best = x;
                    best_size = s;
                }
            });
            add(best);
        }
        return false;
    }
};

} // namespace

WellBehavedReport well_behaved(const Graph& h, const WellBehavedOptions& options) {
    require(h.n() >= 4, "well-behaved check needs at least 4 vertices");
    const int n = h.n();
    WellBehavedReport r;
    std::vector<int> deg = h.degrees();
    const int delta = *std::min_element(deg.begin(), deg.end());

    Vertex first = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (deg[v] != delta) continue;
        if (first < 0) {
            first = v;
        } else {
            r.w1 = false;
            r.w1_tie = std::make_pair(first, v);
            break;
        }
    }

    for (Vertex a = 0; a < n && r.w2; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            int c = intersection_count(h.row(a), h.row(b));
            if (2 * c > delta) {
                r.w2 = false;
                r.w2_pair = std::make_pair(a, b);
                r.w2_codegree = c;
                break;
            }
        }

    auto conn = k_connected(h, 3);
    r.w3 = conn.connected;
    r.w3_cut = conn.cut;

    r.w4_window_lo = (delta + 1) / 2;
    r.w4_window_hi = n / 2;
    W4Search search{h, delta, std::max(1, r.w4_window_lo), r.w4_window_hi, r};
    if (search.lo <= search.hi && delta < n) {
        r.w4_exact = log_binom(n, delta) <= std::log(options.exact_cutset_limit) + 1e-9;
        if (r.w4_exact) {
            search.exhaustive();
        } else {
            Rng rng(options.seed);
            std::vector<int> starts = rng.subset(n, std::min(n, std::max(0, options.greedy_starts)));
            for (int v : starts)
                if (search.greedy(v)) break;
            for (int i = 0; i < options.random_cutsets && r.w4; ++i) search.try_cutset(rng.subset(n, delta));
        }
    }

    r.overall = r.w1 && r.w2 && r.w3 && r.w4;
    return r;
}

} // namespace ramsey
