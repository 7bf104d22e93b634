#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "ramsey/error.hpp"
#include "ramsey/forest_simplicity.hpp"
#include "ramsey/io.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

Bipartition min_bipartition(const Graph& forest) {
    require(forest.is_forest(), "F must be a forest");
    for (Vertex v = 0; v < forest.n(); ++v)
        require(forest.degree(v) > 0, "F has isolated vertex " + std::to_string(v) + "; strip it first");
    Bipartition out;
    std::vector<int> side(forest.n(), -1);
    for (const auto& comp : forest.components()) {
        // comp[0] is the smallest vertex; BFS 2-colours from it.
        std::vector<Vertex> queue{comp[0]};
        side[comp[0]] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (Vertex w : forest.neighbours(queue[h]))
                if (side[w] < 0) {
                    side[w] = 1 - side[queue[h]];
                    queue.push_back(w);
                }
        std::size_t zeros = std::count_if(comp.begin(), comp.end(), [&](Vertex v) { return side[v] == 0; });
        int a_side = zeros <= comp.size() - zeros ? 0 : 1;
        for (Vertex v : comp) (side[v] == a_side ? out.A : out.B).push_back(v);
    }
    std::sort(out.A.begin(), out.A.end());
    std::sort(out.B.begin(), out.B.end());
    return out;
}

std::int64_t SzzGraph::edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n()) return -1;
    if (u < r) return v >= r && v < r + s ? xy_edge(u, v - r) : -1;
    if (u < r + s && v >= r + s) {
        int j = u - r;
        int k = v - z(j, 0);
        return k >= 0 && k < b * q ? pendant_edge(j, k) : -1;
    }
    return -1;
}

SzzGraph construct_szz(const Graph& forest, int q, const SzzOptions& options) {
    require(q >= 2, "need q >= 2");
    SzzGraph g;
    g.F = forest;
    g.q = q;
    Bipartition bp = min_bipartition(forest);
    g.A = bp.A;
    g.B = bp.B;
    g.a = static_cast<int>(bp.A.size());
    g.b = static_cast<int>(bp.B.size());
    for (Vertex v : g.B) (forest.degree(v) == 1 ? g.B1 : g.B2).push_back(v);
    if (static_cast<int>(g.B2.size()) > g.a - 1)
        throw VerificationFailure("|B_{>=2}| exceeds a - 1 for a minimum bipartition");

    // s = q^{r+1} v(F) and t = s b q, computed with overflow checks against the cap.
    const std::int64_t cap = options.max_edges;
    std::int64_t r = static_cast<std::int64_t>(q) * (g.a - 1);
    std::int64_t s = forest.n();
    for (std::int64_t i = 0; i <= r; ++i) {
        s *= q;
        if (s > cap) throw BudgetExceeded("host graph exceeds the edge cap of " + std::to_string(cap));
    }
    std::int64_t t = s * g.b * q;
    if (t > cap || r * s + t > cap)
        throw BudgetExceeded("host graph has " + std::to_string(r * s + t) + " edges, cap is " + std::to_string(cap));
    g.r = static_cast<int>(r);
    g.s = static_cast<int>(s);
    g.t = static_cast<int>(t);

    g.G = Graph(g.n());
    for (int i = 0; i < g.r; ++i)
        for (int j = 0; j < g.s; ++j) g.G.add_edge(g.x(i), g.y(j));
    for (int j = 0; j < g.s; ++j)
        for (int k = 0; k < g.b * q; ++k) g.G.add_edge(g.y(j), g.z(j, k));
    return g;
}

ColouredGraph colour_G_minus_Z(const SzzGraph& szz) {
    Graph core(szz.r + szz.s);
    for (int i = 0; i < szz.r; ++i)
        for (int j = 0; j < szz.s; ++j) core.add_edge(szz.x(i), szz.y(j));
    ColouredGraph c(core, szz.q);
    for (int i = 0; i < szz.r; ++i)
        for (int j = 0; j < szz.s; ++j) c.set_colour(szz.x(i), szz.y(j), 1 + i / (szz.a - 1));
    for (int i = 1; i <= szz.q; ++i)
        if (contains_forest_copy(c.colour_class(i), szz.F))
            throw VerificationFailure("colouring of G - Z has a monochromatic copy of F in colour " + std::to_string(i));
    return c;
}

bool is_mono_copy(const SzzGraph& szz, const SzzColouring& phi, const Embedding& map, int colour) {
    if (static_cast<int>(map.size()) != szz.F.n()) return false;
    if (!is_embedding(szz.G, szz.F, map)) return false;
    for (auto [u, v] : szz.F.edges()) {
        std::int64_t e = szz.edge_index(map[u], map[v]);
        if (e < 0 || phi[e] != colour) return false;
    }
    return true;
}

MonoForest find_mono_forest(const SzzGraph& szz, const SzzColouring& phi) {
    const int q = szz.q, bq = szz.b * szz.q, vF = szz.F.n();
    require(static_cast<std::int64_t>(phi.size()) == szz.m(), "colouring has the wrong number of edges");
    for (int c : phi) require(c >= 1 && c <= q, "colouring uses a colour outside 1..q");

    // (1) for every y a colour used on at least b of its pendant edges.
    std::vector<int> pendant(szz.s);
    for (int j = 0; j < szz.s; ++j) {
        std::vector<int> count(q + 1, 0);
        for (int k = 0; k < bq; ++k) ++count[phi[szz.pendant_edge(j, k)]];
        pendant[j] = static_cast<int>(std::max_element(count.begin() + 1, count.end()) - count.begin());
    }
    // (2) a colour shared by at least s/q of them.
    std::vector<int> users(q + 1, 0);
    for (int c : pendant) ++users[c];
    MonoForest out;
    out.pendant_colour = static_cast<int>(std::max_element(users.begin() + 1, users.end()) - users.begin());
    for (int j = 0; j < szz.s && static_cast<int>(out.Y_prime.size()) < szz.s / q; ++j)
        if (pendant[j] == out.pendant_colour) out.Y_prime.push_back(j);
    if (static_cast<int>(out.Y_prime.size()) < szz.s / q) throw VerificationFailure("pigeonhole on pendant colours failed");

    // (3) v(F) vertices of Y' sharing a colour profile on X.
    std::map<std::vector<int>, std::vector<int>> buckets;
    const std::vector<int>* chosen = nullptr;
    for (int j : out.Y_prime) {
        std::vector<int> prof(szz.r);
        for (int i = 0; i < szz.r; ++i) prof[i] = phi[szz.xy_edge(i, j)];
        auto& bucket = buckets[prof];
        bucket.push_back(j);
        if (static_cast<int>(bucket.size()) == vF) {
            out.profile = prof;
            chosen = &bucket;
            break;
        }
    }
    if (!chosen) throw VerificationFailure("pigeonhole on colour profiles failed");
    std::vector<int> ys = *chosen;
    for (int j : ys) out.profile_vertices.push_back(szz.y(j));

    std::vector<int> count(q + 1, 0);
    for (int c : out.profile) ++count[c];
    out.map.assign(vF, -1);
    int heavy = 0;
    for (int c = 1; c <= q && !heavy; ++c)
        if (count[c] >= szz.a) heavy = c;

    if (heavy) {
        // Case 1: a colour-`heavy` K_{a, v(F)} between X and the profile vertices.
        out.case_number = 1;
        out.colour = heavy;
        for (int i = 0; i < szz.r && static_cast<int>(out.X_block.size()) < szz.a; ++i)
            if (out.profile[i] == heavy) out.X_block.push_back(szz.x(i));
        for (int k = 0; k < szz.a; ++k) out.map[szz.A[k]] = out.X_block[k];
        for (int k = 0; k < szz.b; ++k) out.map[szz.B[k]] = szz.y(ys[k]);
    } else {
        // Case 2: profile length q(a-1) with no colour reaching a forces exactly a-1 of each.
        for (int c = 1; c <= q; ++c)
            if (count[c] != szz.a - 1) throw VerificationFailure("colour profile is neither heavy nor balanced");
        out.case_number = 2;
        out.colour = out.pendant_colour;
        for (int i = 0; i < szz.r; ++i)
            if (out.profile[i] == out.pendant_colour) out.X_block.push_back(szz.x(i));
        std::vector<int> slot_of(vF, -1);
        for (int k = 0; k < szz.a; ++k) {
            out.map[szz.A[k]] = szz.y(ys[k]);
            slot_of[szz.A[k]] = ys[k];
        }
        for (std::size_t k = 0; k < szz.B2.size(); ++k) out.map[szz.B2[k]] = out.X_block[k];
        // Each leaf in B1 goes to an unused pendant of its neighbour's image.
        std::vector<int> used(szz.s, 0);
        for (Vertex leaf : szz.B1) {
            int j = slot_of[szz.F.neighbours(leaf)[0]];
            int taken = 0;
            for (int k = 0; k < bq; ++k) {
                if (phi[szz.pendant_edge(j, k)] != out.pendant_colour) continue;
                if (taken++ == used[j]) {
                    out.map[leaf] = szz.z(j, k);
                    break;
                }
            }
            ++used[j];
        }
    }
    if (!is_mono_copy(szz, phi, out.map, out.colour))
        throw VerificationFailure("extracted embedding is not a monochromatic copy of F");
    return out;
}

SzzColouring random_szz_colouring(const SzzGraph& szz, std::uint64_t seed) {
    Rng rng(seed);
    SzzColouring phi(szz.m());
    for (int& c : phi) c = 1 + static_cast<int>(rng.below(szz.q));
    return phi;
}

SzzColouring balanced_szz_colouring(const SzzGraph& szz, std::uint64_t seed) {
    Rng rng(seed);
    SzzColouring phi(szz.m());
    for (int j = 0; j < szz.s; ++j) {
        int shift = static_cast<int>(rng.below(szz.q));
        for (int i = 0; i < szz.r; ++i) phi[szz.xy_edge(i, j)] = 1 + (i + shift) % szz.q;
    }
    for (int j = 0; j < szz.s; ++j)
        for (int k = 0; k < szz.b * szz.q; ++k) phi[szz.pendant_edge(j, k)] = 1 + static_cast<int>(rng.below(szz.q));
    return phi;
}

ColouredGraph to_coloured(const SzzGraph& szz, const SzzColouring& phi) {
    require(static_cast<std::int64_t>(phi.size()) == szz.m(), "colouring has the wrong number of edges");
    ColouredGraph c(szz.G, szz.q);
    for (int i = 0; i < szz.r; ++i)
        for (int j = 0; j < szz.s; ++j) c.set_colour(szz.x(i), szz.y(j), phi[szz.xy_edge(i, j)]);
    for (int j = 0; j < szz.s; ++j)
        for (int k = 0; k < szz.b * szz.q; ++k) c.set_colour(szz.y(j), szz.z(j, k), phi[szz.pendant_edge(j, k)]);
    return c;
}

SzzColouring from_coloured(const SzzGraph& szz, const ColouredGraph& c) {
    require(c.graph() == szz.G, "coloured graph is not the host graph");
    require(c.q() == szz.q, "colouring has a different palette");
    require(c.is_total(), "colouring leaves edges uncoloured");
    SzzColouring phi(szz.m());
    for (auto [u, v] : szz.G.edges()) phi[szz.edge_index(u, v)] = c.colour(u, v);
    return phi;
}

void write_szz(std::ostream& out, const SzzGraph& szz) {
    out << "szz " << szz.a << ' ' << szz.b << ' ' << szz.r << ' ' << szz.s << ' ' << szz.t << ' ' << szz.q << '\n';
    write_edge_list(out, szz.G);
}

SzzGraph read_szz(std::istream& in, const Graph& forest, const SzzOptions& options) {
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), "missing szz header");
    std::istringstream header(line);
    std::string tag;
    int a, b, r, s, t, q;
    require(static_cast<bool>(header >> tag >> a >> b >> r >> s >> t >> q) && tag == "szz", "malformed szz header");
    SzzGraph g = construct_szz(forest, q, options);
    require(a == g.a && b == g.b && r == g.r && s == g.s && t == g.t, "szz header does not match the forest");
    require(read_edge_list(in) == g.G, "szz edge list does not match the construction");
    return g;
}

} // namespace ramsey
