#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ramsey/bounds.hpp"
#include "ramsey/error.hpp"
#include "ramsey/gamma.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

int affine_lower_bound(int delta, int lambda, double eps) {
    // Only q <= s and q(delta-1)+1 <= s^2 involve q, so feasibility is downward closed.
    int best = 0;
    for (int q = 1;; ++q) {
        try {
            affine_parameters(delta, q, lambda, eps);
            best = q;
        } catch (const Infeasible&) {
            return best;
        }
    }
}

BoundsReport qtilde_bounds(const NeighbourhoodProfile& profile, int n, double eps, double log_constant) {
    require(profile.unique_min, "qtilde_bounds needs a unique minimum-degree vertex");
    require(eps > 0 && eps < 0.2, "need 0 < eps < 0.2");
    require(n >= 2, "need n >= 2");
    require(log_constant > 0, "log constant must be positive");
    BoundsReport r;
    r.delta = profile.delta;
    r.lambda_F = profile.lambda_F;
    r.Delta_F = profile.Delta_F;
    r.e_F = profile.e_F;
    r.n = n;
    r.eps = eps;
    r.log_constant = log_constant;
    r.lower_log = static_cast<long long>(std::floor(r.delta / (log_constant * std::log(static_cast<double>(n)))));
    if (r.e_F == 0) {
        r.simple_all_q = true;
        return r;
    }
    const long long d = r.delta, D = r.Delta_F;
    r.lower_affine = affine_lower_bound(r.delta, r.lambda_F, eps);
    r.lower = std::max(*r.lower_affine, r.lower_log);
    // floor((d + D - 1)/D - 1/(d - 1)) as one fraction; d >= 2 once F has an edge.
    r.upper_maxdeg = ((d + D - 1) * (d - 1) - D) / (D * (d - 1));
    r.upper_edges = d * (d - 1) / 2 / r.e_F;
    r.upper = std::min(*r.upper_maxdeg, *r.upper_edges);
    return r;
}

std::vector<CurveRow> corollary_curves(double n, const std::vector<double>& p_grid, const CurveOptions& options) {
    require(n > 1, "need n > 1");
    require(options.k_max >= 2, "k_max must be at least 2");
    const double L = std::log(n), margin = options.boundary_margin;
    std::vector<CurveRow> rows;
    for (double p : p_grid) {
        require(p > 0 && p < 1, "every p must lie in (0, 1)");
        CurveRow row;
        row.p = p;
        row.regime = "unclassified";
        const double x = -std::log(p) / L;
        const double np = n * p;
        if (x > 2.0 / 3 + margin) {
            row.flags = "F-empty-range";
        } else if (x >= 2.0 / 3 - margin) {
            row.flags = "boundary:n^-2/3";
        } else if (x > 0.5 + margin) {
            // The unique k with (k+1)/(2k+1) < x < k/(2k-1).
            int k = static_cast<int>(std::floor((1 - x) / (2 * x - 1))) + 1;
            auto edge = [](int j) { return (j + 1.0) / (2.0 * j + 1.0); };
            int boundary = 0;
            if (std::abs(x - edge(k)) < margin) boundary = k;
            else if (std::abs(x - edge(k - 1)) < margin) boundary = k - 1;
            if (k > options.k_max) {
                double f = std::exp((x - 0.5) * L);
                row.regime = "c";
                row.k_or_f = f;
                row.lower = np / L * std::max(16 * std::log(f) * std::log(f) / L, 1.0 / 80);
                row.upper = 2 * np * std::log(f * f * L) / L;
            } else if (boundary >= 2) {
                row.regime = "b";
                row.k_or_f = boundary;
                row.lower = np / ((boundary + 1.0) * (boundary + 1.0));
                row.upper = np / (boundary - 1.0);
                row.flags = "boundary";
            } else {
                row.regime = "a";
                row.k_or_f = k;
                row.lower = np / (static_cast<double>(k) * k);
                row.upper = np / (k - 1.0);
            }
        } else if (x >= 0.5 - margin) {
            row.flags = "boundary:n^-1/2";
        } else if (std::log(p) < 0.5 * std::log(L / n) - margin * L) {
            row.regime = "d";
            row.lower = 1;
            row.upper = 8 / p;
        } else {
            row.flags = "dense-range";
        }
        if (!rows.empty()) {
            const CurveRow& prev = rows.back();
            bool changed = prev.regime != row.regime || (row.regime != "c" && prev.k_or_f != row.k_or_f);
            if (changed) row.flags += row.flags.empty() ? "regime-change" : ";regime-change";
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> parse_p_grid(const std::string& text) {
    auto fail = [&] { return InvalidArgument("malformed p grid '" + text + "'"); };
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    std::vector<double> grid;
    try {
        if (parts.size() == 4 && (parts[0] == "geometric" || parts[0] == "linear")) {
            double lo = std::stod(parts[1]), hi = std::stod(parts[2]);
            int count = std::stoi(parts[3]);
            if (count < 1 || lo <= 0 || hi <= 0 || (count > 1 && lo == hi)) throw fail();
            for (int i = 0; i < count; ++i) {
                double t = count == 1 ? 0 : static_cast<double>(i) / (count - 1);
                grid.push_back(parts[0] == "geometric" ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
            }
        } else if (parts.size() == 1) {
            std::stringstream list(text);
            for (std::string item; std::getline(list, item, ',');) grid.push_back(std::stod(item));
        } else {
            throw fail();
        }
    } catch (const std::logic_error&) {
        throw fail();
    }
    if (grid.empty()) throw fail();
    return grid;
}

std::string curves_csv(const std::vector<CurveRow>& rows) {
    std::string out = "p,regime,k_or_f,lower,upper,flags\n";
    char buf[256];
    for (const CurveRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%s,%.12g,%.12g,%.12g,%s\n", r.p, r.regime.c_str(), r.k_or_f, r.lower,
                      r.upper, r.flags.c_str());
        out += buf;
    }
    return out;
}

namespace {

bool sparse_enough(const Graph& g, const std::vector<Vertex>& U, int k) {
    VertexSet in(g.n());
    for (Vertex v : U) in.insert(v);
    for (Vertex v : U)
        if (intersection_count(g.row(v), in.bits()) > k) return false;
    return true;
}

std::vector<Vertex> greedy_pass(const Graph& g, int k, std::uint64_t seed) {
    std::vector<Vertex> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);
    std::vector<int> inside_deg(g.n(), 0);
    std::vector<char> in(g.n(), 0);
    for (Vertex v : order) {
        if (inside_deg[v] > k) continue;
        bool ok = true;
        for (Vertex w : g.neighbours(v))
            if (in[w] && inside_deg[w] >= k) ok = false;
        if (!ok) continue;
        in[v] = 1;
        for (Vertex w : g.neighbours(v)) ++inside_deg[w];
    }
    std::vector<Vertex> U;
    for (Vertex v = 0; v < g.n(); ++v)
        if (in[v]) U.push_back(v);
    return U;
}

} // namespace

KoganReport kogan_sparse_set(const Graph& g, int k, const KoganOptions& options) {
    require(k >= 0, "need k >= 0");
    require(options.restarts >= 1, "need at least one restart");
    KoganReport r;
    r.k = k;
    const long long n = g.n(), m = g.m();
    if (n == 0) {
        r.exhaustive = r.attained = true;
        return r;
    }
    r.average_degree = 2.0 * m / n;
    // (k+1)n / (2m/n + k+1) = (k+1)n^2 / (2m + (k+1)n), ceiled in integers.
    const long long num = (k + 1) * n * n, den = 2 * m + (k + 1) * n;
    r.bound = static_cast<double>(num) / den;
    r.target = (num + den - 1) / den;

    if (n <= options.exhaustive_max_n) {
        std::vector<std::uint32_t> adj(n, 0);
        for (auto [u, v] : g.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        std::uint32_t best = 0;
        int best_size = 0;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            int size = std::popcount(mask);
            if (size <= best_size) continue;
            bool ok = true;
            for (std::uint32_t rest = mask; rest && ok; rest &= rest - 1)
                ok = std::popcount(adj[std::countr_zero(rest)] & mask) <= k;
            if (ok) {
                best = mask;
                best_size = size;
            }
        }
        for (int v = 0; v < n; ++v)
            if (best >> v & 1) r.U.push_back(v);
        r.exhaustive = true;
        r.restarts = 0;
    } else {
        std::vector<std::vector<Vertex>> found(options.restarts);
        parallel_for(found.size(), options.threads > 0 ? options.threads : default_threads(),
                     [&](std::size_t i) { found[i] = greedy_pass(g, k, derive_seed(options.seed, i)); });
        std::size_t pick = 0;
        for (std::size_t i = 1; i < found.size(); ++i)
            if (found[i].size() > found[pick].size()) pick = i;
        r.U = found[pick];
        r.restarts = options.restarts;
    }
    if (!sparse_enough(g, r.U, k)) throw VerificationFailure("sparse set violates the degree bound");
    r.attained = static_cast<long long>(r.U.size()) >= r.target;
    return r;
}

} // namespace ramsey
