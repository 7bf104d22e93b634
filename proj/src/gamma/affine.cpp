#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "ramsey/error.hpp"
#include "ramsey/gamma.hpp"
#include "ramsey/io.hpp"
#include "ramsey/random_graph.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

int mod(long long a, int s) {
    long long r = a % s;
    return static_cast<int>(r < 0 ? r + s : r);
}

// Floor with a little slack so 0.96 * 25 lands on 24, not 23.999...
long long floor_slack(double x) { return static_cast<long long>(std::floor(x + 1e-9)); }

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (m % p == 0) return m == p;
    }
    std::uint64_t d = m - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // These twelve bases are deterministic for every 64-bit integer.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t largest_prime_leq(std::uint64_t m) {
    require(m >= 2, "no prime <= " + std::to_string(m));
    while (!is_prime(m)) --m;
    return m;
}

int parallel_class(int s, Point a, Point b) {
    require(a != b, "a line needs two distinct points");
    if (a.first == b.first) return s;
    int dx = mod(b.first - a.first, s);
    int dy = mod(b.second - a.second, s);
    // slope = dy / dx in F_s; dx^{-1} = dx^{s-2}.
    auto inv = static_cast<int>(powmod(static_cast<std::uint64_t>(dx), static_cast<std::uint64_t>(s - 2),
                                       static_cast<std::uint64_t>(s)));
    return static_cast<int>(static_cast<long long>(dy) * inv % s);
}

int line_index(int s, int cls, Point a) {
    if (cls == s) return a.first;
    return mod(a.second - static_cast<long long>(cls) * a.first, s);
}

AffineGamma make_affine_gamma(int s, int q, int N) {
    require(s >= 2 && is_prime(static_cast<std::uint64_t>(s)), "affine plane order must be prime");
    require(1 <= q && q <= s, "need 1 <= q <= s");
    require(1 <= N && static_cast<long long>(N) <= static_cast<long long>(s) * s, "need 1 <= N <= s^2");
    AffineGamma out;
    out.s = s;
    out.q = q;
    for (int i = 0; i < N; ++i) out.points.emplace_back(i / s, i % s);
    Graph g(N);
    std::vector<std::pair<Edge, int>> coloured;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            int cls = parallel_class(s, out.points[a], out.points[b]);
            if (cls < q) {
                g.add_edge(a, b);
                coloured.push_back({{a, b}, cls + 1});
            }
        }
    out.coloured = ColouredGraph(std::move(g), q);
    for (auto [e, c] : coloured) out.coloured.set_colour(e.first, e.second, c);
    return out;
}

AffineParameters affine_parameters(int delta, int q, int lambda, double eps) {
    require(delta >= 1, "need delta >= 1");
    require(q >= 1, "need q >= 1");
    require(lambda >= 1, "need lambda >= 1");
    require(eps > 0 && eps < 1, "need 0 < eps < 1");
    const double bound = (1 - eps) * delta / lambda;
    if (floor_slack(bound) < 2)
        throw Infeasible("no prime <= (1-eps)*delta/lambda = " + fmt(bound));
    const auto s = static_cast<int>(largest_prime_leq(static_cast<std::uint64_t>(floor_slack(bound))));
    if (q > s) throw Infeasible("q <= s fails: q = " + std::to_string(q) + " > s = " + std::to_string(s));
    const long long N = static_cast<long long>(q) * (delta - 1) + 1;
    if (N > static_cast<long long>(s) * s)
        throw Infeasible("q(delta-1)+1 <= s^2 fails: " + std::to_string(N) + " > " + std::to_string(s * s));
    const long long room = floor_slack((1 - eps) * delta / s);
    if (room < lambda)
        throw Infeasible("floor((1-eps)*delta/s) >= lambda fails: " + std::to_string(room) + " < " +
                         std::to_string(lambda));
    return {s, static_cast<int>(N)};
}

AffineGamma build_affine_gamma(int delta, int q, int lambda, double eps) {
    AffineParameters p = affine_parameters(delta, q, lambda, eps);
    return make_affine_gamma(p.s, q, p.N);
}

ColouredGraph build_random_gamma(int delta, int q, std::uint64_t seed) {
    require(delta >= 1, "need delta >= 1");
    require(q >= 1, "need q >= 1");
    Graph g = sample_gnp(q * (delta - 1) + 1, 0.5, seed);
    return random_colouring(g, q, derive_seed(seed, 1));
}

ColouredGraph build_empty_gamma(int delta, int q) {
    require(delta >= 1, "need delta >= 1");
    require(q >= 1, "need q >= 1");
    return ColouredGraph(Graph(q * (delta - 1) + 1), q);
}

DegreeCheck check_degree_condition(const ColouredGraph& gamma, int delta) {
    DegreeCheck r;
    r.max_degree = gamma.max_class_degree();
    r.ok = r.max_degree <= delta - 1;
    return r;
}

void write_affine(std::ostream& out, const AffineGamma& gamma) {
    out << "affine " << gamma.s << ' ' << gamma.q << ' ' << gamma.points.size() << '\n';
    for (auto [x, y] : gamma.points) out << x << ' ' << y << '\n';
    write_coloured(out, gamma.coloured);
}

AffineGamma read_affine(std::istream& in) {
    std::string tag;
    long long s = 0, q = 0, N = 0;
    if (!(in >> tag >> s >> q >> N) || tag != "affine") throw InvalidArgument("malformed affine file: bad header");
    require(s >= 2 && s <= 46340 && is_prime(static_cast<std::uint64_t>(s)), "malformed affine file: s not prime");
    require(1 <= q && q <= s, "malformed affine file: need 1 <= q <= s");
    require(1 <= N && N <= s * s, "malformed affine file: need 1 <= N <= s^2");
    AffineGamma out;
    out.s = static_cast<int>(s);
    out.q = static_cast<int>(q);
    std::set<Point> seen;
    for (long long i = 0; i < N; ++i) {
        long long x = -1, y = -1;
        if (!(in >> x >> y)) throw InvalidArgument("malformed affine file: expected point");
        require(0 <= x && x < s && 0 <= y && y < s, "malformed affine file: point outside F_s^2");
        Point pt{static_cast<int>(x), static_cast<int>(y)};
        require(seen.insert(pt).second, "malformed affine file: repeated point");
        out.points.push_back(pt);
    }
    out.coloured = read_coloured(in);
    require(out.coloured.n() == N && out.coloured.q() == q, "malformed affine file: graph header mismatch");
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            int cls = parallel_class(out.s, out.points[a], out.points[b]);
            int expect = cls < q ? cls + 1 : 0;
            int got = out.coloured.graph().has_edge(a, b) ? out.coloured.colour(a, b) : 0;
            require(expect == got, "malformed affine file: edge colours disagree with the line structure");
        }
    return out;
}

} // namespace ramsey
