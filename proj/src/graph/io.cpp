#include "ramsey/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

// Reads one integer token, failing loudly on garbage or EOF.
long long next_int(std::istream& in, const char* what) {
    long long x = 0;
    if (!(in >> x)) throw InvalidArgument(std::string("malformed graph file: expected ") + what);
    return x;
}

void expect_end(std::istream& in) {
    std::string extra;
    if (in >> extra) throw InvalidArgument("malformed graph file: trailing data '" + extra + "'");
}

std::pair<Vertex, Vertex> read_pair(std::istream& in, long long n) {
    long long u = next_int(in, "edge endpoint");
    long long v = next_int(in, "edge endpoint");
    if (!(0 <= u && u < v && v < n))
        throw InvalidArgument("malformed edge " + std::to_string(u) + " " + std::to_string(v) +
                              ": need 0 <= u < v < n");
    return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

} // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
    long long n = next_int(in, "vertex count");
    long long m = next_int(in, "edge count");
    require(n >= 0 && n <= (1 << 24), "malformed graph file: bad vertex count");
    require(m >= 0 && m <= n * (n - 1) / 2, "malformed graph file: bad edge count");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        auto [u, v] = read_pair(in, n);
        require(!g.has_edge(u, v), "malformed graph file: duplicate edge");
        g.add_edge(u, v);
    }
    expect_end(in);
    return g;
}

void write_coloured(std::ostream& out, const ColouredGraph& g) {
    out << g.n() << ' ' << g.graph().m() << ' ' << g.q() << '\n';
    for (auto [u, v] : g.graph().edges()) out << u << ' ' << v << ' ' << g.colour(u, v) << '\n';
}

ColouredGraph read_coloured(std::istream& in) {
    long long n = next_int(in, "vertex count");
    long long m = next_int(in, "edge count");
    long long q = next_int(in, "colour count");
    require(n >= 0 && n <= (1 << 16), "malformed coloured file: bad vertex count");
    require(m >= 0 && m <= n * (n - 1) / 2, "malformed coloured file: bad edge count");
    require(q >= 1 && q <= 65535, "malformed coloured file: bad colour count");
    struct Row {
        Vertex u, v;
        int c;
    };
    std::vector<Row> rows;
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        auto [u, v] = read_pair(in, n);
        long long c = next_int(in, "colour");
        require(1 <= c && c <= q, "malformed coloured file: colour outside 1..q");
        require(!g.has_edge(u, v), "malformed coloured file: duplicate edge");
        g.add_edge(u, v);
        rows.push_back({u, v, static_cast<int>(c)});
    }
    expect_end(in);
    ColouredGraph out(std::move(g), static_cast<int>(q));
    for (const Row& r : rows) out.set_colour(r.u, r.v, r.c);
    return out;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    long long n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0;
    int bits = 0;
    for (Vertex v = 1; v < g.n(); ++v)
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph from_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    require(!line.empty(), "malformed graph6: empty line");
    for (char ch : line) require(ch >= 63 && ch <= 126, "malformed graph6: byte outside 63..126");

    std::size_t pos = 0;
    long long n = 0;
    auto take = [&](int count) {
        long long x = 0;
        for (int i = 0; i < count; ++i) {
            require(pos < line.size(), "malformed graph6: truncated size field");
            x = (x << 6) | (line[pos++] - 63);
        }
        return x;
    };
    if (line[0] != 126) {
        n = take(1);
    } else if (line.size() > 1 && line[1] != 126) {
        ++pos;
        n = take(3);
    } else {
        pos += 2;
        n = take(6);
    }
    require(n <= (1 << 24), "graph6 graph too large");
    long long pairs = n * (n - 1) / 2;
    std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
    require(line.size() == expected, "malformed graph6: wrong data length");

    Graph g(static_cast<int>(n));
    long long k = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++k) {
            int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
        }
    return g;
}

Graph read_graph(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream lines(text);
    std::string first;
    while (std::getline(lines, first)) {
        if (first.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    require(!first.empty(), "malformed graph file: empty input");
    std::istringstream probe(first);
    long long a = 0;
    long long b = 0;
    std::string rest;
    if ((probe >> a >> b) && !(probe >> rest)) {
        std::istringstream all(text);
        return read_edge_list(all);
    }
    auto start = first.find_first_not_of(" \t");
    return from_graph6(std::string_view(first).substr(start));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open graph file " + path);
    return read_graph(in);
}

ColouredGraph read_coloured_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open coloured graph file " + path);
    return read_coloured(in);
}

} // namespace ramsey
