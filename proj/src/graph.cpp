#include "secdom/graph.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace secdom {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list) : n_(vertex_count) {
    if (vertex_count < 0)
        throw ContractError("negative vertex count");

    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw ContractError("edge endpoint out of range");
        if (u == v)
            throw ContractError("self-loop");
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end())
        throw ContractError("duplicate edge");

    std::vector<int> deg(n_, 0);
    for (auto [u, v] : normalized) {
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v)
        offsets_[v + 1] = offsets_[v] + deg[v];
    adj_.resize(normalized.size() * 2);
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : normalized) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < n_; ++v)
        std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

bool Graph::has_edge(int u, int v) const {
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out; // already lexicographic: u ascending, adjacency sorted
}

Graph build_path(int n) {
    if (n < 1)
        throw InvalidSizeError("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph build_cycle(int n) {
    if (n < 3)
        throw InvalidSizeError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw InvalidSizeError("cartesian product of an empty graph");
    const int hn = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(g.vertex_count()) * h.edge_count() +
                  static_cast<size_t>(hn) * g.edge_count());
    for (int a = 0; a < g.vertex_count(); ++a)
        for (auto [b, b2] : h.edges())
            edges.emplace_back(a * hn + b, a * hn + b2);
    for (auto [a, a2] : g.edges())
        for (int b = 0; b < hn; ++b)
            edges.emplace_back(a * hn + b, a2 * hn + b);
    return Graph(g.vertex_count() * hn, edges);
}

namespace {

// Splits into lines, remembering 1-based numbers; blank lines are skipped.
struct LineReader {
    std::istream& in;
    int line_no = 0;

    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                out = line;
                return true;
            }
        }
        return false;
    }
};

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> a >> b))
        return false;
    if (ss >> extra)
        return false;
    return true;
}

} // namespace

Graph parse_graph(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line))
        throw ParseError("missing header", 1);
    long long n = 0, m = 0;
    if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
        throw ParseError("malformed header, expected \"N M\"", reader.line_no);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line))
            throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i),
                             reader.line_no + 1);
        long long u = 0, v = 0;
        if (!parse_two_ints(line, u, v))
            throw ParseError("malformed edge, expected \"u v\"", reader.line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex id out of range", reader.line_no);
        if (u == v)
            throw ParseError("self-loop", reader.line_no);
        const int lo = static_cast<int>(std::min(u, v));
        const int hi = static_cast<int>(std::max(u, v));
        if (!seen.insert({lo, hi}).second)
            throw ParseError("duplicate edge", reader.line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (reader.next(line))
        throw ParseError("trailing content after edge list", reader.line_no);
    return Graph(static_cast<int>(n), edges);
}

std::string render_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace secdom
