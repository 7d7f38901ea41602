#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "secdom/errors.hpp"

namespace secdom {

/// Immutable simple undirected graph with vertex ids 0..vertex_count-1 and
/// sorted adjacency lists. All mutating operations build a new graph.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Edges may be given in either orientation;
    /// self-loops and duplicates are rejected with ContractError.
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(adj_.size()) / 2; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<int> offsets_{0};
    std::vector<int> adj_;
};

/// Path v0 - v1 - ... - v(n-1). n >= 1.
Graph build_path(int n);

/// Cycle on n vertices. n >= 3.
Graph build_cycle(int n);

/// Cartesian product: vertex (a, b) gets id a * |V(h)| + b; (a,b)-(a',b') is an
/// edge iff a = a' and bb' in E(h), or b = b' and aa' in E(g).
Graph cartesian_product(const Graph& g, const Graph& h);

/// Reads the edge-list format: header "N M", then M lines "u v" of distinct
/// endpoints below N. Throws ParseError carrying the offending line number.
Graph parse_graph(std::istream& in);

/// Canonical text form: header plus edges as "u v" with u < v, sorted
/// lexicographically. parse_graph(render_graph(g)) == g.
std::string render_graph(const Graph& g);

} // namespace secdom
