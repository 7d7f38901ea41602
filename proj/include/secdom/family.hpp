#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "secdom/graph.hpp"

namespace secdom {

/// The five graph families with closed-form secure domination numbers.
enum class Family { p2xpn, p2xcn, m2n, p3xpn, p3xcn };

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

/// A family member: `family` plus the number of copies n. For m2n the graph
/// has 2n vertices. Copies and rows are 1-based; row 1 is the top/outer row.
/// Vertex id of copy i, row j is (i-1)*rows + (j-1).
struct FamilyInstance {
    Family family;
    int n;

    int rows() const { return (family == Family::p3xpn || family == Family::p3xcn) ? 3 : 2; }

    /// True when copy adjacency wraps around (cycles and the Moebius ladder).
    bool cyclic() const { return family != Family::p2xpn && family != Family::p3xpn; }

    int min_n() const { return (family == Family::p2xpn || family == Family::p3xpn) ? 2 : 3; }
    bool in_range() const { return n >= min_n(); }
    void validate() const;

    int vertex_count() const { return rows() * n; }

    int vertex_id(int copy, int row) const { return (copy - 1) * rows() + (row - 1); }
    int copy_of(int id) const { return id / rows() + 1; }
    int row_of(int id) const { return id % rows() + 1; }
};

/// Builds the instance's graph in the canonical (copy, row) layout. For m2n
/// this is the p2xpn layout plus the crossed edges (n,1)-(1,2) and (n,2)-(1,1).
Graph build_family(const FamilyInstance& inst);

} // namespace secdom
