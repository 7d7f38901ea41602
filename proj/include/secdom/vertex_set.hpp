#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "secdom/errors.hpp"

namespace secdom {

/// A subset of the vertices of a graph with `universe_size` vertices.
/// Members are kept sorted and distinct.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(int universe_size, std::vector<int> members);

    static VertexSet all(int universe_size);

    int universe_size() const noexcept { return universe_; }
    int size() const noexcept { return static_cast<int>(members_.size()); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(int v) const;
    std::span<const int> members() const noexcept { return members_; }

    bool operator==(const VertexSet&) const = default;

private:
    int universe_ = 0;
    std::vector<int> members_;
};

/// Reads whitespace-separated 0-based vertex ids. Duplicates and ids outside
/// the universe are ParseErrors.
VertexSet parse_vertex_set(std::istream& in, int universe_size);

/// Ids separated by single spaces, trailing newline.
std::string render_vertex_set(const VertexSet& s);

} // namespace secdom
