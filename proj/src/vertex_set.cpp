#include "secdom/vertex_set.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace secdom {

VertexSet::VertexSet(int universe_size, std::vector<int> members)
    : universe_(universe_size), members_(std::move(members)) {
    if (universe_ < 0)
        throw ContractError("negative universe size");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw ContractError("duplicate vertex in set");
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= universe_))
        throw ContractError("vertex id outside universe");
}

VertexSet VertexSet::all(int universe_size) {
    std::vector<int> ids(universe_size);
    for (int v = 0; v < universe_size; ++v)
        ids[v] = v;
    return VertexSet(universe_size, std::move(ids));
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet parse_vertex_set(std::istream& in, int universe_size) {
    std::vector<int> ids;
    std::string token;
    int line = 1;
    char c;
    std::string current;
    auto flush = [&]() {
        if (current.empty())
            return;
        size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(current, &pos);
        } catch (const std::exception&) {
            throw ParseError("not a vertex id: \"" + current + "\"", line);
        }
        if (pos != current.size())
            throw ParseError("not a vertex id: \"" + current + "\"", line);
        if (value < 0 || value >= universe_size)
            throw ParseError("vertex id out of range: " + current, line);
        int id = static_cast<int>(value);
        if (std::find(ids.begin(), ids.end(), id) != ids.end())
            throw ParseError("duplicate vertex id: " + current, line);
        ids.push_back(id);
        current.clear();
    };
    while (in.get(c)) {
        if (c == '\n') {
            flush();
            ++line;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            flush();
        } else {
            current += c;
        }
    }
    flush();
    return VertexSet(universe_size, std::move(ids));
}

std::string render_vertex_set(const VertexSet& s) {
    std::string out;
    for (size_t i = 0; i < s.members().size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(s.members()[i]);
    }
    out += '\n';
    return out;
}

} // namespace secdom
