#include "secdom/family.hpp"

#include <string>

namespace secdom {

std::string_view family_name(Family family) {
    switch (family) {
    case Family::p2xpn: return "p2xpn";
    case Family::p2xcn: return "p2xcn";
    case Family::m2n: return "m2n";
    case Family::p3xpn: return "p3xpn";
    case Family::p3xcn: return "p3xcn";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "p2xpn") return Family::p2xpn;
    if (name == "p2xcn") return Family::p2xcn;
    if (name == "m2n") return Family::m2n;
    if (name == "p3xpn") return Family::p3xpn;
    if (name == "p3xcn") return Family::p3xcn;
    return std::nullopt;
}

void FamilyInstance::validate() const {
    if (!in_range())
        throw InvalidSizeError(std::string(family_name(family)) + " needs n >= " +
                               std::to_string(min_n()) + ", got n = " + std::to_string(n));
}

Graph build_family(const FamilyInstance& inst) {
    inst.validate();
    const int rows = inst.rows();
    const Graph row_graph = build_path(rows);

    switch (inst.family) {
    case Family::p2xpn:
    case Family::p3xpn:
        return cartesian_product(build_path(inst.n), row_graph);
    case Family::p2xcn:
    case Family::p3xcn:
        return cartesian_product(build_cycle(inst.n), row_graph);
    case Family::m2n: {
        auto edges = cartesian_product(build_path(inst.n), row_graph).edges();
        edges.emplace_back(inst.vertex_id(inst.n, 1), inst.vertex_id(1, 2));
        edges.emplace_back(inst.vertex_id(inst.n, 2), inst.vertex_id(1, 1));
        return Graph(inst.vertex_count(), edges);
    }
    }
    throw ContractError("unknown family");
}

} // namespace secdom
