#include "secdom/construct.hpp"

#include <algorithm>

#include "secdom/formulas.hpp"

namespace secdom {

namespace tiles {
const PatternTile p2_path_a{4, {{1, 1}, {2, 2}, {3, 1}}};
const PatternTile p2_path_b{4, {{1, 2}, {2, 1}, {3, 2}}};
const PatternTile p2_cycle{8, {{2, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {8, 2}}};
const PatternTile m2n_prefix{4, {{2, 1}, {3, 2}, {4, 1}}};
const PatternTile p3_diagonal{3, {{1, 1}, {2, 2}, {3, 3}}};
const PatternTile p3_full_copy{1, {{1, 1}, {1, 2}, {1, 3}}};
const PatternTile p3_tail_pair{2, {{1, 1}, {2, 2}, {2, 3}}};
} // namespace tiles

namespace {

using Placements = std::vector<std::pair<int, int>>; // (copy, row), 1-based

void stamp(Placements& out, const PatternTile& tile, int copy_offset) {
    for (auto [c, r] : tile.placements)
        out.emplace_back(copy_offset + c, r);
}

// Tiles A and B alternated over 4*ceil(n/4) copies, then the residue rule.
Placements p2_path_placements(int n) {
    const int padded = 4 * ((n + 3) / 4);
    Placements raw;
    for (int t = 0; t < padded / 4; ++t)
        stamp(raw, t % 2 == 0 ? tiles::p2_path_a : tiles::p2_path_b, 4 * t);

    Placements out;
    switch (n % 4) {
    case 0:
        out = raw;
        out.emplace_back(n, 1);
        break;
    case 1: // drop the first copy and the final two, shifting left
        for (auto [c, r] : raw)
            if (c >= 2 && c <= n + 1)
                out.emplace_back(c - 1, r);
        break;
    case 2: // drop the final two copies
    case 3: // drop the final copy
        for (auto [c, r] : raw)
            if (c <= n)
                out.emplace_back(c, r);
        break;
    }
    return out;
}

Placements placements_for(const FamilyInstance& inst) {
    const int n = inst.n;
    Placements out;
    switch (inst.family) {
    case Family::p2xpn:
        return p2_path_placements(n);
    case Family::p2xcn:
        if (n % 8 != 0)
            return p2_path_placements(n); // the cycle only adds edges
        for (int t = 0; t < n / 8; ++t)
            stamp(out, tiles::p2_cycle, 8 * t);
        return out;
    case Family::m2n:
        if (n % 8 != 4)
            return p2_path_placements(n); // the twist only adds edges
        stamp(out, tiles::m2n_prefix, 0);
        for (int t = 0; t < (n - 4) / 8; ++t)
            stamp(out, tiles::p2_cycle, 4 + 8 * t);
        return out;
    case Family::p3xcn:
        for (int t = 0; t < n / 3; ++t)
            stamp(out, tiles::p3_diagonal, 3 * t);
        if (n % 3 == 1)
            stamp(out, tiles::p3_full_copy, n - 1);
        else if (n % 3 == 2)
            stamp(out, tiles::p3_tail_pair, n - 2);
        return out;
    case Family::p3xpn:
        throw UnsupportedFamilyError("no implemented construction for p3xpn");
    }
    throw ContractError("unknown family");
}

} // namespace

VertexSet construct_optimal(const FamilyInstance& inst) {
    inst.validate();
    const Placements placements = placements_for(inst);
    std::vector<int> ids;
    ids.reserve(placements.size());
    for (auto [copy, row] : placements)
        ids.push_back(inst.vertex_id(copy, row));
    return VertexSet(inst.vertex_count(), std::move(ids));
}

int expected_construction_size(const FamilyInstance& inst) {
    const FormulaResult formula = gamma_s_formula(inst);
    if (inst.family == Family::p3xcn && (inst.n == 4 || inst.n == 7))
        return formula.value + 1;
    return formula.value;
}

} // namespace secdom
