#include "secdom/structure.hpp"

#include <algorithm>
#include <string>

namespace secdom {

CopyProfile classify_copies(const FamilyInstance& inst, const VertexSet& s) {
    inst.validate();
    if (s.universe_size() != inst.vertex_count())
        throw ContractError("set universe does not match the family instance");
    CopyProfile profile{inst.family, inst.n, inst.cyclic(),
                        std::vector<int>(inst.n, 0), std::vector<char>(inst.n, '-'),
                        {0, 0, 0, 0}};
    for (int id : s.members()) {
        const int copy = inst.copy_of(id);
        ++profile.types[copy - 1];
        if (inst.rows() == 2)
            profile.row_marks[copy - 1] = inst.row_of(id) == 1 ? 'o' : 'i';
    }
    for (int c = 0; c < inst.n; ++c) {
        ++profile.m_counts[profile.types[c]];
        if (profile.types[c] != 1)
            profile.row_marks[c] = '-';
    }
    return profile;
}

bool balance_identity(const CopyProfile& profile, int s_size, int n) {
    return profile.m_counts[0] == n - s_size + profile.m_counts[2] + 2 * profile.m_counts[3];
}

std::string_view block_kind_name(BlockKind kind) {
    switch (kind) {
    case BlockKind::block: return "block";
    case BlockKind::end_block: return "end_block";
    case BlockKind::type1_block: return "type1_block";
    case BlockKind::type2_block: return "type2_block";
    }
    return "?";
}

namespace {

// `start` 1-based; length includes the delimiting type-0 copies.
Block make_block(const CopyProfile& profile, int start, int length, bool end_block) {
    const int n = profile.n;
    int s_count = 0;
    for (int i = 0; i < length; ++i)
        s_count += profile.types[(start - 1 + i) % n];
    BlockKind kind = end_block ? BlockKind::end_block : BlockKind::block;
    if (!end_block) {
        std::vector<int> interior;
        for (int i = 1; i + 1 < length; ++i)
            interior.push_back(profile.types[(start - 1 + i) % n]);
        if (!interior.empty() && std::all_of(interior.begin(), interior.end(),
                                             [](int t) { return t == 1; }))
            kind = BlockKind::type1_block;
        else if (interior.size() == 1 && interior[0] == 2)
            kind = BlockKind::type2_block;
    }
    return {start, length, kind, s_count};
}

} // namespace

std::vector<Block> find_blocks(const CopyProfile& profile) {
    const int n = profile.n;
    std::vector<int> zeros; // 1-based positions of type-0 copies
    for (int c = 1; c <= n; ++c)
        if (profile.types[c - 1] == 0)
            zeros.push_back(c);

    std::vector<Block> blocks;
    if (profile.cyclic) {
        if (zeros.size() <= 1)
            return blocks; // no pair of type-0 copies to anchor a block
        for (size_t i = 0; i + 1 < zeros.size(); ++i)
            blocks.push_back(make_block(profile, zeros[i], zeros[i + 1] - zeros[i] + 1, false));
        blocks.push_back(make_block(profile, zeros.back(), zeros.front() + n - zeros.back() + 1, false));
        return blocks;
    }
    if (zeros.empty())
        return blocks;
    if (profile.types[0] != 0)
        blocks.push_back(make_block(profile, 1, zeros.front(), true));
    for (size_t i = 0; i + 1 < zeros.size(); ++i)
        blocks.push_back(make_block(profile, zeros[i], zeros[i + 1] - zeros[i] + 1, false));
    if (profile.types[n - 1] != 0)
        blocks.push_back(make_block(profile, zeros.back(), n - zeros.back() + 1, true));
    return blocks;
}

std::vector<int> find_pattern(const CopyProfile& profile, std::string_view pattern) {
    if (pattern.empty())
        throw ContractError("empty pattern");
    for (char c : pattern)
        if (c < '0' || c > '3')
            throw ContractError("pattern digits must be in 0..3");
    const int n = profile.n;
    const int len = static_cast<int>(pattern.size());
    std::vector<int> starts;
    if (len > n)
        return starts;
    const int last_start = profile.cyclic ? n : n - len + 1;
    for (int s = 1; s <= last_start; ++s) {
        bool match = true;
        for (int i = 0; i < len; ++i)
            if (profile.types[(s - 1 + i) % n] != pattern[i] - '0') {
                match = false;
                break;
            }
        if (match)
            starts.push_back(s);
    }
    return starts;
}

ModifiedGraph apply_modification(const Graph& g, const VertexSet& s, const Modification& mod) {
    if (s.universe_size() != g.vertex_count())
        throw ContractError("set universe does not match the graph");
    const int n = g.vertex_count();
    std::vector<int> identity(n);
    for (int v = 0; v < n; ++v)
        identity[v] = v;

    switch (mod.kind) {
    case Modification::Kind::add_edge: {
        if (mod.u < 0 || mod.u >= n || mod.v < 0 || mod.v >= n)
            throw ContractError("endpoint out of range");
        if (mod.u == mod.v)
            throw ContractError("cannot add a self-loop");
        if (g.has_edge(mod.u, mod.v))
            throw ContractError("edge already present");
        auto edges = g.edges();
        edges.emplace_back(mod.u, mod.v);
        return {Graph(n, edges), s, std::move(identity)};
    }
    case Modification::Kind::delete_edge_in_s: {
        if (mod.u < 0 || mod.u >= n || mod.v < 0 || mod.v >= n || !g.has_edge(mod.u, mod.v))
            throw ContractError("no such edge");
        if (!s.contains(mod.u) || !s.contains(mod.v))
            throw ContractError("both endpoints must be in the set");
        auto edges = g.edges();
        std::erase(edges, std::pair<int, int>(std::min(mod.u, mod.v), std::max(mod.u, mod.v)));
        return {Graph(n, edges), s, std::move(identity)};
    }
    case Modification::Kind::delete_vertex: {
        const int victim = mod.v;
        if (victim < 0 || victim >= n)
            throw ContractError("vertex out of range");
        if (s.contains(victim))
            throw ContractError("deleted vertex must be outside the set");
        std::vector<int> old_to_new(n);
        for (int v = 0; v < n; ++v)
            old_to_new[v] = v < victim ? v : v - 1;
        old_to_new[victim] = -1;
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : g.edges())
            if (a != victim && b != victim)
                edges.emplace_back(old_to_new[a], old_to_new[b]);
        std::vector<int> members;
        members.reserve(s.size());
        for (int v : s.members())
            members.push_back(old_to_new[v]);
        return {Graph(n - 1, edges), VertexSet(n - 1, std::move(members)), std::move(old_to_new)};
    }
    }
    throw ContractError("unknown modification");
}

bool deletable_edge(const Graph& g, const VertexSet& s, int u, int v) {
    if (s.universe_size() != g.vertex_count())
        throw ContractError("set universe does not match the graph");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.has_edge(u, v))
        throw ContractError("no such edge");
    if (s.contains(u) || s.contains(v))
        return false;
    int u_s = 0, v_s = 0, common_s = 0;
    for (int x : g.neighbors(u))
        if (s.contains(x)) {
            ++u_s;
            if (g.has_edge(v, x))
                ++common_s;
        }
    for (int x : g.neighbors(v))
        if (s.contains(x))
            ++v_s;
    return (u_s > 1 && v_s > 1) || common_s != 1;
}

int trim_bound(const Graph& g, const VertexSet& s, const VertexSet& u_set,
               const SolveOptions& options) {
    if (s.universe_size() != g.vertex_count() || u_set.universe_size() != g.vertex_count())
        throw ContractError("set universe does not match the graph");
    for (int a : u_set.members())
        for (int b : g.neighbors(a))
            if (!u_set.contains(b) && s.contains(a))
                throw ContractError("boundary vertex of u_set lies in the set");

    int inside = 0;
    for (int a : u_set.members())
        if (s.contains(a))
            ++inside;

    const int n = g.vertex_count();
    if (u_set.size() == n)
        return inside; // nothing left to dominate

    std::vector<int> old_to_new(n, -1);
    int next_id = 0;
    for (int v = 0; v < n; ++v)
        if (!u_set.contains(v))
            old_to_new[v] = next_id++;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (old_to_new[a] >= 0 && old_to_new[b] >= 0)
            edges.emplace_back(old_to_new[a], old_to_new[b]);
    const Graph trimmed(next_id, edges);
    return solve_gamma_s(trimmed, options).optimum + inside;
}

namespace {

// Row of the single S-vertex in a type-1 copy (1-based), or 0.
int type1_row(const FamilyInstance& inst, const VertexSet& s, int copy) {
    for (int row = 1; row <= inst.rows(); ++row)
        if (s.contains(inst.vertex_id(copy, row)))
            return row;
    return 0;
}

} // namespace

std::vector<AuditViolation> audit_forbidden_pattern(const FamilyInstance& inst, int size_lo,
                                                    int size_hi, std::string_view pattern) {
    inst.validate();
    const Graph g = build_family(inst);
    std::vector<AuditViolation> violations;
    for (int k = std::max(0, size_lo); k <= std::min(size_hi, g.vertex_count()); ++k) {
        for (const VertexSet& s : enumerate_secure_sets(g, k)) {
            const CopyProfile profile = classify_copies(inst, s);
            for (int pos : find_pattern(profile, pattern))
                violations.push_back({inst.n, k, s, std::string(pattern), pos});
        }
    }
    return violations;
}

std::vector<AuditViolation> audit_111111(const FamilyInstance& inst, int size_lo, int size_hi) {
    inst.validate();
    if (inst.family != Family::p3xcn)
        throw ContractError("audit_111111 applies to p3xcn");
    const Graph g = build_family(inst);
    std::vector<AuditViolation> violations;
    for (int k = std::max(0, size_lo); k <= std::min(size_hi, g.vertex_count()); ++k) {
        for (const VertexSet& s : enumerate_secure_sets(g, k)) {
            const CopyProfile profile = classify_copies(inst, s);
            for (int start : find_pattern(profile, "111111")) {
                const int first = start;
                const int fourth = (start - 1 + 3) % inst.n + 1;
                if (type1_row(inst, s, first) != type1_row(inst, s, fourth))
                    violations.push_back({inst.n, k, s, "111111", start});
            }
            if (profile.m_counts[1] == inst.n && inst.n % 3 != 0)
                violations.push_back({inst.n, k, s, "all-type-1", 0});
        }
    }
    return violations;
}

std::vector<AuditViolation> audit_type1_block_lengths(const FamilyInstance& inst, int size) {
    inst.validate();
    const Graph g = build_family(inst);
    std::vector<AuditViolation> violations;
    for (const VertexSet& s : enumerate_secure_sets(g, size)) {
        const CopyProfile profile = classify_copies(inst, s);
        for (const Block& block : find_blocks(profile))
            if (block.kind == BlockKind::type1_block && block.length != 4 && block.length != 5)
                violations.push_back({inst.n, size, s, "type1-block", block.start});
    }
    return violations;
}

} // namespace secdom
