#include "secdom/verify.hpp"

#include <algorithm>

namespace secdom {

namespace {

void check_universe(const Graph& g, const VertexSet& s) {
    if (s.universe_size() != g.vertex_count())
        throw ContractError("set universe does not match the graph");
}

void check_swap_contract(const VertexSet& s, int w, int v) {
    if (v < 0 || v >= s.universe_size() || w < 0 || w >= s.universe_size())
        throw ContractError("vertex id out of range");
    if (s.contains(v))
        throw ContractError("attacked vertex must be outside the set");
    if (!s.contains(w))
        throw ContractError("guard must be a member of the set");
}

} // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    std::vector<char> in_set(g.vertex_count(), 0);
    for (int v : s.members())
        in_set[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_set[v])
            continue;
        bool covered = false;
        for (int w : g.neighbors(v))
            if (in_set[w]) {
                covered = true;
                break;
            }
        if (!covered)
            return false;
    }
    return true;
}

bool guards(const Graph& g, const VertexSet& s, int w, int v) {
    check_universe(g, s);
    check_swap_contract(s, w, v);
    if (!g.has_edge(w, v))
        return false;
    std::vector<int> swapped;
    swapped.reserve(s.size());
    for (int x : s.members())
        if (x != w)
            swapped.push_back(x);
    swapped.push_back(v);
    return is_dominating(g, VertexSet(s.universe_size(), std::move(swapped)));
}

SwapVerifier::SwapVerifier(const Graph& g, const VertexSet& s)
    : g_(g), in_set_(g.vertex_count(), 0), cover_count_(g.vertex_count(), 0) {
    check_universe(g, s);
    for (int v : s.members())
        in_set_[v] = 1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        int count = in_set_[u];
        for (int x : g.neighbors(u))
            count += in_set_[x];
        cover_count_[u] = count;
        if (count == 0)
            undominated_.push_back(u);
    }
}

bool SwapVerifier::guards(int w, int v) const {
    if (v < 0 || v >= g_.vertex_count() || w < 0 || w >= g_.vertex_count())
        throw ContractError("vertex id out of range");
    if (in_set_[v])
        throw ContractError("attacked vertex must be outside the set");
    if (!in_set_[w])
        throw ContractError("guard must be a member of the set");
    if (!g_.has_edge(w, v))
        return false;
    auto covered_by_v = [&](int u) { return u == v || g_.has_edge(u, v); };
    // Vertices s never dominated must be picked up by v.
    for (int u : undominated_)
        if (!covered_by_v(u))
            return false;
    // Vertices losing w as their sole dominator must be picked up by v.
    if (cover_count_[w] == 1 && !covered_by_v(w))
        return false;
    for (int u : g_.neighbors(w))
        if (cover_count_[u] == 1 && !covered_by_v(u))
            return false;
    return true;
}

bool is_secure_dominating(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    SwapVerifier verifier(g, s);
    std::vector<char> in_set(g.vertex_count(), 0);
    for (int v : s.members())
        in_set[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_set[v])
            continue;
        bool guarded = false;
        for (int w : g.neighbors(v))
            if (in_set[w] && verifier.guards(w, v)) {
                guarded = true;
                break;
            }
        if (!guarded)
            return false;
    }
    return true;
}

bool is_secure_dominating_naive(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.contains(v))
            continue;
        bool guarded = false;
        for (int w : g.neighbors(v))
            if (s.contains(w) && guards(g, s, w, v)) {
                guarded = true;
                break;
            }
        if (!guarded)
            return false;
    }
    return true;
}

CertificateResult certificate(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    SwapVerifier verifier(g, s);
    GuardCertificate cert;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.contains(v))
            continue;
        int guard = -1;
        for (int w : g.neighbors(v)) // sorted, so the first hit is the lowest id
            if (s.contains(w) && verifier.guards(w, v)) {
                guard = w;
                break;
            }
        if (guard < 0)
            return {std::nullopt, v};
        cert.assignments.emplace_back(v, guard);
    }
    return {std::move(cert), -1};
}

} // namespace secdom
