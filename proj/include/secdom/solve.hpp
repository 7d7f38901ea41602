#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "secdom/graph.hpp"
#include "secdom/vertex_set.hpp"

namespace secdom {

struct SolveResult {
    enum class Method { oracle, branch_and_bound };

    int optimum = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    Method method = Method::branch_and_bound;
};

struct SolveOptions {
    /// Worker threads for subtree fan-out. 0 means: use SECDOM_THREADS if set,
    /// else run sequentially. Results are identical for every thread count.
    int threads = 0;
};

/// Exact gamma_s by plain lexicographic subset enumeration with the
/// definitional security check; the small-case oracle. Sizes run from the
/// trivial lower bound up to max_size (default |V|); returns nullopt when
/// max_size is exhausted without a secure dominating set.
std::optional<SolveResult> brute_force_gamma_s(const Graph& g, std::optional<int> max_size = {});

/// Exact gamma_s by iterative deepening over set sizes, searching
/// include/exclude vertex decisions (descending degree, ties by id) with
/// cardinality, undominatable-vertex, and gamma(G) pruning.
SolveResult solve_gamma_s(const Graph& g, const SolveOptions& options = {});

/// Exact gamma(G), same search machinery with the plain domination predicate.
SolveResult solve_gamma(const Graph& g, const SolveOptions& options = {});

/// All size-k secure dominating sets in lexicographic order.
std::vector<VertexSet> enumerate_secure_sets(const Graph& g, int k, const SolveOptions& options = {});

} // namespace secdom
