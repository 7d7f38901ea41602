#include "secdom/solve.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

namespace secdom {

namespace {

int resolve_threads(const SolveOptions& options) {
    long t = options.threads;
    if (t == 0) {
        if (const char* env = std::getenv("SECDOM_THREADS")) {
            char* end = nullptr;
            long parsed = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && parsed > 0)
                t = parsed;
        }
    }
    return static_cast<int>(std::clamp(t, 1L, 64L));
}

struct MaskGraph {
    int n;
    std::uint64_t all;
    std::vector<std::uint64_t> closed, open;
    int max_closed;

    explicit MaskGraph(const Graph& g) : n(g.vertex_count()) {
        if (n == 0)
            throw ContractError("solver needs a nonempty graph");
        if (n > 64)
            throw ContractError("exact solver supports at most 64 vertices");
        all = n == 64 ? ~0ull : (1ull << n) - 1;
        closed.resize(n);
        open.resize(n);
        max_closed = 1;
        for (int v = 0; v < n; ++v) {
            std::uint64_t m = 0;
            for (int u : g.neighbors(v))
                m |= 1ull << u;
            open[v] = m;
            closed[v] = m | (1ull << v);
            max_closed = std::max(max_closed, std::popcount(closed[v]));
        }
    }
};

// Security check for a dominating s: an outside vertex v is guarded by a
// neighbor w in s iff every vertex whose sole dominator is w lies in N[v].
bool mask_secure(const MaskGraph& mg, std::uint64_t s) {
    std::uint64_t sole = 0;
    for (int u = 0; u < mg.n; ++u)
        if (std::popcount(mg.closed[u] & s) == 1)
            sole |= 1ull << u;
    std::uint64_t outside = mg.all & ~s;
    while (outside) {
        const int v = std::countr_zero(outside);
        outside &= outside - 1;
        std::uint64_t candidates = mg.open[v] & s;
        bool guarded = false;
        while (candidates) {
            const int w = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if ((mg.closed[w] & sole & ~mg.closed[v]) == 0) {
                guarded = true;
                break;
            }
        }
        if (!guarded)
            return false;
    }
    return true;
}

// Definitional check kept for the oracle: the swapped set's domination is
// re-verified from scratch against the adjacency lists.
bool oracle_dominating(const Graph& g, std::uint64_t s) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (s >> u & 1)
            continue;
        bool covered = false;
        for (int x : g.neighbors(u))
            if (s >> x & 1) {
                covered = true;
                break;
            }
        if (!covered)
            return false;
    }
    return true;
}

bool oracle_secure(const Graph& g, std::uint64_t s) {
    if (!oracle_dominating(g, s))
        return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s >> v & 1)
            continue;
        bool guarded = false;
        for (int w : g.neighbors(v)) {
            if (!(s >> w & 1))
                continue;
            const std::uint64_t swapped = (s & ~(1ull << w)) | (1ull << v);
            if (oracle_dominating(g, swapped)) {
                guarded = true;
                break;
            }
        }
        if (!guarded)
            return false;
    }
    return true;
}

struct Node {
    std::uint64_t s, x, undom;
    int size;
};

struct WorkItem {
    bool is_solution;
    std::uint64_t solution;
    Node node;
};

struct SubtreeOutcome {
    std::vector<std::uint64_t> solutions;
    std::uint64_t nodes = 0;
    bool aborted = false;
};

// Exhaustive search for secure (or plain) dominating sets of size exactly k
// over include/exclude decisions in a fixed vertex order. The DFS prefix tree
// is split at a fixed depth into work items processed in canonical order, so
// solutions, and the node count attributed to the search, are identical for
// every worker count: a task may only be abandoned when an earlier-ordered
// task already holds a solution, and only tasks up to the winner are counted.
class LevelSearch {
public:
    LevelSearch(const MaskGraph& mg, const std::vector<int>& order, int k, bool secure_goal)
        : mg_(mg), order_(order), k_(k), secure_(secure_goal) {}

    std::vector<std::uint64_t> run(int threads, bool first_only, std::uint64_t& nodes_accum) {
        const int limit = std::min(kFrontierDepth, mg_.n);
        std::uint64_t expand_nodes = 0;
        expand(Node{0, 0, mg_.all, 0}, 0, limit, first_only, expand_nodes);

        std::vector<SubtreeOutcome> outcomes(items_.size());
        std::atomic<size_t> next{0};
        std::atomic<size_t> winner{std::numeric_limits<size_t>::max()};
        auto work = [&]() {
            for (;;) {
                const size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= items_.size())
                    return;
                if (first_only && winner.load(std::memory_order_relaxed) < i) {
                    outcomes[i].aborted = true;
                    continue;
                }
                const WorkItem& item = items_[i];
                if (item.is_solution)
                    outcomes[i].solutions.push_back(item.solution);
                else
                    dfs(item.node, limit, first_only, outcomes[i], first_only ? &winner : nullptr, i);
                if (first_only && !outcomes[i].aborted && !outcomes[i].solutions.empty()) {
                    size_t cur = winner.load(std::memory_order_relaxed);
                    while (i < cur && !winner.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        };

        const int workers = static_cast<int>(std::min<size_t>(threads, items_.size()));
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int t = 0; t < workers; ++t)
                pool.emplace_back(work);
            for (auto& th : pool)
                th.join();
        }

        nodes_accum += expand_nodes;
        std::vector<std::uint64_t> solutions;
        if (first_only) {
            size_t win = std::numeric_limits<size_t>::max();
            for (size_t i = 0; i < outcomes.size(); ++i)
                if (!outcomes[i].aborted && !outcomes[i].solutions.empty()) {
                    win = i;
                    break;
                }
            for (size_t i = 0; i < outcomes.size() && i <= win; ++i)
                nodes_accum += outcomes[i].nodes;
            if (win != std::numeric_limits<size_t>::max())
                solutions.push_back(outcomes[win].solutions.front());
        } else {
            for (auto& outcome : outcomes) {
                nodes_accum += outcome.nodes;
                solutions.insert(solutions.end(), outcome.solutions.begin(), outcome.solutions.end());
            }
        }
        return solutions;
    }

private:
    static constexpr int kFrontierDepth = 12;

    // Pre-order walk down to `limit`, emitting subtree roots and shallow
    // solutions in canonical order. Returns true to stop (first_only).
    bool expand(Node nd, int pos, int limit, bool first_only, std::uint64_t& nodes) {
        if (pos == limit) {
            items_.push_back({false, 0, nd});
            return false;
        }
        ++nodes;
        const int r = k_ - nd.size;
        if (r == 0) {
            if (nd.undom == 0 && (!secure_ || mask_secure(mg_, nd.s))) {
                items_.push_back({true, nd.s, {}});
                return first_only;
            }
            return false;
        }
        if (pos == mg_.n || r > mg_.n - pos)
            return false;
        if (std::popcount(nd.undom) > r * mg_.max_closed)
            return false;
        const int x = order_[pos];
        const std::uint64_t bit = 1ull << x;
        if (expand(Node{nd.s | bit, nd.x, nd.undom & ~mg_.closed[x], nd.size + 1}, pos + 1, limit,
                   first_only, nodes))
            return true;
        const Node excl{nd.s, nd.x | bit, nd.undom, nd.size};
        return !exclude_dead(excl, x) && expand(excl, pos + 1, limit, first_only, nodes);
    }

    bool dfs(const Node& nd, int pos, bool first_only, SubtreeOutcome& out,
             const std::atomic<size_t>* winner, size_t my_index) const {
        ++out.nodes;
        if ((out.nodes & 0x3fff) == 0 && winner &&
            winner->load(std::memory_order_relaxed) < my_index) {
            out.aborted = true;
            return true;
        }
        const int r = k_ - nd.size;
        if (r == 0) {
            if (nd.undom == 0 && (!secure_ || mask_secure(mg_, nd.s))) {
                out.solutions.push_back(nd.s);
                return first_only;
            }
            return false;
        }
        if (pos == mg_.n || r > mg_.n - pos)
            return false;
        if (std::popcount(nd.undom) > r * mg_.max_closed)
            return false;
        const int x = order_[pos];
        const std::uint64_t bit = 1ull << x;
        if (dfs(Node{nd.s | bit, nd.x, nd.undom & ~mg_.closed[x], nd.size + 1}, pos + 1, first_only,
                out, winner, my_index))
            return true;
        const Node excl{nd.s, nd.x | bit, nd.undom, nd.size};
        return !exclude_dead(excl, x) &&
               dfs(excl, pos + 1, first_only, out, winner, my_index);
    }

    // Excluding x kills the branch when some undominated vertex in N[x] has
    // no remaining potential dominator.
    bool exclude_dead(const Node& excl, int x) const {
        std::uint64_t doomed = mg_.closed[x] & excl.undom;
        const std::uint64_t avail = mg_.all & ~excl.x;
        while (doomed) {
            const int u = std::countr_zero(doomed);
            doomed &= doomed - 1;
            if ((mg_.closed[u] & avail) == 0)
                return true;
        }
        return false;
    }

    const MaskGraph& mg_;
    const std::vector<int>& order_;
    int k_;
    bool secure_;
    std::vector<WorkItem> items_;
};

VertexSet mask_to_set(std::uint64_t mask, int universe) {
    std::vector<int> ids;
    ids.reserve(std::popcount(mask));
    while (mask) {
        ids.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return VertexSet(universe, std::move(ids));
}

std::vector<int> identity_order(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

std::vector<int> degree_order(const Graph& g) {
    auto order = identity_order(g.vertex_count());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b))
            return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

int trivial_lower_bound(int n, int max_closed) { return (n + max_closed - 1) / max_closed; }

SolveResult solve_with_goal(const Graph& g, bool secure_goal, int start_k,
                            const SolveOptions& options, std::uint64_t nodes_seed) {
    const MaskGraph mg(g);
    const auto order = degree_order(g);
    const int threads = resolve_threads(options);
    std::uint64_t nodes = nodes_seed;
    const int lo = std::max(start_k, trivial_lower_bound(mg.n, mg.max_closed));
    for (int k = lo; k <= mg.n; ++k) {
        LevelSearch search(mg, order, k, secure_goal);
        const auto found = search.run(threads, true, nodes);
        if (!found.empty())
            return {k, mask_to_set(found.front(), mg.n), nodes,
                    SolveResult::Method::branch_and_bound};
    }
    throw ContractError("unreachable: the full vertex set is secure dominating");
}

} // namespace

std::optional<SolveResult> brute_force_gamma_s(const Graph& g, std::optional<int> max_size) {
    const int n = g.vertex_count();
    if (n == 0)
        throw ContractError("solver needs a nonempty graph");
    if (n > 64)
        throw ContractError("exact solver supports at most 64 vertices");
    const int lo = trivial_lower_bound(n, g.max_degree() + 1);
    const int hi = std::min(max_size.value_or(n), n);
    std::uint64_t examined = 0;
    for (int k = lo; k <= hi; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            ++examined;
            std::uint64_t mask = 0;
            for (int v : idx)
                mask |= 1ull << v;
            if (oracle_secure(g, mask))
                return SolveResult{k, VertexSet(n, idx), examined, SolveResult::Method::oracle};
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

SolveResult solve_gamma(const Graph& g, const SolveOptions& options) {
    return solve_with_goal(g, false, 1, options, 0);
}

SolveResult solve_gamma_s(const Graph& g, const SolveOptions& options) {
    const SolveResult gamma = solve_gamma(g, options);
    return solve_with_goal(g, true, gamma.optimum, options, gamma.nodes_explored);
}

std::vector<VertexSet> enumerate_secure_sets(const Graph& g, int k, const SolveOptions& options) {
    const int n = g.vertex_count();
    if (k < 0 || k > n)
        throw ContractError("set size outside 0..|V|");
    if (n == 0)
        return {VertexSet(0, {})};
    const MaskGraph mg(g);
    const auto order = identity_order(n);
    LevelSearch search(mg, order, k, true);
    std::uint64_t nodes = 0;
    const auto masks = search.run(resolve_threads(options), false, nodes);
    std::vector<VertexSet> out;
    out.reserve(masks.size());
    for (std::uint64_t mask : masks)
        out.push_back(mask_to_set(mask, n));
    return out;
}

} // namespace secdom
