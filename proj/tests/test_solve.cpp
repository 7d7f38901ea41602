#include "doctest.h"

#include <algorithm>
#include <random>

#include "secdom/family.hpp"
#include "secdom/graph.hpp"
#include "secdom/solve.hpp"
#include "secdom/verify.hpp"

using namespace secdom;

namespace {

Graph random_graph(int n, int permille, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 1000) < permille)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

} // namespace

TEST_CASE("brute force on the smallest cases") {
    const auto k1 = brute_force_gamma_s(build_path(1));
    REQUIRE(k1.has_value());
    CHECK(k1->optimum == 1);
    CHECK(k1->method == SolveResult::Method::oracle);

    const auto p2p4 = brute_force_gamma_s(build_family({Family::p2xpn, 4}));
    REQUIRE(p2p4.has_value());
    CHECK(p2p4->optimum == 4);
    CHECK(is_secure_dominating(build_family({Family::p2xpn, 4}), p2p4->witness));

    const auto p3c4 = brute_force_gamma_s(build_family({Family::p3xcn, 4}));
    REQUIRE(p3c4.has_value());
    CHECK(p3c4->optimum == 5);
}

TEST_CASE("brute force witness is the lexicographically smallest optimum") {
    const Graph g = build_family({Family::p2xcn, 5});
    const auto result = brute_force_gamma_s(g);
    REQUIRE(result.has_value());
    const auto all = enumerate_secure_sets(g, result->optimum);
    REQUIRE_FALSE(all.empty());
    CHECK(result->witness == all.front());
}

TEST_CASE("brute force reports infeasible at a too-small bound") {
    CHECK_FALSE(brute_force_gamma_s(build_cycle(4), 1).has_value());
    CHECK(brute_force_gamma_s(build_cycle(4), 2).has_value());
}

TEST_CASE("solver on the frozen family values") {
    CHECK(solve_gamma_s(build_family({Family::p2xcn, 8})).optimum == 6);
    CHECK(solve_gamma_s(build_family({Family::m2n, 4})).optimum == 3);
    CHECK(solve_gamma_s(build_family({Family::p3xpn, 4})).optimum == 5);
}

TEST_CASE("solver witness is secure dominating and sized to the optimum") {
    for (const Graph& g : {build_family({Family::p2xpn, 6}), build_family({Family::p3xcn, 4}),
                           build_cycle(9), build_path(10)}) {
        const SolveResult result = solve_gamma_s(g);
        CHECK(result.witness.size() == result.optimum);
        CHECK(is_secure_dominating(g, result.witness));
        CHECK(result.method == SolveResult::Method::branch_and_bound);
    }
}

TEST_CASE("solve_gamma") {
    CHECK(solve_gamma(build_cycle(4)).optimum == 2);
    CHECK(solve_gamma(build_path(1)).optimum == 1);
    const Graph g = build_family({Family::p2xpn, 4});
    const SolveResult gamma = solve_gamma(g);
    CHECK(is_dominating(g, gamma.witness));
    CHECK(gamma.optimum <= 4);
    CHECK(gamma.optimum <= solve_gamma_s(g).optimum);
}

TEST_CASE("gamma is a lower bound for gamma_s") {
    std::mt19937 rng(5u);
    for (int round = 0; round < 30; ++round) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const Graph g = random_graph(n, 200 + static_cast<int>(rng() % 700), rng);
        CHECK(solve_gamma(g).optimum <= solve_gamma_s(g).optimum);
    }
}

TEST_CASE("enumerate_secure_sets") {
    CHECK(enumerate_secure_sets(build_cycle(4), 1).empty());

    const auto p3_pairs = enumerate_secure_sets(build_path(3), 2);
    REQUIRE(p3_pairs.size() == 3);
    CHECK(p3_pairs[0] == VertexSet(3, {0, 1}));
    CHECK(p3_pairs[1] == VertexSet(3, {0, 2}));
    CHECK(p3_pairs[2] == VertexSet(3, {1, 2}));

    const Graph g = build_family({Family::p2xcn, 4});
    const auto full = enumerate_secure_sets(g, g.vertex_count());
    REQUIRE(full.size() == 1);
    CHECK(full[0] == VertexSet::all(g.vertex_count()));

    CHECK_THROWS_AS(enumerate_secure_sets(g, -1), ContractError);
    CHECK_THROWS_AS(enumerate_secure_sets(g, g.vertex_count() + 1), ContractError);
}

TEST_CASE("enumerate finds optimum sets, all secure, in lexicographic order") {
    std::mt19937 rng(17u);
    for (int round = 0; round < 15; ++round) {
        const int n = 3 + static_cast<int>(rng() % 7);
        const Graph g = random_graph(n, 250 + static_cast<int>(rng() % 650), rng);
        const SolveResult best = solve_gamma_s(g);
        const auto sets = enumerate_secure_sets(g, best.optimum);
        REQUIRE_FALSE(sets.empty());
        for (size_t i = 0; i < sets.size(); ++i) {
            CHECK(is_secure_dominating(g, sets[i]));
            if (i > 0) {
                const auto& a = sets[i - 1].members();
                const auto& b = sets[i].members();
                CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
            }
        }
    }
}

TEST_CASE("oracle and optimizer agree on small instances") {
    std::mt19937 rng(29u);
    std::vector<Graph> corpus;
    for (int n = 2; n <= 6; ++n)
        corpus.push_back(build_family({Family::p2xpn, n}));
    for (int n = 3; n <= 6; ++n) {
        corpus.push_back(build_family({Family::p2xcn, n}));
        corpus.push_back(build_family({Family::m2n, n}));
    }
    for (int n = 2; n <= 4; ++n)
        corpus.push_back(build_family({Family::p3xpn, n}));
    corpus.push_back(build_family({Family::p3xcn, 3}));
    corpus.push_back(build_family({Family::p3xcn, 4}));
    for (int round = 0; round < 20; ++round)
        corpus.push_back(random_graph(3 + static_cast<int>(rng() % 8),
                                      150 + static_cast<int>(rng() % 750), rng));
    for (const Graph& g : corpus) {
        const auto oracle = brute_force_gamma_s(g);
        REQUIRE(oracle.has_value());
        CHECK(solve_gamma_s(g).optimum == oracle->optimum);
    }
}

TEST_CASE("results are identical for every thread count") {
    const Graph graphs[] = {build_family({Family::p2xcn, 10}), build_family({Family::p3xcn, 5}),
                            build_family({Family::m2n, 8})};
    for (const Graph& g : graphs) {
        const SolveResult sequential = solve_gamma_s(g, {.threads = 1});
        for (int threads : {2, 4, 7}) {
            const SolveResult parallel = solve_gamma_s(g, {.threads = threads});
            CHECK(parallel.optimum == sequential.optimum);
            CHECK(parallel.witness == sequential.witness);
            CHECK(parallel.nodes_explored == sequential.nodes_explored);
        }
        const auto seq_sets = enumerate_secure_sets(g, sequential.optimum + 1, {.threads = 1});
        const auto par_sets = enumerate_secure_sets(g, sequential.optimum + 1, {.threads = 4});
        CHECK(seq_sets == par_sets);
    }
}

TEST_CASE("solver contract errors") {
    CHECK_THROWS_AS(solve_gamma_s(Graph()), ContractError);
    CHECK_THROWS_AS(brute_force_gamma_s(Graph()), ContractError);
}
