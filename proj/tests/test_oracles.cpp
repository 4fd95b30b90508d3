#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "twdl/generators.hpp"
#include "twdl/graph.hpp"
#include "twdl/oracles.hpp"
#include "twdl/rng.hpp"
#include "twdl/treewidth.hpp"

using namespace twdl;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return build_graph(n, edges);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return build_graph(n, edges);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return build_graph(n, edges);
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return build_graph(leaves + 1, edges);
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, 5 + (i + 2) % 5});
    }
    return build_graph(10, edges);
}

Graph random_graph(int n, int percent, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < static_cast<std::uint64_t>(percent)) edges.push_back({u, v});
    return build_graph(n, edges);
}

long long brute_alpha(const Graph& g) {
    int n = g.vertex_count();
    std::vector<unsigned> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    long long best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool indep = true;
        for (int v = 0; v < n && indep; ++v)
            if (mask >> v & 1u) indep = (adj[v] & mask) == 0;
        if (indep) best = std::max<long long>(best, __builtin_popcount(mask));
    }
    return best;
}

long long brute_alpha_t(const Graph& g, int t) {
    int n = g.vertex_count();
    long long best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) verts.push_back(v);
        InducedSubgraph sub = induced_subgraph(g, verts);
        if (treewidth_exact_dp(sub.graph).width <= t) best = size;
    }
    return best;
}

long long brute_alpha_d_t(const Graph& g, int d, int t) {
    InducedSubgraph sub = induced_subgraph(g, vd_set(g, d));
    return brute_alpha_t(sub.graph, t);
}

bool is_independent(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) return false;
    return true;
}

} // namespace

TEST_CASE("alpha pins") {
    CHECK(oracle_alpha(path(10)).value == 5);
    CHECK(oracle_alpha(cycle(5)).value == 2);
    CHECK(oracle_alpha(complete(6)).value == 1);
    CHECK(oracle_alpha(petersen()).value == 4);
    CHECK(oracle_alpha(gen_path_power(10, 2)).value == 4);
    CHECK(oracle_alpha(star(5)).value == 5);
    CHECK(oracle_alpha(build_graph(3, {})).value == 3);
}

TEST_CASE("alpha witness is a maximum independent set") {
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(10 + i % 5, 20 + (i * 7) % 55, derive_seed(51, 1, i));
        OracleResult res = oracle_alpha(g);
        CHECK(res.value == brute_alpha(g));
        CHECK(static_cast<long long>(res.witness.size()) == res.value);
        CHECK(is_independent(g, res.witness));
        CHECK(std::is_sorted(res.witness.begin(), res.witness.end()));
        CHECK(res.explored > 0);
    }
}

TEST_CASE("alpha rejects oversized inputs") {
    CHECK_THROWS_AS(oracle_alpha(build_graph(41, {})), std::invalid_argument);
    CHECK(oracle_alpha(build_graph(40, {})).value == 40);
}

TEST_CASE("alpha_t pins on path powers") {
    Graph g = gen_path_power(9, 2);
    CHECK(oracle_alpha_t(g, 0).value == 3);
    CHECK(oracle_alpha_t(g, 1).value == 6);
    CHECK(oracle_alpha_t(g, 2).value == 9);
    CHECK(oracle_alpha_t(gen_path_power(12, 3), 1).value == 6);
    CHECK(oracle_alpha_t(cycle(5), 1).value == 4);
    CHECK(oracle_alpha_t(complete(6), 2).value == 3);
    CHECK(oracle_alpha_t(build_graph(4, {}), 0).value == 4);
}

TEST_CASE("alpha_t shortcut handles large easy components") {
    // 30 connected vertices: the coloring witness meets the upper bound, so
    // no subset enumeration is needed despite the component exceeding 18.
    Graph g = gen_path_power(30, 2);
    CHECK(oracle_alpha_t(g, 1).value == 20);
    CHECK(oracle_alpha_t(g, 2).value == 30);
}

TEST_CASE("alpha_t agrees with subset brute force") {
    for (int n : {6, 7, 8, 9}) {
        for (int i = 0; i < 8; ++i) {
            Graph g = random_graph(n, 25 + i * 8, derive_seed(51, 2, n * 100 + i));
            for (int t = 0; t <= 2; ++t) {
                OracleResult res = oracle_alpha_t(g, t);
                CHECK(res.value == brute_alpha_t(g, t));
                REQUIRE(static_cast<long long>(res.witness.size()) == res.value);
                InducedSubgraph sub = induced_subgraph(g, res.witness);
                CHECK(treewidth_exact(sub.graph).width <= t);
            }
        }
    }
}

TEST_CASE("alpha_d_t pins") {
    CHECK(oracle_alpha_d_t(star(5), 2, 0).value == 5);
    CHECK(oracle_alpha_d_t(path(5), 1, 0).value == 2);

    Graph spider = gen_subdivided_regular_tree(2, regular_tree_from_internal(2, {}));
    CHECK(oracle_alpha_d_t(spider, 2, 0).value == 3);

    Graph g = gen_path_power(9, 2);
    CHECK(oracle_alpha_d_t(g, 3, 0).value == 2); // degree <= 3 survivors: both ends
    CHECK(oracle_alpha_d_t(g, 3, 1).value == 4);
    CHECK(oracle_alpha_d_t(g, 4, 0).value == oracle_alpha(g).value);
}

TEST_CASE("alpha_d_t witness respects the degree cap in the host graph") {
    for (int i = 0; i < 25; ++i) {
        Graph g = random_graph(9, 30 + i * 2, derive_seed(51, 3, i));
        for (int d = 1; d <= 4; ++d) {
            for (int t = 0; t <= 2; ++t) {
                OracleResult res = oracle_alpha_d_t(g, d, t);
                CHECK(res.value == brute_alpha_d_t(g, d, t));
                for (int v : res.witness) CHECK(g.degree(v) <= d);
                InducedSubgraph sub = induced_subgraph(g, res.witness);
                CHECK(treewidth_exact(sub.graph).width <= (res.witness.empty() ? 0 : t));
            }
        }
    }
}

TEST_CASE("t range is validated") {
    CHECK_THROWS_AS(oracle_alpha_t(path(4), -1), std::invalid_argument);
}
