#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "twdl/chordal.hpp"
#include "twdl/generators.hpp"
#include "twdl/graph.hpp"
#include "twdl/ktree.hpp"
#include "twdl/rational.hpp"
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

Graph from_mask(int n, unsigned mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1u) edges.push_back({u, v});
    return build_graph(n, edges);
}

// Chordal means no induced cycle on >= 4 vertices; checked by brute force
// over vertex subsets using adjacency bitmasks.
bool brute_chordal(const Graph& g) {
    int n = g.vertex_count();
    std::vector<unsigned> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 4) continue;
        bool cycle_like = true;
        for (int v = 0; v < n && cycle_like; ++v)
            if (mask >> v & 1u)
                cycle_like = __builtin_popcount(adj[v] & mask) == 2;
        if (!cycle_like) continue;
        // all degrees are 2 inside mask; connected <=> single cycle
        int start = __builtin_ctz(mask);
        unsigned seen = 1u << start;
        std::vector<int> queue = {start};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            unsigned fresh = adj[v] & mask & ~seen;
            while (fresh) {
                int u = __builtin_ctz(fresh);
                fresh &= fresh - 1;
                seen |= 1u << u;
                queue.push_back(u);
            }
        }
        if (seen == mask) return false;
    }
    return true;
}

int brute_treewidth(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        best = std::min(best, elimination_width(g, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

bool valid_peo(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (pos[u] > i) later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

} // namespace

TEST_CASE("rational normalization and accessors") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, 6).num() == -2);
    CHECK(Rational(-4, 6).den() == 3);
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(7, 3).is_integer());
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational(-5, 3).str() == "-5/3");
}

TEST_CASE("rational arithmetic and order") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 2) <= Rational(7, 2));
    CHECK(Rational(10, 3).to_double() == doctest::Approx(10.0 / 3.0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational floor and ceil are sign safe") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6).floor() == 6);
    CHECK(Rational(6).ceil() == 6);
    CHECK(Rational(-6).floor() == -6);
}

TEST_CASE("build_graph validates and deduplicates") {
    Graph g = build_graph(4, {{0, 1}, {1, 0}, {1, 2}, {1, 2}, {2, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("edges are sorted pairs") {
    Graph g = build_graph(4, {{3, 2}, {1, 0}, {2, 0}});
    std::vector<std::pair<int, int>> want = {{0, 1}, {0, 2}, {2, 3}};
    CHECK(g.edges() == want);
}

TEST_CASE("vd_set and degree_profile") {
    Graph g = star(4);
    CHECK(vd_set(g, 1) == std::vector<int>{1, 2, 3, 4});
    CHECK(vd_set(g, 0).empty());
    CHECK(vd_set(g, 4) == std::vector<int>{0, 1, 2, 3, 4});
    DegreeProfile profile = degree_profile(g);
    CHECK(profile.counts.at(1) == 4);
    CHECK(profile.counts.at(4) == 1);
    CHECK(profile.total() == 5);
    CHECK(profile.degree_sum() == 8);
    CHECK_THROWS_AS(vd_set(g, -1), std::invalid_argument);
}

TEST_CASE("induced subgraph keeps ascending id mapping") {
    Graph g = path(5);
    InducedSubgraph sub = induced_subgraph(g, {3, 0, 2});
    CHECK(sub.original_ids == std::vector<int>{0, 2, 3});
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.graph.has_edge(1, 2)); // original 2-3
    CHECK_FALSE(sub.graph.has_edge(0, 1));
}

TEST_CASE("connected components in smallest-vertex order") {
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {4, 5}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3});
    CHECK(comps[2] == std::vector<int>{4, 5});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(path(4)));
    CHECK(is_connected(build_graph(1, {})));
}

TEST_CASE("chordality pins") {
    CHECK_FALSE(is_chordal(cycle(4)).chordal);
    CHECK_FALSE(is_chordal(cycle(6)).chordal);
    CHECK(is_chordal(path(7)).chordal);
    CHECK(is_chordal(complete(5)).chordal);
    CHECK(is_chordal(gen_path_power(9, 2)).chordal);
    Graph c4_chord = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK(is_chordal(c4_chord).chordal);
    CHECK_FALSE(is_chordal(petersen()).chordal);
}

TEST_CASE("chordality matches brute force on all 6-vertex graphs") {
    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
        Graph g = from_mask(6, mask);
        ChordalityResult res = is_chordal(g);
        bool want = brute_chordal(g);
        if (res.chordal != want) {
            CAPTURE(mask);
            REQUIRE(res.chordal == want);
        }
        if (res.chordal) {
            REQUIRE(res.peo.has_value());
            if (!valid_peo(g, res.peo->order)) {
                CAPTURE(mask);
                REQUIRE(false);
            }
        }
    }
}

TEST_CASE("chordality matches brute force on random graphs") {
    for (int n : {7, 8}) {
        for (int i = 0; i < 150; ++i) {
            Graph g = random_graph(n, 20 + i % 50, derive_seed(11, 1, i * 10 + n));
            ChordalityResult res = is_chordal(g);
            CHECK(res.chordal == brute_chordal(g));
            if (res.chordal) CHECK(valid_peo(g, res.peo->order));
        }
    }
}

TEST_CASE("lex_bfs visits every vertex once") {
    Graph g = random_graph(9, 35, 12345);
    std::vector<int> order = lex_bfs(g);
    REQUIRE(order.size() == 9);
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 9; ++i) CHECK(sorted[i] == i);
}

TEST_CASE("clique number and coloring on chordal graphs") {
    Graph g = gen_path_power(9, 2);
    CHECK(max_clique_size(g) == 3);
    CHECK(max_clique_size(complete(5)) == 5);
    CHECK(max_clique_size(path(6)) == 2);
    CHECK(max_clique_size(petersen()) == 2); // branch and bound route

    std::vector<int> colors = chordal_optimal_coloring(g);
    int used = 0;
    for (auto [u, v] : g.edges()) CHECK(colors[u] != colors[v]);
    for (int c : colors) used = std::max(used, c + 1);
    CHECK(used == 3);

    auto cliques = maximal_cliques_chordal(g);
    CHECK(cliques.size() == 7);
    for (const auto& q : cliques) {
        CHECK(q.size() <= 3);
        for (std::size_t a = 0; a < q.size(); ++a)
            for (std::size_t b = a + 1; b < q.size(); ++b) CHECK(g.has_edge(q[a], q[b]));
    }
    CHECK_THROWS_AS(maximal_cliques_chordal(cycle(5)), std::invalid_argument);
}

TEST_CASE("elimination width replay") {
    Graph g = path(4);
    CHECK(elimination_width(g, {0, 1, 2, 3}) == 1);
    CHECK(elimination_width(g, {1, 0, 2, 3}) == 2);
    CHECK(elimination_width(complete(4), {0, 1, 2, 3}) == 3);
}

TEST_CASE("treewidth pins") {
    CHECK(treewidth_exact(path(7)).width == 1);
    CHECK(treewidth_exact(cycle(5)).width == 2);
    CHECK(treewidth_exact(complete(4)).width == 3);
    CHECK(treewidth_exact(build_graph(1, {})).width == 0);
    CHECK(treewidth_exact(build_graph(3, {})).width == 0);
    Graph k23 = build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(treewidth_exact(k23).width == 2);
    CHECK(treewidth_exact(gen_path_power(12, 3)).width == 3);
    CHECK(treewidth_exact(petersen()).width == 4);
    CHECK(treewidth_exact_dp(petersen()).width == 4);
}

TEST_CASE("treewidth witness order is consistent") {
    for (int i = 0; i < 25; ++i) {
        Graph g = random_graph(8, 20 + i * 3, derive_seed(7, 2, i));
        TreewidthResult res = treewidth_exact(g);
        CHECK(elimination_width(g, res.order.order) == res.width);
        CHECK(res.order.width == res.width);
    }
}

TEST_CASE("treewidth agrees with permutation brute force") {
    for (int n : {5, 6, 7}) {
        for (int i = 0; i < 12; ++i) {
            Graph g = random_graph(n, 25 + i * 5, derive_seed(7, 3, n * 100 + i));
            int want = brute_treewidth(g);
            CHECK(treewidth_exact(g).width == want);
            CHECK(treewidth_exact_dp(g).width == want);
            CHECK(has_treewidth_at_most_2(g) == (want <= 2));
        }
    }
}

TEST_CASE("series-parallel recognizer pins") {
    CHECK(has_treewidth_at_most_2(cycle(4)));
    CHECK(has_treewidth_at_most_2(path(9)));
    Graph k23 = build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(has_treewidth_at_most_2(k23));
    CHECK_FALSE(has_treewidth_at_most_2(complete(4)));
    CHECK_FALSE(has_treewidth_at_most_2(petersen()));
}

TEST_CASE("k-tree recognition") {
    Graph g = gen_path_power(9, 2);
    auto order = ktree_elimination_order(g, 2);
    REQUIRE(order.has_value());
    CHECK(order->width == 2);
    CHECK(elimination_width(g, order->order) == 2);
    CHECK_FALSE(ktree_elimination_order(g, 1).has_value());
    CHECK_FALSE(ktree_elimination_order(cycle(4), 2).has_value());
    CHECK(ktree_elimination_order(star(3), 1).has_value());
    CHECK(ktree_elimination_order(complete(4), 3).has_value());
    // clique plus pendant path: treewidth 2 but not a 2-tree
    Graph cp = build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}});
    CHECK_FALSE(ktree_elimination_order(cp, 2).has_value());
}

TEST_CASE("complete_to_ktree pads to a k-tree") {
    Graph g = path(6);
    Graph h = complete_to_ktree(g, 2);
    CHECK(h.vertex_count() == 6);
    auto order = ktree_elimination_order(h, 2);
    REQUIRE(order.has_value());
    for (auto [u, v] : g.edges()) CHECK(h.has_edge(u, v));
    CHECK(h.edge_count() == 2 * 6 - 3);

    Graph already = gen_path_power(8, 3);
    Graph same = complete_to_ktree(already, 3);
    CHECK(same.edges() == already.edges());

    CHECK_THROWS_AS(complete_to_ktree(cycle(5), 1), std::invalid_argument);
    CHECK_THROWS_AS(complete_to_ktree(path(2), 2), std::invalid_argument);
}

TEST_CASE("clique degree floor holds on k-trees and flags violations") {
    for (int k = 1; k <= 3; ++k) {
        Graph g = gen_random_ktree(k, 12, derive_seed(5, 4, k));
        CHECK(check_clique_degree_theorem(g, k).ok);
        CHECK(check_clique_degree_theorem(complete(k + 1), k).ok);
    }
    // the floor is a statement about k-trees; other inputs are rejected
    Graph cp = build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {4, 5}});
    CHECK_THROWS_AS(check_clique_degree_theorem(cp, 2), std::invalid_argument);
}

TEST_CASE("seed derivation is deterministic and stream separated") {
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 3));
    CHECK(derive_seed(2, 2, 3) != derive_seed(1, 2, 3));

    Rng a(99), b(99);
    for (int i = 0; i < 100; ++i) CHECK(a.raw() == b.raw());
    Rng c(7);
    for (int i = 0; i < 200; ++i) {
        CHECK(c.below(10) < 10);
        auto v = c.range(3, 8);
        CHECK(v >= 3);
        CHECK(v <= 8);
    }
}
