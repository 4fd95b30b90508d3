#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "twdl/generators.hpp"
#include "twdl/graph.hpp"
#include "twdl/interval.hpp"
#include "twdl/oracles.hpp"
#include "twdl/rng.hpp"

using namespace twdl;

namespace {

bool is_independent(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) return false;
    return true;
}

} // namespace

TEST_CASE("interval model validation") {
    IntervalModel m = make_interval_model({{1.0, 2.0}, {3.0, 4.0}});
    CHECK(m.size() == 2);
    CHECK_THROWS_AS(make_interval_model({{2.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_interval_model({{1.0, 1.0}}), std::invalid_argument);
    // endpoint collision across intervals
    CHECK_THROWS_AS(make_interval_model({{1.0, 2.0}, {2.0, 3.0}}), std::invalid_argument);
}

TEST_CASE("intersection graph of a hand model") {
    IntervalModel m = make_interval_model({{1.0, 4.0}, {2.0, 6.0}, {3.0, 3.5}, {5.0, 7.0}});
    Graph g = intersection_graph(m);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(1, 3));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK(clique_number_interval(m) == 3);
}

TEST_CASE("endpoint membership sets A and B") {
    IntervalModel m = make_interval_model({{1.0, 4.0}, {2.0, 6.0}, {3.0, 3.5}, {5.0, 7.0}});
    CHECK(set_A(m, 0).empty());
    CHECK(set_A(m, 1) == std::vector<int>{0});
    CHECK(set_A(m, 2) == std::vector<int>{0, 1});
    CHECK(set_A(m, 3) == std::vector<int>{1});
    CHECK(set_B(m, 0) == std::vector<int>{1});
    CHECK(set_B(m, 1) == std::vector<int>{3});
    CHECK(set_B(m, 2) == std::vector<int>{0, 1});
    CHECK(set_B(m, 3).empty());
}

TEST_CASE("A and B are cliques capped by the clique number") {
    for (int k = 1; k <= 3; ++k) {
        for (int rep = 0; rep < 10; ++rep) {
            IntervalModel m = gen_interval_random(10, k, derive_seed(71, 1, k * 100 + rep));
            Graph g = intersection_graph(m);
            int omega = clique_number_interval(m);
            for (int y = 0; y < m.size(); ++y) {
                for (const std::vector<int>& side : {set_A(m, y), set_B(m, y)}) {
                    CHECK(static_cast<int>(side.size()) <= omega - 1);
                    for (std::size_t a = 0; a < side.size(); ++a) {
                        CHECK(g.has_edge(side[a], y));
                        for (std::size_t b = a + 1; b < side.size(); ++b)
                            CHECK(g.has_edge(side[a], side[b]));
                    }
                }
            }
        }
    }
}

TEST_CASE("dominated neighbor lookup") {
    // interval 0 spans three short intervals; k=1 makes its degree 3 = 2k+1
    IntervalModel m =
        make_interval_model({{0.0, 10.0}, {1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0}});
    CHECK(intersection_graph(m).degree(0) == 3);
    CHECK(find_dominated_low_degree(m, 0, 1) == 1); // shortest tie -> lowest id

    IntervalModel tie =
        make_interval_model({{0.0, 10.0}, {1.0, 3.0}, {4.0, 5.0}, {6.0, 9.0}});
    CHECK(find_dominated_low_degree(tie, 0, 1) == 2); // unique shortest
}

TEST_CASE("greedy interval MIS is exact") {
    for (int k = 1; k <= 3; ++k) {
        for (int rep = 0; rep < 25; ++rep) {
            int n = 4 + rep % 11;
            IntervalModel m = gen_interval_random(n, k, derive_seed(71, 2, k * 100 + rep));
            Graph g = intersection_graph(m);
            std::vector<int> mis = interval_max_independent_set(m);
            CHECK(static_cast<long long>(mis.size()) == oracle_alpha(g).value);
            CHECK(is_independent(g, mis));
            CHECK(std::is_sorted(mis.begin(), mis.end()));
        }
    }
}

TEST_CASE("bounded-degree interval MIS keeps the size and caps degrees") {
    for (int k = 1; k <= 3; ++k) {
        for (int rep = 0; rep < 25; ++rep) {
            int n = 4 + rep % 14;
            IntervalModel m = gen_interval_random(n, k, derive_seed(71, 3, k * 1000 + rep));
            Graph g = intersection_graph(m);
            std::vector<int> mis = interval_bounded_degree_mis(m, k);
            CHECK(static_cast<long long>(mis.size()) == oracle_alpha(g).value);
            CHECK(is_independent(g, mis));
            for (int v : mis) CHECK(g.degree(v) <= 2 * k);
        }
    }
}

TEST_CASE("bounded-degree MIS needs the clique precondition") {
    IntervalModel m = gen_interval_path_power(9, 2); // clique number 3
    CHECK_THROWS_AS(interval_bounded_degree_mis(m, 1), std::invalid_argument);
}

TEST_CASE("path power models show the degree bound is tight") {
    for (int k = 1; k <= 3; ++k) {
        for (int n : {3 * (k + 1), 14}) {
            IntervalModel m = gen_interval_path_power(n, k);
            Graph g = intersection_graph(m);
            CHECK(static_cast<int>(vd_set(g, 2 * k - 1).size()) == 2 * k);
            CHECK(oracle_alpha_d_t(g, 2 * k - 1, 0).value == 2);
            CHECK(oracle_alpha(g).value > 2);
            std::vector<int> mis = interval_bounded_degree_mis(m, k);
            CHECK(static_cast<long long>(mis.size()) == oracle_alpha(g).value);
            for (int v : mis) CHECK(g.degree(v) <= 2 * k);
        }
    }
}
