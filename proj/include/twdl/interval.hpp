#pragma once

#include <vector>

#include "twdl/graph.hpp"

namespace twdl {

/// Closed intervals on the line, one per vertex id. All 2n endpoints are
/// pairwise distinct (validated), so intersection tests are exact; models
/// produced here use half-integer grids, which doubles represent exactly.
struct IntervalModel {
    struct Interval {
        double lo = 0;
        double hi = 0;
    };
    std::vector<Interval> intervals;

    int size() const { return static_cast<int>(intervals.size()); }
};

/// Validates lo < hi per interval and global endpoint distinctness.
IntervalModel make_interval_model(const std::vector<std::pair<double, double>>& ivs);

/// Intersection graph of the model (closed intervals).
Graph intersection_graph(const IntervalModel& m);

/// Max number of pairwise intersecting intervals (= omega of the graph).
int clique_number_interval(const IntervalModel& m);

/// A(y): intervals x with L(x) < L(y) < R(x); B(y): intervals x with
/// L(x) < R(y) < R(x). Both exclude y itself and are sorted by id.
std::vector<int> set_A(const IntervalModel& m, int y);
std::vector<int> set_B(const IntervalModel& m, int y);

/// For a vertex v of degree >= 2k+1 in a model with clique number <= k+1,
/// returns a neighbor of v whose interval is dominated by (strictly inside)
/// v's interval, choosing the shortest such interval (ties: lowest id).
/// Throws std::logic_error if none exists (cannot happen under the pre).
int find_dominated_low_degree(const IntervalModel& m, int v, int k);

/// Maximum independent set by the earliest-right-endpoint greedy; exact for
/// interval graphs. Sorted by id.
std::vector<int> interval_max_independent_set(const IntervalModel& m);

/// Maximum independent set in which every member has degree <= 2k in the
/// intersection graph; k+1 must be at least the clique number (throws
/// std::invalid_argument otherwise). Starts from the greedy MIS and swaps
/// over-degree members for dominated low-degree neighbors; independence is
/// re-checked after every swap.
std::vector<int> interval_bounded_degree_mis(const IntervalModel& m, int k);

} // namespace twdl
