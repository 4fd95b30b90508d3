#pragma once

#include <vector>

#include "twdl/graph.hpp"

namespace twdl {

/// Width of an elimination order: simulate elimination with fill-in and
/// return the maximum back-degree. order must be a permutation of 0..n-1.
int elimination_width(const Graph& g, const std::vector<int>& order);

/// Exact treewidth with a witness order. Chordal inputs resolve through a
/// perfect elimination ordering at any size; otherwise a subset dynamic
/// program over elimination prefixes is used and n <= 18 is required
/// (std::invalid_argument beyond that).
struct TreewidthResult {
    int width = 0;
    EliminationOrder order;
};

TreewidthResult treewidth_exact(const Graph& g);

/// Subset DP entry point without the chordal shortcut; used by tests to
/// cross-check the two routes. Requires n <= 18.
TreewidthResult treewidth_exact_dp(const Graph& g);

/// Treewidth <= 2 test by series-parallel reduction (delete degree <= 1,
/// smooth degree 2); works at any size.
bool has_treewidth_at_most_2(const Graph& g);

} // namespace twdl
