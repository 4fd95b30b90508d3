#pragma once

#include <vector>

#include "twdl/graph.hpp"

namespace twdl {

/// Greedy coloring of a k-tree along its construction order (reverse of the
/// simplicial elimination order): uses exactly k+1 colors, 0..k. Throws
/// std::invalid_argument if g is not a k-tree.
std::vector<int> greedy_color_ktree(const Graph& g, int k);

/// A t-set extracted from a treewidth-<= k graph: the vertices, a witness
/// elimination order of G[S] (width <= t, validated by replay), and the
/// k-tree coloring that produced the set (color per vertex, 0..k; -1 for
/// vertices outside the colored region in the degree-bounded variant).
struct TSetResult {
    std::vector<int> vertices;
    EliminationOrder witness;
    std::vector<int> coloring;
};

/// Union of the t+1 largest color classes (ties: lower color index) of a
/// k-tree coloring of g. Components are completed to k-trees first (cliques
/// when smaller than k+1), so the size is at least (t+1)n/(k+1). Requires
/// 0 <= t <= k and treewidth(g) <= k.
TSetResult extract_tset(const Graph& g, int k, int t);

/// extract_tset applied to the subgraph induced by the degree-<= d vertices;
/// every returned vertex has degree <= d in g. bound_applicable records
/// whether d >= 2k (the size guarantee's domain); extraction runs either way.
struct DegreeTSetResult {
    TSetResult tset;
    bool bound_applicable = true;
};

DegreeTSetResult extract_degree_d_tset(const Graph& g, int k, int t, int d);

} // namespace twdl
