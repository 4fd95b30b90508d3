#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twdl/graph.hpp"
#include "twdl/interval.hpp"

namespace twdl {

/// k-th power of the n-vertex path: vertices 0..n-1, edge iff |i-j| <= k.
Graph gen_path_power(int n, int k);

/// Path power P^k_{(s+2)k} with r = d-2k+1 extra vertices attached onto each
/// of s disjoint interior k-cliques {ik..ik+k-1}, i = 1..s. Every attached
/// clique's vertices reach degree d+1; exactly rs+2k vertices keep degree
/// <= d. Requires k >= 1, d >= 2k-1, s >= 0.
Graph gen_kset_extremal(int k, int d, int s);

/// Block parameters for gen_block_ktree; callers usually need n and r.
struct BlockParams {
    int r = 0;
    int n = 0;
    int block_positions = 0;
};

BlockParams block_ktree_params(int k, int d, int n0);

/// Path power P^k_{n0} with r = 2(d-2k+1)/(k(k+1)) blocks of k+1 vertices
/// attached at each window (v_i..v_{i+k-1}), i = 3..n0-k-1 (1-based), as in
/// the matching upper-bound construction: middle path vertices end at degree
/// exactly d+1. Throws std::invalid_argument("no construction for this d")
/// when 2(d-2k+1) is not a positive multiple of k(k+1). Requires n0 >= 2k+3.
Graph gen_block_ktree(int k, int d, int n0);

/// Outerplanar bound-matching construction: P^2_{n0} plus r = (d-4)/2
/// pendant triangles per interior vertex plus two extra vertices; interior
/// path vertices end at degree exactly d+1. Requires even d >= 6, n0 >= 6.
Graph gen_outerplanar_extremal(int d, int n0);

/// A (d+1)-regular tree (every degree 1 or d+1) from an internal-tree parent
/// array: internal vertex i+1 hangs off parents[i] (0 <= parents[i] <= i);
/// leaves are appended to bring each internal vertex to degree d+1.
Graph regular_tree_from_internal(int d, const std::vector<int>& parents);

/// Subdivides every leaf-edge of a (d+1)-regular tree once; subdivision
/// vertices are appended in sorted edge order. Throws when the shape is not
/// a tree with all degrees in {1, d+1} and at least one internal vertex.
Graph gen_subdivided_regular_tree(int d, const Graph& shape);

/// Random k-tree: K_{k+1} plus n-k-1 vertices, each attached to a k-clique
/// chosen uniformly from all k-cliques present so far. Deterministic in seed.
Graph gen_random_ktree(int k, int n, std::uint64_t seed);

/// All non-isomorphic trees on n vertices (2 <= n <= 10), deduplicated by
/// canonical rooted encoding at the centroid(s).
std::vector<Graph> enumerate_trees(int n);

/// Interval model realizing P^k_n: interval i spans [i+1, i+k+1.5].
IntervalModel gen_interval_path_power(int n, int k);

/// Random interval model with clique number <= k+1: integer-grid draws
/// remapped to distinct half-integer endpoints, rejection-sampled until the
/// clique bound holds. Throws std::runtime_error("rejection budget
/// exhausted") after max_attempts failures.
IntervalModel gen_interval_random(int n, int k, std::uint64_t seed, int max_attempts = 1000);

/// Dispatch by family name: "path-power" or "random".
IntervalModel gen_interval_model(const std::string& family, int n, int k, std::uint64_t seed);

} // namespace twdl
