#pragma once

#include <map>
#include <utility>
#include <vector>

namespace twdl {

/// Simple undirected graph on vertices 0..n-1, immutable after build.
/// Adjacency lists are kept sorted; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// All edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

private:
    std::vector<std::vector<int>> adj_;
    long long edges_ = 0;
};

/// Validates endpoints and deduplicates; throws std::invalid_argument on
/// out-of-range endpoints or self-loops.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// Vertices of degree <= d, ascending. Requires d >= 0.
std::vector<int> vd_set(const Graph& g, int d);

/// Degree distribution: counts[i] = number of vertices with degree exactly i.
struct DegreeProfile {
    std::map<int, long long> counts;

    long long total() const;
    long long degree_sum() const;
};

DegreeProfile degree_profile(const Graph& g);

/// Induced subgraph on the given vertex set (need not be sorted); the result
/// graph's vertex i corresponds to original id original_ids[i] (ascending).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Connected components, each a sorted vertex list; components ordered by
/// their smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Elimination order: order[0] is eliminated first. width is the maximum
/// back-degree in the fill graph along the order.
struct EliminationOrder {
    std::vector<int> order;
    int width = 0;
};

} // namespace twdl
