#include "twdl/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twdl {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.edges_ += static_cast<long long>(a.size());
    }
    g.edges_ /= 2;
    return g;
}

std::vector<int> vd_set(const Graph& g, int d) {
    if (d < 0) throw std::invalid_argument("degree threshold must be non-negative");
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= d) out.push_back(v);
    return out;
}

long long DegreeProfile::total() const {
    long long s = 0;
    for (auto& [d, c] : counts) s += c;
    return s;
}

long long DegreeProfile::degree_sum() const {
    long long s = 0;
    for (auto& [d, c] : counts) s += static_cast<long long>(d) * c;
    return s;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    for (int v = 0; v < g.vertex_count(); ++v) ++p.counts[g.degree(v)];
    return p;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    InducedSubgraph out;
    out.original_ids = vertices;
    std::sort(out.original_ids.begin(), out.original_ids.end());
    out.original_ids.erase(std::unique(out.original_ids.begin(), out.original_ids.end()),
                           out.original_ids.end());
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.original_ids.size(); ++i)
        local[out.original_ids[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : out.original_ids)
        for (int v : g.neighbors(u))
            if (u < v && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    out.graph = build_graph(static_cast<int>(out.original_ids.size()), edges);
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

} // namespace twdl
