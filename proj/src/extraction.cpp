#include "twdl/extraction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twdl/ktree.hpp"
#include "twdl/treewidth.hpp"

namespace twdl {
namespace {

// Colors along the reverse of the elimination order; each vertex sees only
// already-colored neighbors forming a clique, so k+1 colors suffice.
std::vector<int> color_along(const Graph& g, const std::vector<int>& elim_order) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int i = n - 1; i >= 0; --i) {
        int v = elim_order[i];
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        for (int u : g.neighbors(v))
            if (color[u] >= 0) used[color[u]] = true;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

} // namespace

std::vector<int> greedy_color_ktree(const Graph& g, int k) {
    auto ord = ktree_elimination_order(g, k);
    if (!ord) throw std::invalid_argument("graph is not a k-tree");
    return color_along(g, ord->order);
}

TSetResult extract_tset(const Graph& g, int k, int t) {
    if (k < 0 || t < 0 || t > k) throw std::invalid_argument("need 0 <= t <= k");
    const int n = g.vertex_count();

    std::vector<int> coloring(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> comp_orders;
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        const int nc = sub.graph.vertex_count();
        std::vector<int> order_local;
        std::vector<int> color_local;
        if (nc >= k + 1) {
            Graph h = complete_to_ktree(sub.graph, k);
            auto ord = ktree_elimination_order(h, k);
            order_local = ord->order;
            color_local = color_along(h, order_local);
        } else {
            // Small components complete to cliques: ascending elimination,
            // one color per vertex.
            order_local.resize(static_cast<std::size_t>(nc));
            std::iota(order_local.begin(), order_local.end(), 0);
            color_local.resize(static_cast<std::size_t>(nc));
            for (int i = 0; i < nc; ++i) color_local[order_local[i]] = nc - 1 - i;
        }
        std::vector<int> order_orig;
        order_orig.reserve(order_local.size());
        for (int v : order_local) order_orig.push_back(sub.original_ids[v]);
        comp_orders.push_back(std::move(order_orig));
        for (int v = 0; v < nc; ++v) coloring[sub.original_ids[v]] = color_local[v];
    }

    // Pick the t+1 largest global color classes, lower index first on ties.
    std::vector<long long> class_size(static_cast<std::size_t>(k) + 1, 0);
    for (int v = 0; v < n; ++v)
        if (coloring[v] >= 0) ++class_size[coloring[v]];
    std::vector<int> class_ids(static_cast<std::size_t>(k) + 1);
    std::iota(class_ids.begin(), class_ids.end(), 0);
    std::sort(class_ids.begin(), class_ids.end(), [&](int a, int b) {
        if (class_size[a] != class_size[b]) return class_size[a] > class_size[b];
        return a < b;
    });
    std::vector<bool> chosen(static_cast<std::size_t>(k) + 1, false);
    for (int i = 0; i <= t; ++i) chosen[class_ids[i]] = true;

    TSetResult res;
    res.coloring = coloring;
    for (int v = 0; v < n; ++v)
        if (coloring[v] >= 0 && chosen[coloring[v]]) res.vertices.push_back(v);

    std::vector<bool> in_s(static_cast<std::size_t>(n), false);
    for (int v : res.vertices) in_s[v] = true;
    for (const auto& ord : comp_orders)
        for (int v : ord)
            if (in_s[v]) res.witness.order.push_back(v);

    // Replay the witness on G[S] to pin its width.
    auto sub = induced_subgraph(g, res.vertices);
    std::vector<int> local_pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < sub.original_ids.size(); ++i)
        local_pos[sub.original_ids[i]] = static_cast<int>(i);
    std::vector<int> local_order;
    local_order.reserve(res.witness.order.size());
    for (int v : res.witness.order) local_order.push_back(local_pos[v]);
    res.witness.width = elimination_width(sub.graph, local_order);
    if (res.witness.width > t)
        throw std::logic_error("extracted set exceeds the treewidth budget");
    return res;
}

DegreeTSetResult extract_degree_d_tset(const Graph& g, int k, int t, int d) {
    auto sub = induced_subgraph(g, vd_set(g, d));
    TSetResult inner = extract_tset(sub.graph, k, t);

    DegreeTSetResult res;
    res.bound_applicable = d >= 2 * k;
    res.tset.coloring.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < sub.original_ids.size(); ++i)
        res.tset.coloring[sub.original_ids[i]] = inner.coloring[i];
    for (int v : inner.vertices) res.tset.vertices.push_back(sub.original_ids[v]);
    for (int v : inner.witness.order) res.tset.witness.order.push_back(sub.original_ids[v]);
    res.tset.witness.width = inner.witness.width;
    return res;
}

} // namespace twdl
