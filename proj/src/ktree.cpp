#include "twdl/ktree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "twdl/chordal.hpp"
#include "twdl/treewidth.hpp"

namespace twdl {

std::optional<EliminationOrder> ktree_elimination_order(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    const int n = g.vertex_count();
    if (n < k + 1) return std::nullopt;

    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[v] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<bool> gone(static_cast<std::size_t>(n), false);

    EliminationOrder out;
    out.width = k;
    int remaining = n;
    while (remaining > k + 1) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (gone[v] || static_cast<int>(adj[v].size()) != k) continue;
            bool clique = true;
            for (auto it = adj[v].begin(); clique && it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt)) {
                        clique = false;
                        break;
                    }
            if (clique) pick = v;
        }
        if (pick < 0) return std::nullopt;
        for (int u : adj[pick]) adj[u].erase(pick);
        adj[pick].clear();
        gone[pick] = true;
        out.order.push_back(pick);
        --remaining;
    }
    // The remaining k+1 vertices must form a clique.
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) rest.push_back(v);
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            if (!adj[rest[i]].count(rest[j])) return std::nullopt;
    out.order.insert(out.order.end(), rest.begin(), rest.end());
    return out;
}

Graph complete_to_ktree(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    const int n = g.vertex_count();
    if (n < k + 1) throw std::invalid_argument("need at least k+1 vertices to form a k-tree");

    if (ktree_elimination_order(g, k)) return g;

    // Find a width-<= k elimination order: PEO for chordal inputs,
    // exact treewidth otherwise.
    EliminationOrder ord;
    auto ch = is_chordal(g);
    if (ch.chordal) {
        ord = *ch.peo;
    } else {
        auto tw = treewidth_exact_dp(g);
        ord = tw.order;
    }
    if (ord.width > k) throw std::invalid_argument("treewidth exceeds k");

    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[ord.order[i]] = i;

    // Fill graph along the order.
    std::vector<std::vector<char>> fill(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) fill[v][w] = 1;
    for (int i = 0; i < n; ++i) {
        int v = ord.order[i];
        std::vector<int> later;
        for (int u = 0; u < n; ++u)
            if (fill[v][u] && pos[u] > i) later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                fill[later[a]][later[b]] = fill[later[b]][later[a]] = 1;
    }

    // Rebuild in construction order (reverse elimination), padding each
    // back-neighborhood to a full k-clique. Inside a k-tree every clique of
    // size < k extends, so greedy lowest-id padding always succeeds.
    std::vector<std::vector<char>> h(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = n - 1; i >= 0; --i) {
        int v = ord.order[i];
        std::vector<int> base;
        for (int u = 0; u < n; ++u)
            if (fill[v][u] && pos[u] > i) base.push_back(u);
        const int target = std::min(k, n - 1 - i);
        // Greedy extension by lowest id among later vertices.
        while (static_cast<int>(base.size()) < target) {
            int found = -1;
            for (int u = 0; u < n && found < 0; ++u) {
                if (pos[u] <= i || std::find(base.begin(), base.end(), u) != base.end()) continue;
                bool clique = true;
                for (int b : base)
                    if (!h[u][b]) {
                        clique = false;
                        break;
                    }
                if (clique) found = u;
            }
            if (found < 0) throw std::logic_error("k-tree padding failed");
            base.push_back(found);
        }
        for (int b : base) h[v][b] = h[b][v] = 1;
    }

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (h[u][v]) edges.emplace_back(u, v);
    Graph out = build_graph(n, edges);
    if (!ktree_elimination_order(out, k))
        throw std::logic_error("k-tree completion produced a non-k-tree");
    return out;
}

CliqueDegreeCheck check_clique_degree_theorem(const Graph& g, int k) {
    auto ord = ktree_elimination_order(g, k);
    if (!ord) throw std::invalid_argument("graph is not a k-tree");
    const int n = g.vertex_count();

    // In a k-tree the maximal cliques are exactly the (k+1)-cliques:
    // one per eliminated vertex plus the base clique.
    std::set<std::vector<int>> maximal;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[ord->order[i]] = i;
    for (int i = 0; i + k < n; ++i) {
        int v = ord->order[i];
        std::vector<int> c{v};
        for (int u : g.neighbors(v))
            if (pos[u] > i) c.push_back(u);
        if (static_cast<int>(c.size()) == k + 1) {
            std::sort(c.begin(), c.end());
            maximal.insert(std::move(c));
        }
    }
    {
        std::vector<int> base(ord->order.end() - (k + 1), ord->order.end());
        std::sort(base.begin(), base.end());
        maximal.insert(std::move(base));
    }

    std::set<std::vector<int>> seen;
    CliqueDegreeCheck res;
    for (const auto& m : maximal) {
        const int sz = static_cast<int>(m.size());
        for (unsigned mask = 1; mask < (1u << sz); ++mask) {
            std::vector<int> c;
            for (int b = 0; b < sz; ++b)
                if (mask & (1u << b)) c.push_back(m[b]);
            if (!seen.insert(c).second) continue;
            std::vector<int> deg;
            for (int v : c) deg.push_back(g.degree(v));
            std::sort(deg.begin(), deg.end());
            const int q = static_cast<int>(c.size());
            bool ok = true;
            for (int i = 1; i <= q && ok; ++i) {
                if (n >= k + q) {
                    ok = deg[i - 1] >= k + i - 1;
                } else if (i <= n - k - 1) {
                    ok = deg[i - 1] >= k + i - 1;
                } else {
                    ok = deg[i - 1] >= n - 1;
                }
            }
            if (!ok) {
                res.ok = false;
                res.counterexample = c;
                return res;
            }
        }
    }
    return res;
}

} // namespace twdl
