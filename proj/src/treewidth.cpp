#include "twdl/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "twdl/chordal.hpp"

namespace twdl {

int elimination_width(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("elimination order has wrong length");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] >= 0)
            throw std::invalid_argument("elimination order is not a permutation");
        pos[v] = i;
    }
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v][w] = 1;
    int width = 0;
    std::vector<int> later;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        later.clear();
        for (int u = 0; u < n; ++u)
            if (adj[v][u] && pos[u] > i) later.push_back(u);
        width = std::max(width, static_cast<int>(later.size()));
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                adj[later[a]][later[b]] = adj[later[b]][later[a]] = 1;
    }
    return width;
}

TreewidthResult treewidth_exact_dp(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 18) throw std::invalid_argument("instance too large for exact treewidth");
    TreewidthResult res;
    if (n == 0) return res;

    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nbr[v] |= 1u << w;

    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::uint8_t> f(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::int8_t> choice(static_cast<std::size_t>(full) + 1, -1);

    // q(T, v): neighbors outside T u {v} of the component of v in G[T u {v}].
    auto back_degree = [&](std::uint32_t t, int v) {
        std::uint32_t inside = t | (1u << v);
        std::uint32_t reach = 1u << v;
        std::uint32_t frontier = reach;
        std::uint32_t seen_nbrs = 0;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t fr = frontier;
            while (fr) {
                int u = __builtin_ctz(fr);
                fr &= fr - 1;
                seen_nbrs |= nbr[u];
                next |= nbr[u] & inside & ~reach;
            }
            reach |= next;
            frontier = next;
        }
        return __builtin_popcount(seen_nbrs & ~inside);
    };

    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = 127;
        int pick = -1;
        std::uint32_t it = s;
        while (it) {
            int v = __builtin_ctz(it);
            it &= it - 1;
            std::uint32_t rest = s & ~(1u << v);
            int w = std::max<int>(f[rest], back_degree(rest, v));
            if (w < best) {
                best = w;
                pick = v;
            }
        }
        f[s] = static_cast<std::uint8_t>(best);
        choice[s] = static_cast<std::int8_t>(pick);
    }

    res.width = f[full];
    res.order.order.assign(static_cast<std::size_t>(n), -1);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        int v = choice[s];
        res.order.order[i] = v;
        s &= ~(1u << v);
    }
    res.order.width = elimination_width(g, res.order.order);
    if (res.order.width != res.width)
        throw std::logic_error("treewidth witness failed replay validation");
    return res;
}

TreewidthResult treewidth_exact(const Graph& g) {
    auto ch = is_chordal(g);
    if (ch.chordal) {
        TreewidthResult res;
        res.order = *ch.peo;
        res.width = res.order.width;
        return res;
    }
    return treewidth_exact_dp(g);
}

bool has_treewidth_at_most_2(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[v] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    int remaining = n;
    bool progress = true;
    while (remaining > 0 && progress) {
        progress = false;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            if (adj[v].size() <= 1) {
                for (int u : adj[v]) adj[u].erase(v);
                adj[v].clear();
                gone[v] = true;
                --remaining;
                progress = true;
            } else if (adj[v].size() == 2) {
                int a = *adj[v].begin();
                int b = *std::next(adj[v].begin());
                adj[a].erase(v);
                adj[b].erase(v);
                adj[a].insert(b);
                adj[b].insert(a);
                adj[v].clear();
                gone[v] = true;
                --remaining;
                progress = true;
            }
        }
    }
    return remaining == 0;
}

} // namespace twdl
