#include "twdl/chordal.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace twdl {
namespace {

// Max clique via Tomita-style branch and bound on bitmasks, n <= 25.
struct CliqueSearch {
    const Graph& g;
    std::vector<std::uint64_t> nbr;
    int best = 0;

    explicit CliqueSearch(const Graph& graph) : g(graph) {
        nbr.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int w : g.neighbors(v)) nbr[v] |= 1ULL << w;
    }

    // Greedy coloring bound: number of color classes needed for cand.
    int color_bound(std::uint64_t cand) const {
        int colors = 0;
        while (cand) {
            std::uint64_t cls = 0, rest = cand;
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                if ((nbr[v] & cls) == 0) {
                    cls |= 1ULL << v;
                    cand &= ~(1ULL << v);
                }
            }
            ++colors;
        }
        return colors;
    }

    void expand(std::uint64_t cand, int size) {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + color_bound(cand) <= best) return;
        int v = __builtin_ctzll(cand);
        expand(cand & nbr[v] & ~((1ULL << v) | 0ULL), size + 1);
        expand(cand & ~(1ULL << v), size);
    }
};

} // namespace

std::vector<int> lex_bfs(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (numbered[v]) continue;
            if (pick < 0 || label[v] > label[pick]) pick = v;
        }
        numbered[pick] = true;
        order.push_back(pick);
        for (int w : g.neighbors(pick))
            if (!numbered[w]) label[w].push_back(n - step);
    }
    return order;
}

ChordalityResult is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> visit = lex_bfs(g);
    std::vector<int> elim(visit.rbegin(), visit.rend());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[elim[i]] = i;

    // Golumbic's PEO verification: the earliest later neighbor of v must be
    // adjacent to all other later neighbors of v.
    int width = 0;
    for (int i = 0; i < n; ++i) {
        int v = elim[i];
        int w = -1;
        int later = 0;
        for (int u : g.neighbors(v)) {
            if (pos[u] <= i) continue;
            ++later;
            if (w < 0 || pos[u] < pos[w]) w = u;
        }
        width = std::max(width, later);
        if (w < 0) continue;
        for (int u : g.neighbors(v)) {
            if (pos[u] <= i || u == w) continue;
            if (!g.has_edge(w, u)) return {false, std::nullopt};
        }
    }
    EliminationOrder peo;
    peo.order = std::move(elim);
    peo.width = width;
    return {true, peo};
}

int max_clique_size(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    auto ch = is_chordal(g);
    if (ch.chordal) return ch.peo->width + 1;
    if (n > 25) throw std::invalid_argument("instance too large for exact clique search");
    CliqueSearch s(g);
    s.expand((n == 64 ? ~0ULL : (1ULL << n) - 1), 0);
    return s.best;
}

std::vector<std::vector<int>> maximal_cliques_chordal(const Graph& g) {
    auto ch = is_chordal(g);
    if (!ch.chordal) throw std::invalid_argument("graph is not chordal");
    const int n = g.vertex_count();
    const auto& elim = ch.peo->order;
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[elim[i]] = i;

    std::vector<std::vector<int>> cands;
    for (int i = 0; i < n; ++i) {
        int v = elim[i];
        std::vector<int> c{v};
        for (int u : g.neighbors(v))
            if (pos[u] > i) c.push_back(u);
        std::sort(c.begin(), c.end());
        cands.push_back(std::move(c));
    }
    // Keep only the inclusion-maximal candidate cliques.
    std::sort(cands.begin(), cands.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<std::vector<int>> out;
    for (auto& c : cands) {
        bool covered = false;
        for (const auto& m : out) {
            if (std::includes(m.begin(), m.end(), c.begin(), c.end())) {
                covered = true;
                break;
            }
        }
        if (!covered) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> chordal_optimal_coloring(const Graph& g) {
    auto ch = is_chordal(g);
    if (!ch.chordal) throw std::invalid_argument("graph is not chordal");
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    const auto& elim = ch.peo->order;
    for (int i = n - 1; i >= 0; --i) {
        int v = elim[i];
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        for (int u : g.neighbors(v))
            if (color[u] >= 0) used[color[u]] = true;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

} // namespace twdl
