#include "twdl/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "twdl/chordal.hpp"
#include "twdl/treewidth.hpp"

namespace twdl {
namespace {

struct MisSearch {
    std::vector<std::uint64_t> nbr;
    int n = 0;
    int best = -1;
    std::uint64_t best_set = 0;
    long long explored = 0;

    explicit MisSearch(const Graph& g) : n(g.vertex_count()) {
        nbr.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) nbr[v] |= 1ULL << w;
    }

    // Greedy clique cover of cand; the cover size bounds alpha from above.
    int cover_bound(std::uint64_t cand) const {
        int cliques = 0;
        while (cand) {
            int v = __builtin_ctzll(cand);
            std::uint64_t clique = 1ULL << v;
            std::uint64_t grow = cand & nbr[v];
            cand &= ~(1ULL << v);
            while (grow) {
                int u = __builtin_ctzll(grow);
                clique |= 1ULL << u;
                cand &= ~(1ULL << u);
                grow &= nbr[u] & cand;
            }
            ++cliques;
        }
        return cliques;
    }

    void run(std::uint64_t cand, std::uint64_t chosen, int size) {
        ++explored;
        if (size > best) {
            best = size;
            best_set = chosen;
        }
        if (cand == 0) return;
        if (size + cover_bound(cand) <= best) return;
        // Pivot on the highest-degree candidate.
        int pivot = -1, pivot_deg = -1;
        std::uint64_t it = cand;
        while (it) {
            int v = __builtin_ctzll(it);
            it &= it - 1;
            int deg = __builtin_popcountll(nbr[v] & cand);
            if (deg > pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        }
        run(cand & ~(nbr[pivot] | (1ULL << pivot)), chosen | (1ULL << pivot), size + 1);
        run(cand & ~(1ULL << pivot), chosen, size);
    }
};

std::vector<int> mask_to_ids(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

// True iff G[mask] contains a clique larger than limit.
bool clique_exceeds(const std::vector<std::uint32_t>& nbr, std::uint32_t cand,
                    std::uint32_t current, int limit) {
    if (static_cast<int>(__builtin_popcount(current)) > limit) return true;
    while (cand) {
        int v = __builtin_ctz(cand);
        cand &= cand - 1;
        if (clique_exceeds(nbr, cand & nbr[v], current | (1u << v), limit)) return true;
    }
    return false;
}

struct ComponentSearch {
    const Graph& g;
    int t;
    bool chordal;
    std::vector<std::uint32_t> nbr;
    long long explored = 0;

    ComponentSearch(const Graph& graph, int tt, bool ch) : g(graph), t(tt), chordal(ch) {
        if (g.vertex_count() <= 32) {
            nbr.assign(static_cast<std::size_t>(g.vertex_count()), 0);
            for (int v = 0; v < g.vertex_count(); ++v)
                for (int w : g.neighbors(v)) nbr[v] |= 1u << w;
        }
    }

    bool valid(std::uint32_t mask) {
        ++explored;
        if (clique_exceeds(nbr, mask, 0, t + 1)) return false;
        if (chordal) return true;
        std::vector<int> ids;
        for (std::uint32_t m = mask; m;) {
            ids.push_back(__builtin_ctz(m));
            m &= m - 1;
        }
        auto sub = induced_subgraph(g, ids);
        return treewidth_exact(sub.graph).width <= t;
    }

    // First valid subset of the given size in lexicographic order, or 0.
    std::uint32_t find_at_size(int size) {
        const int n = g.vertex_count();
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::uint32_t mask = 0;
            for (int i : idx) mask |= 1u << i;
            if (valid(mask)) return mask;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) return 0;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
};

} // namespace

OracleResult oracle_alpha(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 40) throw std::invalid_argument("instance too large for exact independence search");
    OracleResult res;
    if (n == 0) return res;
    MisSearch s(g);
    s.run(n == 64 ? ~0ULL : (1ULL << n) - 1, 0, 0);
    res.value = s.best;
    res.witness = mask_to_ids(s.best_set);
    res.explored = s.explored;
    for (std::size_t i = 0; i < res.witness.size(); ++i)
        for (std::size_t j = i + 1; j < res.witness.size(); ++j)
            if (g.has_edge(res.witness[i], res.witness[j]))
                throw std::logic_error("independence witness failed validation");
    return res;
}

OracleResult oracle_alpha_t(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("t must be non-negative");
    OracleResult res;
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        const Graph& c = sub.graph;
        const int nc = c.vertex_count();

        OracleResult alpha = oracle_alpha(c);
        res.explored += alpha.explored;
        const long long upper = std::min<long long>(nc, (t + 1) * alpha.value);

        // Lower witness: the independent set always works; for chordal
        // components the t+1 largest color classes of an optimal coloring
        // form a t-set (any clique meets each class at most once).
        std::vector<int> warm = alpha.witness;
        auto ch = is_chordal(c);
        if (ch.chordal && t > 0) {
            std::vector<int> color = chordal_optimal_coloring(c);
            int classes = *std::max_element(color.begin(), color.end()) + 1;
            std::vector<std::vector<int>> by_color(static_cast<std::size_t>(classes));
            for (int v = 0; v < nc; ++v) by_color[color[v]].push_back(v);
            std::stable_sort(by_color.begin(), by_color.end(),
                             [](const auto& a, const auto& b) { return a.size() > b.size(); });
            std::vector<int> picked;
            for (int i = 0; i < classes && i <= t; ++i)
                picked.insert(picked.end(), by_color[i].begin(), by_color[i].end());
            if (picked.size() > warm.size()) warm = std::move(picked);
        }

        long long value = static_cast<long long>(warm.size());
        std::vector<int> witness = warm;
        if (value < upper) {
            if (nc > 18)
                throw std::invalid_argument("component too large for exact t-set search");
            ComponentSearch search(c, t, ch.chordal);
            for (long long size = upper; size > value; --size) {
                std::uint32_t found = search.find_at_size(static_cast<int>(size));
                if (found) {
                    value = size;
                    witness.clear();
                    for (std::uint32_t m = found; m;) {
                        witness.push_back(__builtin_ctz(m));
                        m &= m - 1;
                    }
                    break;
                }
            }
            res.explored += search.explored;
        }

        // Validate the component witness regardless of how it was found.
        {
            auto wsub = induced_subgraph(c, witness);
            if (treewidth_exact(wsub.graph).width > t)
                throw std::logic_error("t-set witness failed validation");
        }
        for (int v : witness) res.witness.push_back(sub.original_ids[v]);
        res.value += value;
    }
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

OracleResult oracle_alpha_d_t(const Graph& g, int d, int t) {
    auto sub = induced_subgraph(g, vd_set(g, d));
    OracleResult inner = oracle_alpha_t(sub.graph, t);
    OracleResult res;
    res.value = inner.value;
    res.explored = inner.explored;
    for (int v : inner.witness) res.witness.push_back(sub.original_ids[v]);
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

} // namespace twdl
