#include "twdl/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace twdl {

BoundValue bound_vd_lower(long long n, int delta, const Rational& avg_degree, int d) {
    if (n < 0 || delta < 0) {
        throw std::invalid_argument("bound_vd_lower: n and delta must be nonnegative");
    }
    if (d < delta) {
        return {Rational(0), false, "requires d >= delta"};
    }
    Rational num = Rational(d + 1) - avg_degree;
    return {num / Rational(d + 1 - delta) * Rational(n), true, ""};
}

BoundValue bound_kset_lower(long long n, int k, int d) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("bound_kset_lower: n and k must be nonnegative");
    }
    if (k == 0) {
        return {Rational(n), true, ""};
    }
    if (d < 2 * k - 1) {
        return {Rational(0), false, "requires d >= 2k-1"};
    }
    Rational lead(d - 2 * k + 1, d - k + 1);
    return {lead * Rational(n) + Rational(static_cast<long long>(k) * (k + 1), d - k + 1),
            true, ""};
}

BoundValue bound_kset_upper(long long n, int k, int d) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("bound_kset_upper: n and k must be nonnegative");
    }
    if (k == 0) {
        return {Rational(n), true, ""};
    }
    if (d < 2 * k - 1) {
        return {Rational(0), false, "requires d >= 2k-1"};
    }
    Rational lead(d - 2 * k + 1, d - k + 1);
    Rational value = lead * Rational(n) + Rational(2LL * k * k, d - k + 1);
    if (n < 2 * k || (n - 2 * k) % (d - k + 1) != 0) {
        return {value, false, "requires n = 2k (mod d-k+1), the realizable sizes"};
    }
    return {value, true, ""};
}

BoundValue bound_tset(long long n, int k, int t) {
    if (k < 0 || t < 0 || t > k || n < k + 1) {
        throw std::invalid_argument("bound_tset: requires 0 <= t <= k and n >= k+1");
    }
    return {Rational(static_cast<long long>(t + 1) * n, k + 1), true, ""};
}

BoundValue bound_dtset_lower(long long n, int k, int t, int d) {
    if (k < 1 || t < 0 || t > k) {
        throw std::invalid_argument("bound_dtset_lower: requires k >= 1 and 0 <= t <= k");
    }
    if (n < 2 * k + 1) {
        return {Rational(0), false, "requires n >= 2k+1"};
    }
    if (d < 2 * k) {
        return {Rational(2LL * (t + 1)), false,
                "requires d >= 2k; below that the guarantee is the constant 2(t+1)"};
    }
    Rational x(static_cast<long long>(t) * (t + 1), 2LL * (k + 1));
    Rational lead_den = Rational(2 * d - 3 * k + 2, 2) + x;
    Rational lead = Rational(d - 2 * k + 1) / lead_den * Rational(t + 1, k + 1);
    Rational constant = Rational(static_cast<long long>(k) * (t + 1)) / (lead_den + Rational(1));
    return {lead * Rational(n) + constant, true, ""};
}

Rational bound_dtset_lower_sharp(long long n, int k, int t, int d) {
    if (k < 1 || t < 0 || t > k || d < 2 * k) {
        throw std::invalid_argument(
            "bound_dtset_lower_sharp: requires k >= 1, 0 <= t <= k, d >= 2k");
    }
    Rational num = Rational(d - 2 * k + 1) * Rational(static_cast<long long>(t + 1) * n)
                 + Rational(static_cast<long long>(k) * (k + 1) * (t + 1));
    Rational den = Rational(2 * d - 3 * k + 2, 2) * Rational(k + 1)
                 + Rational(static_cast<long long>(t) * (t + 1), 2);
    return num / den;
}

BlockUpperBound bound_dtset_upper(long long n, int k, int t, int d) {
    if (k < 1 || t < 0) {
        throw std::invalid_argument("bound_dtset_upper: requires k >= 1 and t >= 0");
    }
    BlockUpperBound out;
    if (t >= k) {
        out.bound = {Rational(0), false, "requires t < k"};
        return out;
    }
    long long step = static_cast<long long>(k) * (k + 1);
    long long twice_r = 2LL * (d - 2 * k + 1);
    if (d < 2 * k || twice_r % step != 0 || twice_r / step < 1) {
        out.bound = {Rational(0), false,
                     "no construction for this d: 2(d-2k+1) must be a positive multiple of k(k+1)"};
        return out;
    }
    out.r = twice_r / step;

    Rational lead_den(2 * d - 3 * k + 2, 2);
    Rational lead = Rational(d - 2 * k + 1) / lead_den * Rational(t + 1, k + 1);
    Rational constant =
        Rational(static_cast<long long>(k - 1) * (t + 1) * (d - 2 * k + 1)
                 + static_cast<long long>(k) * (t + 1) * (k + 1))
        / (lead_den * Rational(k + 1));
    Rational closed = lead * Rational(n) + constant;

    long long den = 1 + out.r * (k + 1);
    long long num = n + out.r * (k + 1) * (k + 3);
    if (num % den != 0 || num / den < 2 * k + 3) {
        out.bound = {closed, false, "vertex count not realizable by the block construction"};
        return out;
    }
    out.n0 = num / den;
    out.count = static_cast<long long>(t + 1) * (out.r * (out.n0 - (k + 3)) + 2);
    out.bound = {closed, true, ""};
    return out;
}

TreeBound bound_tree(long long n, int d) {
    if (d < 1 || n < 1) {
        throw std::invalid_argument("bound_tree: requires d >= 1 and n >= 1");
    }
    TreeBound out;
    out.bound.value = Rational(static_cast<long long>(d - 1) * n + 2, 2 * d - 1);
    if (d == 1) {
        out.extremal_exists = n >= 2;
        if (n == 1) {
            out.bound.applicable = false;
            out.bound.reason = "a single vertex only attains 1";
            return out;
        }
    } else {
        out.extremal_exists = n >= 2 * d + 3 && (n - 4) % (2 * d - 1) == 0;
    }
    if (!out.extremal_exists) {
        out.bound.reason = "lower bound only; no n-vertex tree attains it";
    }
    return out;
}

BoundValue bound_indset_trees(const DegreeProfile& profile, int d) {
    if (d < 1) {
        throw std::invalid_argument("bound_indset_trees: requires d >= 1");
    }
    long long n = profile.total();
    if (n < 3) {
        throw std::invalid_argument("bound_indset_trees: profile must cover >= 3 vertices");
    }
    if (profile.degree_sum() != 2 * (n - 1)) {
        throw std::invalid_argument("bound_indset_trees: degree profile inconsistent with a tree");
    }
    long long correction = 0;
    for (const auto& [deg, cnt] : profile.counts) {
        if (deg >= 3 && deg <= d) {
            correction += static_cast<long long>(deg - 2) * cnt;
        } else if (deg >= d + 2) {
            correction += static_cast<long long>(deg - d - 1) * cnt;
        }
    }
    return {Rational(static_cast<long long>(d - 1) * n + 2 + correction, 2 * d - 1), true, ""};
}

BoundValue regular_tree_leaves(long long n, int d) {
    if (d < 2) {
        throw std::invalid_argument("regular_tree_leaves: requires d >= 2");
    }
    Rational value(static_cast<long long>(d - 1) * n + 2, d);
    if (n < d + 2 || (static_cast<long long>(d - 1) * n + 2) % d != 0) {
        return {value, false, "no tree with all degrees 1 or d+1 has n vertices"};
    }
    return {value, true, ""};
}

TreeStats tree_stats(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1 || g.edge_count() != n - 1 || !is_connected(g)) {
        throw std::invalid_argument("tree_stats: input is not a tree");
    }
    TreeStats stats;
    for (int v = 0; v < n; ++v) {
        int deg = g.degree(v);
        if (deg == 1) {
            stats.leaves.push_back(v);
        } else if (deg == 2) {
            stats.degree_two.push_back(v);
            bool near_leaf = false;
            for (int u : g.neighbors(v)) {
                if (g.degree(u) == 1) {
                    near_leaf = true;
                }
            }
            if (!near_leaf) {
                stats.inner_degree_two.push_back(v);
            }
        }
    }
    return stats;
}

bool is_alpha_d_extremal_structure(const Graph& g, int d) {
    if (d < 1) {
        throw std::invalid_argument("is_alpha_d_extremal_structure: requires d >= 1");
    }
    int n = g.vertex_count();
    if (n < 5) {
        throw std::invalid_argument("is_alpha_d_extremal_structure: requires n >= 5");
    }
    TreeStats stats = tree_stats(g);

    if (d == 1) {
        // Extremal means two low-degree endpoints only: a path.
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) > 2) {
                return false;
            }
        }
        return true;
    }

    bool has_top = false;
    for (int v = 0; v < n; ++v) {
        int deg = g.degree(v);
        if (deg == d + 1) {
            has_top = true;
        } else if (deg != 1 && deg != 2) {
            return false;
        }
    }
    if (!has_top || !stats.inner_degree_two.empty()) {
        return false;
    }
    if (stats.leaves.size() != stats.degree_two.size()) {
        return false;
    }

    // Each leaf must hang off its own degree-2 vertex whose other neighbor is
    // a top-degree vertex; together these force the leaf-edge subdivisions.
    std::vector<char> used(n, 0);
    for (int leaf : stats.leaves) {
        int p = g.neighbors(leaf)[0];
        if (g.degree(p) != 2 || used[p]) {
            return false;
        }
        used[p] = 1;
    }

    std::vector<std::pair<int, int>> contracted_edges;
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) == d + 1 && g.degree(v) == d + 1) {
            contracted_edges.push_back({u, v});
        }
    }
    for (int p : stats.degree_two) {
        int leaf = -1;
        int hub = -1;
        for (int u : g.neighbors(p)) {
            if (g.degree(u) == 1) {
                leaf = u;
            } else {
                hub = u;
            }
        }
        if (leaf < 0 || hub < 0 || g.degree(hub) != d + 1) {
            return false;
        }
        contracted_edges.push_back({leaf, hub});
    }

    // Contracting the degree-2 vertices must leave a tree whose degrees are
    // all 1 or d+1. Relabel the kept vertices and check directly.
    std::vector<int> kept;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2) {
            kept.push_back(v);
        }
    }
    std::vector<int> index(n, -1);
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
        index[kept[i]] = i;
    }
    for (auto& [u, v] : contracted_edges) {
        u = index[u];
        v = index[v];
    }
    Graph contracted = build_graph(static_cast<int>(kept.size()), contracted_edges);
    if (contracted.edge_count() != contracted.vertex_count() - 1 || !is_connected(contracted)) {
        return false;
    }
    for (int v = 0; v < contracted.vertex_count(); ++v) {
        int deg = contracted.degree(v);
        if (deg != 1 && deg != d + 1) {
            return false;
        }
    }
    return true;
}

Rational epsilon_degree_threshold(const Rational& epsilon, int k, int t) {
    if (k < 1 || t < 0 || t > k) {
        throw std::invalid_argument("epsilon_degree_threshold: requires k >= 1 and 0 <= t <= k");
    }
    if (!(Rational(0) < epsilon && epsilon < Rational(1))) {
        throw std::invalid_argument("epsilon_degree_threshold: epsilon must lie in (0,1)");
    }
    Rational one(1);
    Rational inner = Rational(3 * k - 2) - Rational(static_cast<long long>(t) * (t + 1), k + 1);
    return (one - one / epsilon) * inner / Rational(2) + Rational(2 * k - 1) / epsilon;
}

BoundValue bound_outerplanar_lower(long long n, int d) {
    if (d < 4) {
        return {Rational(0), false, "requires d >= 4"};
    }
    if (n < 5) {
        return {Rational(0), false, "requires n >= 5"};
    }
    return {Rational(d - 3, 3 * d - 6) * Rational(n) + Rational(2, d - 2), true, ""};
}

BoundValue bound_outerplanar_upper(long long n, int d) {
    if (d < 6 || d % 2 != 0) {
        return {Rational(0), false, "requires even d >= 6"};
    }
    long long r = (d - 4) / 2;
    Rational value = Rational(d - 4, 3 * d - 10) * Rational(n - 6) + Rational(3);
    long long den = 3 * r + 1;
    long long num = n + 12 * r - 2;
    if (num % den != 0 || num / den < 6) {
        return {value, false, "vertex count not realizable by the triangle construction"};
    }
    return {value, true, ""};
}

} // namespace twdl
