#include "twdl/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "twdl/rng.hpp"

namespace twdl {

Graph gen_path_power(int n, int k) {
    if (n < 1) throw std::invalid_argument("path power needs n >= 1");
    if (k < 0) throw std::invalid_argument("path power needs k >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n && j <= i + k; ++j) edges.emplace_back(i, j);
    return build_graph(n, edges);
}

Graph gen_kset_extremal(int k, int d, int s) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (d < 2 * k - 1) throw std::invalid_argument("d must be at least 2k-1");
    if (s < 0) throw std::invalid_argument("s must be non-negative");
    const int r = d - 2 * k + 1;
    const int base = (s + 2) * k;
    Graph p = gen_path_power(base, k);
    std::vector<std::pair<int, int>> edges = p.edges();
    int next = base;
    for (int i = 1; i <= s; ++i) {
        for (int j = 0; j < r; ++j) {
            for (int c = i * k; c < i * k + k; ++c) edges.emplace_back(next, c);
            ++next;
        }
    }
    return build_graph(next, edges);
}

BlockParams block_ktree_params(int k, int d, int n0) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (n0 < 2 * k + 3) throw std::invalid_argument("n0 must be at least 2k+3");
    const long long num = 2LL * (d - 2 * k + 1);
    const long long den = static_cast<long long>(k) * (k + 1);
    if (num <= 0 || num % den != 0)
        throw std::invalid_argument("no construction for this d: 2(d-2k+1) must be a positive multiple of k(k+1)");
    BlockParams out;
    out.r = static_cast<int>(num / den);
    out.block_positions = n0 - k - 3;
    out.n = n0 + out.r * (k + 1) * out.block_positions;
    return out;
}

Graph gen_block_ktree(int k, int d, int n0) {
    const BlockParams bp = block_ktree_params(k, d, n0);
    Graph p = gen_path_power(n0, k);
    std::vector<std::pair<int, int>> edges = p.edges();
    int next = n0;
    // Window (v_i..v_{i+k-1}) in 1-based path positions i = 3..n0-k-1.
    for (int i = 3; i <= n0 - k - 1; ++i) {
        for (int rep = 0; rep < bp.r; ++rep) {
            // x_1..x_{k+1} get ids next..next+k. x_j attaches to the first
            // k-j+1 window vertices and all earlier x's; x_{k+1} to all x's.
            const int x0 = next;
            for (int j = 1; j <= k; ++j) {
                int x = x0 + j - 1;
                for (int c = 0; c < k - j + 1; ++c) edges.emplace_back(x, (i - 1) + c);
                for (int e = 0; e < j - 1; ++e) edges.emplace_back(x, x0 + e);
            }
            int xlast = x0 + k;
            for (int e = 0; e < k; ++e) edges.emplace_back(xlast, x0 + e);
            next += k + 1;
        }
    }
    return build_graph(next, edges);
}

Graph gen_outerplanar_extremal(int d, int n0) {
    if (d < 6 || d % 2 != 0)
        throw std::invalid_argument("construction needs even d >= 6");
    if (n0 < 6) throw std::invalid_argument("n0 must be at least 6");
    const int r = (d - 4) / 2;
    Graph p = gen_path_power(n0, 2);
    std::vector<std::pair<int, int>> edges = p.edges();
    int next = n0;
    // first_a[i] = id of the first triangle's a-vertex at path position i.
    std::map<int, int> first_a;
    for (int i = 3; i <= n0 - 2; ++i) {
        for (int rep = 0; rep < r; ++rep) {
            int a = next, b = next + 1, c = next + 2;
            if (rep == 0) first_a[i] = a;
            edges.emplace_back(a, b);
            edges.emplace_back(b, c);
            edges.emplace_back(a, c);
            edges.emplace_back(i - 1, a);
            edges.emplace_back(i - 1, b);
            next += 3;
        }
    }
    for (int i = 3; i <= n0 - 4; ++i) edges.emplace_back(i - 1, first_a[i + 2]);
    const int x = next, y = next + 1;
    edges.emplace_back(x, n0 - 4);
    edges.emplace_back(x, n0 - 2);
    edges.emplace_back(y, n0 - 3);
    edges.emplace_back(y, n0 - 1);
    next += 2;
    return build_graph(next, edges);
}

Graph regular_tree_from_internal(int d, const std::vector<int>& parents) {
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    const int m = static_cast<int>(parents.size()) + 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(static_cast<std::size_t>(m), 0);
    for (int i = 1; i < m; ++i) {
        int p = parents[i - 1];
        if (p < 0 || p >= i)
            throw std::invalid_argument("parent ids must satisfy 0 <= parents[i] <= i");
        edges.emplace_back(p, i);
        ++deg[p];
        ++deg[i];
    }
    for (int v = 0; v < m; ++v)
        if (deg[v] > d + 1)
            throw std::invalid_argument("internal vertex degree exceeds d+1");
    int next = m;
    std::vector<std::pair<int, int>> leaf_edges;
    for (int v = 0; v < m; ++v)
        for (int add = deg[v]; add < d + 1; ++add) leaf_edges.emplace_back(v, next++);
    edges.insert(edges.end(), leaf_edges.begin(), leaf_edges.end());
    return build_graph(next, edges);
}

Graph gen_subdivided_regular_tree(int d, const Graph& shape) {
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    const int n = shape.vertex_count();
    if (n < 2 || shape.edge_count() != n - 1 || !is_connected(shape))
        throw std::invalid_argument("shape is not a tree");
    int internal = 0;
    for (int v = 0; v < n; ++v) {
        int dv = shape.degree(v);
        if (dv == d + 1)
            ++internal;
        else if (dv != 1)
            throw std::invalid_argument("shape is not (d+1)-regular: vertex degree must be 1 or d+1");
    }
    if (internal == 0) throw std::invalid_argument("shape needs a vertex of degree d+1");

    std::vector<std::pair<int, int>> edges;
    int next = n;
    for (auto [u, v] : shape.edges()) {
        bool leaf_edge = shape.degree(u) == 1 || shape.degree(v) == 1;
        if (leaf_edge) {
            // Subdivision ids are appended in sorted edge order.
            edges.emplace_back(u, next);
            edges.emplace_back(next, v);
            ++next;
        } else {
            edges.emplace_back(u, v);
        }
    }
    return build_graph(next, edges);
}

Graph gen_random_ktree(int k, int n, std::uint64_t seed) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (n < k + 1) throw std::invalid_argument("a k-tree needs at least k+1 vertices");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
    // All k-cliques present so far; attaching to one spawns k new k-cliques.
    std::vector<std::vector<int>> cliques;
    if (k == 0) {
        cliques.push_back({});
    } else {
        for (int skip = 0; skip <= k; ++skip) {
            std::vector<int> c;
            for (int v = 0; v <= k; ++v)
                if (v != skip) c.push_back(v);
            cliques.push_back(std::move(c));
        }
    }
    for (int v = k + 1; v < n; ++v) {
        const auto& c = cliques[rng.below(cliques.size())];
        for (int u : c) edges.emplace_back(v, u);
        std::vector<std::vector<int>> fresh;
        for (std::size_t skip = 0; skip < c.size(); ++skip) {
            std::vector<int> nc;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != skip) nc.push_back(c[i]);
            nc.push_back(v);
            fresh.push_back(std::move(nc));
        }
        for (auto& nc : fresh) cliques.push_back(std::move(nc));
    }
    return build_graph(n, edges);
}

namespace {

// Canonical encoding of a rooted tree: sorted child encodings wrapped in
// parentheses. Equal encodings == isomorphic rooted trees.
std::string rooted_encoding(const Graph& g, int root, int parent) {
    std::vector<std::string> child;
    for (int w : g.neighbors(root))
        if (w != parent) child.push_back(rooted_encoding(g, w, root));
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (auto& c : child) out += c;
    out += ")";
    return out;
}

std::vector<int> tree_centroids(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    std::vector<int> order, parent(static_cast<std::size_t>(n), -1);
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : g.neighbors(order[i]))
            if (w != parent[order[i]]) {
                parent[w] = order[i];
                order.push_back(w);
            }
    for (std::size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
    std::vector<int> cents;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - size[v];
        for (int w : g.neighbors(v))
            if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
        if (heaviest <= n / 2) cents.push_back(v);
    }
    return cents;
}

std::string tree_canonical(const Graph& g) {
    std::string best;
    for (int c : tree_centroids(g)) {
        std::string enc = rooted_encoding(g, c, -1);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

} // namespace

std::vector<Graph> enumerate_trees(int n) {
    if (n < 2 || n > 10) throw std::invalid_argument("tree enumeration supports 2 <= n <= 10");
    std::vector<Graph> out;
    std::set<std::string> seen;
    // Every labeled tree with parent[i] < i; every isomorphism class has a
    // BFS labeling of this form, so the sweep is exhaustive.
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < n; ++i) edges.emplace_back(parent[i], i);
        Graph t = build_graph(n, edges);
        if (seen.insert(tree_canonical(t)).second) out.push_back(std::move(t));
        int i = n - 1;
        while (i >= 1 && parent[i] == i - 1) parent[i--] = 0;
        if (i < 1) break;
        ++parent[i];
    }
    return out;
}

IntervalModel gen_interval_path_power(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("need n >= 1 and k >= 0");
    std::vector<std::pair<double, double>> ivs;
    for (int i = 0; i < n; ++i)
        ivs.emplace_back(i + 1.0, i + k + 1.5);
    return make_interval_model(ivs);
}

IntervalModel gen_interval_random(int n, int k, std::uint64_t seed, int max_attempts) {
    if (n < 1 || k < 0) throw std::invalid_argument("need n >= 1 and k >= 0");
    Rng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        // Integer draws on a 2n-wide window, then rank-remap the 2n endpoints
        // to distinct half-integers (ties broken by a seeded shuffle key).
        struct Event {
            long long grid;
            std::uint64_t tiebreak;
            int interval;
            bool right;
        };
        std::vector<Event> events;
        const long long window = 2LL * n;
        for (int i = 0; i < n; ++i) {
            long long len = rng.range(1, k + 1);
            long long lo = rng.range(0, window - 1);
            events.push_back({lo, rng.raw(), i, false});
            events.push_back({lo + len, rng.raw(), i, true});
        }
        std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
            if (a.grid != b.grid) return a.grid < b.grid;
            return a.tiebreak < b.tiebreak;
        });
        std::vector<std::pair<double, double>> ivs(static_cast<std::size_t>(n));
        for (std::size_t rank = 0; rank < events.size(); ++rank) {
            double val = 0.5 * static_cast<double>(rank + 1);
            if (events[rank].right)
                ivs[events[rank].interval].second = val;
            else
                ivs[events[rank].interval].first = val;
        }
        for (auto& iv : ivs)
            if (iv.first > iv.second) std::swap(iv.first, iv.second);
        IntervalModel m = make_interval_model(ivs);
        if (clique_number_interval(m) <= k + 1) return m;
    }
    throw std::runtime_error("rejection budget exhausted");
}

IntervalModel gen_interval_model(const std::string& family, int n, int k, std::uint64_t seed) {
    if (family == "path-power") return gen_interval_path_power(n, k);
    if (family == "random") return gen_interval_random(n, k, seed);
    throw std::invalid_argument("unknown interval family: " + family);
}

} // namespace twdl
