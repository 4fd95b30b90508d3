#include "twdl/interval.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace twdl {

IntervalModel make_interval_model(const std::vector<std::pair<double, double>>& ivs) {
    IntervalModel m;
    std::set<double> endpoints;
    for (auto [lo, hi] : ivs) {
        if (!(lo < hi)) throw std::invalid_argument("interval endpoints must satisfy lo < hi");
        if (!endpoints.insert(lo).second || !endpoints.insert(hi).second)
            throw std::invalid_argument("interval endpoints must be pairwise distinct");
        m.intervals.push_back({lo, hi});
    }
    return m;
}

Graph intersection_graph(const IntervalModel& m) {
    const int n = m.size();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& a = m.intervals[u];
            const auto& b = m.intervals[v];
            if (a.lo < b.hi && b.lo < a.hi) edges.emplace_back(u, v);
        }
    return build_graph(n, edges);
}

int clique_number_interval(const IntervalModel& m) {
    // Sweep: max number of simultaneously active intervals. With distinct
    // endpoints, closed vs open makes no difference.
    std::vector<std::pair<double, int>> events;
    for (const auto& iv : m.intervals) {
        events.emplace_back(iv.lo, +1);
        events.emplace_back(iv.hi, -1);
    }
    std::sort(events.begin(), events.end());
    int active = 0, best = 0;
    for (auto [x, delta] : events) {
        active += delta;
        best = std::max(best, active);
    }
    return best;
}

std::vector<int> set_A(const IntervalModel& m, int y) {
    std::vector<int> out;
    const double ly = m.intervals[y].lo;
    for (int x = 0; x < m.size(); ++x)
        if (x != y && m.intervals[x].lo < ly && ly < m.intervals[x].hi) out.push_back(x);
    return out;
}

std::vector<int> set_B(const IntervalModel& m, int y) {
    std::vector<int> out;
    const double ry = m.intervals[y].hi;
    for (int x = 0; x < m.size(); ++x)
        if (x != y && m.intervals[x].lo < ry && ry < m.intervals[x].hi) out.push_back(x);
    return out;
}

int find_dominated_low_degree(const IntervalModel& m, int v, int k) {
    (void)k;
    const auto& iv = m.intervals[v];
    int best = -1;
    double best_len = 0;
    for (int w = 0; w < m.size(); ++w) {
        if (w == v) continue;
        const auto& jw = m.intervals[w];
        if (iv.lo < jw.lo && jw.hi < iv.hi) {
            double len = jw.hi - jw.lo;
            if (best < 0 || len < best_len) {
                best = w;
                best_len = len;
            }
        }
    }
    if (best < 0)
        throw std::logic_error("no dominated interval found despite degree bound");
    return best;
}

std::vector<int> interval_max_independent_set(const IntervalModel& m) {
    std::vector<int> ids(static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(),
              [&](int a, int b) { return m.intervals[a].hi < m.intervals[b].hi; });
    std::vector<int> out;
    double frontier = 0;
    bool first = true;
    for (int v : ids) {
        if (first || m.intervals[v].lo > frontier) {
            out.push_back(v);
            frontier = m.intervals[v].hi;
            first = false;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> interval_bounded_degree_mis(const IntervalModel& m, int k) {
    const int omega = clique_number_interval(m);
    if (omega > k + 1)
        throw std::invalid_argument("clique number exceeds k+1");
    Graph g = intersection_graph(m);

    std::set<int> s;
    for (int v : interval_max_independent_set(m)) s.insert(v);

    std::deque<int> work;
    for (int v : s)
        if (g.degree(v) >= 2 * k + 1) work.push_back(v);

    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        if (!s.count(v) || g.degree(v) <= 2 * k) continue;
        int w = find_dominated_low_degree(m, v, k);
        // The shortest interval dominated by v contains no dominated interval
        // itself, so its neighbors all hold one of its endpoints: at most
        // k each side, with v counted twice. Hence degree(w) <= 2k-1 and w
        // never re-enters the queue.
        s.erase(v);
        s.insert(w);
        for (int u : g.neighbors(w))
            if (s.count(u))
                throw std::logic_error("swap broke independence");
        if (g.degree(w) > 2 * k - 1)
            throw std::logic_error("replacement vertex exceeds degree 2k-1");
    }
    return std::vector<int>(s.begin(), s.end());
}

} // namespace twdl
