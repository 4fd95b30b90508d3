#pragma once

#include <vector>

#include "twdl/graph.hpp"

namespace twdl {

/// Result of an exact search: the optimum, a witness set achieving it
/// (sorted, machine-validated before returning), and the number of search
/// nodes examined.
struct OracleResult {
    long long value = 0;
    std::vector<int> witness;
    long long explored = 0;
};

/// Maximum independent set size by branch and bound (greedy clique-cover
/// bound, max-degree pivot). Requires n <= 40.
OracleResult oracle_alpha(const Graph& g);

/// Maximum size of a t-set: a vertex set inducing a subgraph of treewidth
/// <= t. Decomposes into connected components (t-sets are unions of
/// per-component t-sets) and searches each by decreasing subset size from
/// min(n_c, (t+1) * alpha_c), enumerating subsets lexicographically. A lower
/// witness (independent set, or the t+1 largest color classes when the
/// component is chordal) often meets the upper bound and skips the
/// enumeration entirely; components needing enumeration are capped at 18
/// vertices (std::invalid_argument beyond).
OracleResult oracle_alpha_t(const Graph& g, int t);

/// Maximum size of a degree-d t-set: alpha^t of the subgraph induced by the
/// vertices of degree <= d in g. Witness uses g's vertex ids.
OracleResult oracle_alpha_d_t(const Graph& g, int d, int t);

} // namespace twdl
