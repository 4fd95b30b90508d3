#pragma once

#include <optional>
#include <vector>

#include "twdl/graph.hpp"

namespace twdl {

/// Recognizes k-trees by repeatedly eliminating the lowest-id simplicial
/// vertex of degree exactly k until a (k+1)-clique remains. Returns the
/// elimination order (width k) on success, std::nullopt otherwise.
std::optional<EliminationOrder> ktree_elimination_order(const Graph& g, int k);

/// Embeds g (treewidth <= k, n >= k+1) into a k-tree on the same vertex set
/// by padding the back-neighborhoods of a width-<= k elimination order up to
/// k-cliques. Returns g unchanged when it is already a k-tree. Throws
/// std::invalid_argument when treewidth exceeds k, when n < k+1, or when the
/// instance is non-chordal and too large for the exact treewidth routine.
Graph complete_to_ktree(const Graph& g, int k);

/// Checks the clique degree property on every clique of a k-tree: with the
/// clique's vertices u_1..u_q ordered by non-decreasing degree,
///   n >= k+q:  deg(u_i) >= k + i - 1 for all i,
///   n <  k+q:  deg(u_i) >= k + i - 1 for i <= n-k-1 and deg(u_i) = n-1
///              for i >= n-k.
/// Returns the first violating clique if any.
struct CliqueDegreeCheck {
    bool ok = true;
    std::vector<int> counterexample;
};

CliqueDegreeCheck check_clique_degree_theorem(const Graph& g, int k);

} // namespace twdl
