#pragma once

#include <optional>
#include <vector>

#include "twdl/graph.hpp"

namespace twdl {

/// Lexicographic BFS visit order (ties broken toward lower ids).
std::vector<int> lex_bfs(const Graph& g);

/// Chordality test. On success returns a perfect elimination ordering
/// (reverse LexBFS visit order) with its width, which equals omega - 1.
struct ChordalityResult {
    bool chordal = false;
    std::optional<EliminationOrder> peo;
};

ChordalityResult is_chordal(const Graph& g);

/// Exact clique number. Chordal graphs go through the PEO (any size);
/// non-chordal graphs use branch and bound and require n <= 25.
int max_clique_size(const Graph& g);

/// Maximal cliques of a chordal graph, each sorted, ordered lexicographically.
/// Throws std::invalid_argument if g is not chordal.
std::vector<std::vector<int>> maximal_cliques_chordal(const Graph& g);

/// Optimal proper coloring of a chordal graph: colors 0..omega-1, greedy
/// along the reverse of a PEO. Returns per-vertex colors.
std::vector<int> chordal_optimal_coloring(const Graph& g);

} // namespace twdl
