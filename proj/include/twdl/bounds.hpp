#pragma once

#include <string>
#include <vector>

#include "twdl/graph.hpp"
#include "twdl/rational.hpp"

namespace twdl {

/// Exact value of a closed-form guarantee, plus whether its preconditions
/// hold for the given parameters. When `applicable` is false, `reason` says
/// why; `value` may still carry the formula's nominal evaluation.
struct BoundValue {
    Rational value;
    bool applicable = true;
    std::string reason;
};

/// |V_d(G)| >= ((d+1-avg)/(d+1-delta)) * n for any graph with minimum degree
/// delta and average degree avg. Inapplicable when d < delta.
BoundValue bound_vd_lower(long long n, int delta, const Rational& avg_degree, int d);

/// Guaranteed k-set size over treewidth-<=k graphs:
///   ((d-2k+1)/(d-k+1)) n + k(k+1)/(d-k+1).
/// Inapplicable when d < 2k-1. k = 0 degenerates to n.
BoundValue bound_kset_lower(long long n, int k, int d);

/// Matching construction ceiling, ((d-2k+1)/(d-k+1)) n + 2k^2/(d-k+1).
/// Applicable only when n >= 2k and n = 2k (mod d-k+1), the vertex counts the
/// clique-sum construction realizes. Gap to the lower bound is k(k-1)/(d-k+1).
BoundValue bound_kset_upper(long long n, int k, int d);

/// Every treewidth-<=k graph on n vertices has a t-set of size at least
/// (t+1)n/(k+1). Throws unless 0 <= t <= k and n >= k+1.
BoundValue bound_tset(long long n, int k, int t);

/// Degree-d t-set guarantee for treewidth-<=k graphs, in the two-term form
///   ((d-2k+1)/(d-(3/2)k+1+x)) ((t+1)/(k+1)) n + k(t+1)/(d-(3/2)k+2+x)
/// with x = t(t+1)/(2(k+1)). Inapplicable when d < 2k (the value then
/// degenerates to the constant 2(t+1)) or n < 2k+1.
BoundValue bound_dtset_lower(long long n, int k, int t, int d);

/// Single-fraction strengthening of bound_dtset_lower, as produced by the
/// averaging argument before the statement form splits off a constant term:
///   ((d-2k+1)(t+1) n + k(k+1)(t+1)) / ((d-(3/2)k+1)(k+1) + t(t+1)/2).
/// At t = k this equals bound_kset_lower exactly; at t = 0, k = 2 it equals
/// bound_outerplanar_lower. Dominates the statement form everywhere.
Rational bound_dtset_lower_sharp(long long n, int k, int t, int d);

/// Ceiling from the block construction, plus its instance parameters.
///   bound: ((d-2k+1)/(d-(3/2)k+1)) ((t+1)/(k+1)) n
///          + ((k-1)(t+1)(d-2k+1) + k(t+1)(k+1)) / ((d-(3/2)k+1)(k+1))
/// Applicable when 0 <= t < k, r = 2(d-2k+1)/(k(k+1)) is a positive integer,
/// and n is a vertex count the construction realizes (then n0 and the exact
/// achieved size count = (t+1)(r(n0-(k+3))+2) are filled in; count equals the
/// closed form).
struct BlockUpperBound {
    BoundValue bound;
    long long r = 0;
    long long n0 = 0;
    long long count = 0;
};

BlockUpperBound bound_dtset_upper(long long n, int k, int t, int d);

/// Family-wide tree guarantee ((d-1)n+2)/(2d-1), with a flag for whether an
/// n-vertex tree attains it. For d >= 2 extremal trees exist exactly when
/// n >= 2d+3 and n = 4 (mod 2d-1); for other n the value is a lower bound
/// only and the reason field says so. For d = 1 the value is 2, attained by
/// paths for every n >= 2.
struct TreeBound {
    BoundValue bound;
    bool extremal_exists = false;
};

TreeBound bound_tree(long long n, int d);

/// Degree-profile refinement of bound_tree for a single tree:
///   (1/(2d-1)) ((d-1)n + 2 + sum_{3<=i<=d} (i-2) n_i
///                            + sum_{i>=d+2} (i-d-1) n_i).
/// Throws if the profile cannot come from a tree on >= 3 vertices.
BoundValue bound_indset_trees(const DegreeProfile& profile, int d);

/// Leaf count ((d-1)n+2)/d of a tree whose degrees are all 1 or d+1.
/// Requires d >= 2; flagged inapplicable when no such tree has n vertices
/// (n < d+2 or n != 2 (mod d)).
BoundValue regular_tree_leaves(long long n, int d);

/// Leaf set, degree-2 set, and the degree-2 vertices with no leaf neighbor.
/// Throws std::invalid_argument when the input is not a tree.
struct TreeStats {
    std::vector<int> leaves;
    std::vector<int> degree_two;
    std::vector<int> inner_degree_two;
};

TreeStats tree_stats(const Graph& g);

/// True exactly when the tree matches the shape attaining bound_tree:
/// for d = 1, a path; for d >= 2, every leaf hangs off its own degree-2
/// vertex and contracting those gives a tree with all degrees 1 or d+1.
/// Requires n >= 5; throws on non-trees or smaller inputs.
bool is_alpha_d_extremal_structure(const Graph& g, int d);

/// Smallest degree threshold d (as an exact rational; real inputs round up)
/// at which bound_dtset_lower's leading coefficient reaches
/// (1-epsilon)(t+1)/(k+1):
///   d = (1/2)(1-1/epsilon)(3k-2-t(t+1)/(k+1)) + (2k-1)/epsilon.
/// Throws unless 0 < epsilon < 1 and 0 <= t <= k, k >= 1.
Rational epsilon_degree_threshold(const Rational& epsilon, int k, int t);

/// Outerplanar guarantee ((d-3)/(3d-6)) n + 2/(d-2) for d >= 4, n >= 5.
/// Coincides with bound_dtset_lower_sharp(n, 2, 0, d).
BoundValue bound_outerplanar_lower(long long n, int d);

/// Outerplanar ceiling ((d-4)/(3d-10))(n-6) + 3 from the fan-of-triangles
/// construction; needs even d >= 6 and a realizable n (n0 >= 6 integral).
/// At d = 6 its leading coefficient meets the lower bound's: both 1/4.
BoundValue bound_outerplanar_upper(long long n, int d);

} // namespace twdl
