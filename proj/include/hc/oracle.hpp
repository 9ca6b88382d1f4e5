#pragma once

#include <string>
#include <vector>

#include "hc/coloring.hpp"
#include "hc/tree.hpp"

namespace hc {

/// Resource limits for the exact searches. Zero means "no limit" for
/// node_limit and time_limit_seconds; max_n always applies because the
/// searches are exponential in the vertex count.
struct OracleBudget {
    int max_n = 10;
    long long node_limit = 0;       // explored partial orderings
    double time_limit_seconds = 0.0;
};

/// Result of the exact minimization. A returned value is always exhaustive:
/// when a budget runs out the search throws Inexhaustive instead of
/// reporting a partial answer. nodes_explored is informational and depends
/// on scheduling; value and witness do not.
struct OracleHcResult {
    long long value = 0;
    Coloring witness;
    long long nodes_explored = 0;
};

/// Exact hamiltonian chromatic number by branch-and-bound over value
/// orderings.
///
/// Reduction: once the order of colors is fixed, every pairwise constraint
/// |c(u_i)-c(u_j)| >= n-1-distance(u_i,u_j) with j < i is one-sided, so the
/// cheapest completion is c(u_i) = max_{j<i}(c(u_j) + max(0, n-1-D)); that
/// closure is itself a valid coloring, hence the minimum over all orders is
/// exactly the optimum. The search enumerates orders with two prunes: a
/// node bound (every unplaced vertex already has a forced minimum color)
/// against the incumbent, and an early stop once the incumbent meets the
/// general lower bound when its hypotheses (n >= 4, max degree >= 3) hold.
/// The incumbent starts from the greedy coloring of the breadth-first
/// order.
///
/// brute_force_hc may evaluate first-position subtrees in parallel;
/// brute_force_hc_serial is the single-threaded reference. Both return the
/// identical (value, witness) pair: the witness is the first optimal
/// ordering's closure in the deterministic depth-first candidate order (or
/// the greedy incumbent when nothing beats it).
OracleHcResult brute_force_hc(const Tree& t, const OracleBudget& budget = {});
OracleHcResult brute_force_hc_serial(const Tree& t, const OracleBudget& budget = {});

/// Exact maximum over all vertex orderings of the sum of consecutive
/// distances, via Held-Karp style dynamic programming over subsets
/// (O(2^n n^2)). Throws Inexhaustive when n exceeds budget.max_n.
long long brute_force_D(const Tree& t, const OracleBudget& budget = {});

/// Canonical string encoding of a tree, identical for isomorphic trees:
/// rooted at the center (for two centers, at the lexicographically smaller
/// split) with sorted child encodings.
std::string ahu_canonical(const Tree& t);

/// All trees on n vertices up to isomorphism, one representative per class,
/// built by decoding every length-(n-2) generating sequence and keeping the
/// representative with the smallest sequence index per canonical form.
/// Output is sorted by canonical string, so it is stable across runs and
/// schedules. Throws BudgetExceeded for n > 10.
std::vector<Tree> enumerate_trees(int n);

/// Uniform random labeled tree on n vertices, deterministic in seed.
Tree random_tree(int n, unsigned long long seed);

} // namespace hc
