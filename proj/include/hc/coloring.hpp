#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hc/tree.hpp"

namespace hc {

/// Vertex coloring with non-negative integer colors. A coloring of a tree
/// on n vertices is hamiltonian when distance(u,v) + |color(u)-color(v)|
/// >= n-1 for every pair of distinct vertices. Colors start at 0, so the
/// span (the largest color used) is the quantity being minimized.
struct Coloring {
    std::vector<long long> color; // indexed by vertex id

    long long span() const;
};

struct LinearOrder {
    std::vector<VertexId> order;
};

bool is_permutation(const LinearOrder& o, int n);

struct VerifyReport {
    struct Violation {
        VertexId u, v;
        long long slack; // distance + |color diff| - (n-1); negative when violated
    };
    bool valid = true;
    std::vector<Violation> violations;
};

/// Checks the hamiltonian inequality on every vertex pair. Throws
/// MissingVertexColor when the coloring does not assign every vertex.
VerifyReport verify(const Tree& t, const Coloring& c);

/// (n-1)(n-1-eps) + eps' - 2*total_level: a lower bound on the minimum
/// span over all hamiltonian colorings. Requires n >= 4 and max degree
/// >= 3; throws HypothesisViolated otherwise.
long long lower_bound(const Tree& t);

/// The three ordering conditions under which coloring_from_order is
/// optimal:
///   endpoints - the order starts at the central vertex and ends at one of
///     its neighbors (one center), or starts and ends at the two central
///     vertices (two centers);
///   branches  - consecutive vertices lie in different branches (one
///     center) or on opposite sides of the center edge (two centers),
///     i.e. phi = 0 and delta = epsilon on every consecutive pair;
///   gap       - consecutive distances stay at most n/2, compared exactly
///     as 2*distance <= n. Checked only when require_gap; set require_gap
///     to false when is_db_half holds, where the gap bound is automatic.
struct OrderConditionReport {
    struct Violation {
        int index;
        std::string reason;
    };
    bool cond_endpoints = true;
    bool cond_branches = true;
    bool cond_gap = true;
    std::optional<Violation> first_violation;

    bool all() const { return cond_endpoints && cond_branches && cond_gap; }
};

OrderConditionReport check_order(const Tree& t, const LinearOrder& o, bool require_gap);

/// Colors along the order: c(u_0) = 0 and c(u_{i+1}) = c(u_i) + n - 1 -
/// level(u_i) - level(u_{i+1}) - epsilon. Throws NegativeIncrement if a
/// step would decrease (cannot happen on a valid tree, kept as a guard).
/// When the order passes check_order the result is a hamiltonian coloring
/// whose span equals lower_bound.
Coloring coloring_from_order(const Tree& t, const LinearOrder& o);

/// Minimal coloring whose values are nondecreasing along the order:
/// c(u_i) = max over j < i of c(u_j) + max(0, n-1-distance(u_j,u_i)).
/// Always a valid hamiltonian coloring.
Coloring greedy_coloring(const Tree& t, const LinearOrder& o);

/// Deterministic backtracking search for an order passing check_order:
/// endpoints are fixed first, positions filled depth-first with candidates
/// in ascending id order, infeasible branch distributions pruned. Returns
/// nullopt when no qualified order exists.
std::optional<LinearOrder> find_qualified_order(const Tree& t, bool require_gap);

struct ConditionalHc {
    long long value = 0;
    LinearOrder order;
    Coloring coloring;
};

/// Exact minimum span via the sufficient ordering conditions: searches for
/// a qualified order and colors along it, which meets the lower bound.
/// Requires n >= 4 and max degree >= 3 (throws HypothesisViolated);
/// returns nullopt when no qualified order exists.
std::optional<ConditionalHc> hc_via_conditions(const Tree& t);

} // namespace hc
