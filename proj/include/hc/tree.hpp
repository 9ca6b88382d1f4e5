#pragma once

#include <utility>
#include <vector>

#include "hc/errors.hpp"

namespace hc {

using VertexId = int;

/// Connected acyclic graph over dense vertex ids 0..n-1. Immutable once
/// built; construct through validate_tree so the invariants actually hold.
struct Tree {
    int n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges; // normalized u < v, sorted
    std::vector<std::vector<VertexId>> adj;           // sorted neighbor lists

    int max_degree() const;
    bool adjacent(VertexId u, VertexId v) const;
};

/// Checks ids, acyclicity and connectivity, normalizes edges, builds the
/// adjacency. Throws BadVertexId / CycleDetected / DisconnectedGraph.
Tree validate_tree(int n, std::vector<std::pair<VertexId, VertexId>> edges);

/// The center of a tree: one vertex, or two adjacent ones, found by peeling
/// leaves layer by layer.
struct CenterInfo {
    std::vector<VertexId> centers; // ascending; size 1 or 2

    int epsilon() const { return static_cast<int>(centers.size()) - 1; }
    int epsilon_prime() const { return 1 - epsilon(); }
};

CenterInfo center(const Tree& t);

/// level[u] = distance from u to the nearest central vertex; total is the
/// sum over all vertices.
struct LevelTable {
    std::vector<int> level;
    long long total = 0;
};

LevelTable levels(const Tree& t, const CenterInfo& c);

inline constexpr VertexId kNoAnchor = -1;

/// Branch identity of a vertex. anchor is the neighbor of a central vertex
/// on the u-to-center path (the branch root); central vertices carry
/// kNoAnchor. side is the nearest central vertex; a center is its own side.
struct BranchId {
    VertexId anchor = kNoAnchor;
    VertexId side = -1;

    bool operator==(const BranchId&) const = default;
};

BranchId branch_of(const Tree& t, const CenterInfo& c, VertexId u);

/// One BFS worth of per-vertex center data; the functional ops below are
/// thin wrappers around this.
struct CenterDecomposition {
    CenterInfo c;
    LevelTable lt;
    std::vector<VertexId> parent; // toward the nearest center; -1 at centers
    std::vector<VertexId> anchor; // kNoAnchor at centers
    std::vector<VertexId> side;   // nearest center; a center is its own side
};

CenterDecomposition decompose(const Tree& t);

/// Largest level among common ancestors of u and v, where a vertex counts
/// as its own ancestor and, with two centers, ancestry stops at the center
/// on the vertex's own side. For a cross-side pair only the centers are
/// common ancestors, so the value is 0. Requires u != v.
int phi(const Tree& t, const CenterInfo& c, const LevelTable& lt, VertexId u, VertexId v);

/// 1 exactly when the tree has two centers and the u-v path crosses the
/// center edge, else 0. Requires u != v.
int delta(const Tree& t, const CenterInfo& c, VertexId u, VertexId v);

/// Path length between u and v (BFS).
int distance(const Tree& t, VertexId u, VertexId v);

/// level(u) + level(v) - 2*phi(u,v) + delta(u,v); equals distance(u,v) on
/// every tree. Requires u != v.
int distance_via_levels(const Tree& t, const CenterInfo& c, const LevelTable& lt, VertexId u, VertexId v);

int diameter(const Tree& t);

/// True when every pairwise distance is at most n/2, compared exactly as
/// 2*diameter <= n.
bool is_db_half(const Tree& t);

std::vector<int> bfs_distances(const Tree& t, VertexId src);
std::vector<std::vector<int>> distance_matrix(const Tree& t);

/// Deterministic breadth-first vertex order: centers first (ascending),
/// then outward level by level following sorted adjacency lists.
std::vector<VertexId> bfs_order(const Tree& t, const CenterInfo& c);

} // namespace hc
