#pragma once

#include <string>
#include <vector>

#include "hc/coloring.hpp"
#include "hc/tree.hpp"

namespace hc {

/// The four tree families with known closed-form hamiltonian chromatic
/// numbers. Parameters follow the construction, not the vertex count:
///   SymmetricTree(k, d): every internal vertex has degree k+1, every leaf
///     has eccentricity d (k >= 2, d >= 2).
///   Firecracker(m, k): a path of m vertices, each carrying a star so that
///     every copy has k vertices: one apex joined to k-2 free leaves and to
///     its path vertex (m >= 3, k >= 4).
///   Caterpillar(m, k): a spine of m vertices whose inner vertices each
///     have degree k, i.e. k-2 legs (m >= 3, k >= 3).
///   PathPlusPendant(m): the path on m vertices with one pendant vertex
///     attached to each central vertex (m >= 3).
enum class FamilyKind {
    SymmetricTree,
    Firecracker,
    Caterpillar,
    PathPlusPendant,
};

std::string family_name(FamilyKind kind);

struct FamilySpec {
    FamilyKind kind = FamilyKind::SymmetricTree;
    // Which fields are meaningful depends on kind:
    //   SymmetricTree: k, d. Firecracker / Caterpillar: m, k.
    //   PathPlusPendant: m.
    int m = 0;
    int k = 0;
    int d = 0;
};

/// A generated family member: the tree, a vertex ordering that certifies the
/// closed-form value constructively, and printable vertex names.
///
/// canonical_order always satisfies check_order with require_gap =
/// !is_db_half(tree). It is transcribed from the published per-family index
/// scheme whenever that scheme validates as a qualified order; when the
/// printed index arithmetic does not survive machine checking (it collides
/// or leaves gaps for some families), a deterministic search supplies the
/// order instead and order_from_fallback is set so callers can surface it.
struct FamilyInstance {
    Tree tree;
    FamilySpec spec;
    LinearOrder canonical_order;
    std::vector<std::string> labels; // indexed by vertex id
    bool order_from_fallback = false;
};

/// Generators. Vertex id layouts are fixed and documented here so orders and
/// golden files are reproducible:
///   symmetric: ids breadth-first from the center(s); d even: w=0, then its
///     k+1 children in label order, then each deeper level; d odd: w=0,
///     w'=1, then per level all w-side vertices before all w'-side ones,
///     each level ordered by parent id then child index.
///   firecracker: path vertices 0..m-1 in path order, then the m apexes,
///     then the free leaves copy by copy.
///   caterpillar: spine 0..m-1 in path order, then legs, inner vertex by
///     inner vertex.
///   path-plus-pendant: path 0..m-1, then the pendant(s): id m at the lower
///     center, and for even m id m+1 at the upper center.
/// All throw BadParams on out-of-range parameters or instances larger than
/// the generator cap.
FamilyInstance gen_symmetric(int k, int d);
FamilyInstance gen_firecracker(int m, int k);
FamilyInstance gen_caterpillar(int m, int k);
FamilyInstance gen_path_plus_pendant(int m);

/// Closed forms, evaluated in exact integer arithmetic (128-bit
/// intermediates). The printed expressions have rational prefactors that
/// cancel for every admissible parameter choice; each evaluation asserts the
/// divisibility and throws Error instead of rounding if it ever failed.
/// *_vertex_count and *_total_level are the matching closed forms for the
/// tree order n and the total level (sum over vertices of the distance to
/// the nearest central vertex); hc_* is the hamiltonian chromatic number,
/// which equals (n-1)(n-1-eps) + (1-eps) - 2*total_level for these families.
long long symmetric_vertex_count(int k, int d);
long long symmetric_total_level(int k, int d);
long long hc_symmetric(int k, int d);

long long firecracker_vertex_count(int m, int k);
long long firecracker_total_level(int m, int k);
long long hc_firecracker(int m, int k);

long long caterpillar_vertex_count(int m, int k);
long long caterpillar_total_level(int m, int k);
long long hc_caterpillar(int m, int k);

long long path_plus_pendant_vertex_count(int m);
long long path_plus_pendant_total_level(int m);
long long hc_path_plus_pendant(int m);

} // namespace hc
