#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "hc/coloring.hpp"
#include "hc/families.hpp"
#include "hc/oracle.hpp"
#include "hc/tree.hpp"

using namespace hc;

namespace {

// Checks everything a family member promises: formula == lower bound ==
// span of the coloring along the canonical order, the coloring is valid,
// and the order passes the conditions under the instance's gap mode.
void check_instance(const FamilyInstance& inst, long long n, long long total, long long hcv) {
    const Tree& t = inst.tree;
    REQUIRE(t.n == n);
    CHECK(levels(t, center(t)).total == total);
    CHECK(lower_bound(t) == hcv);
    bool gap = !is_db_half(t);
    CHECK(check_order(t, inst.canonical_order, gap).all());
    Coloring col = coloring_from_order(t, inst.canonical_order);
    CHECK(col.span() == hcv);
    CHECK(verify(t, col).valid);
    CHECK(static_cast<int>(inst.labels.size()) == t.n);
    std::set<std::string> distinct(inst.labels.begin(), inst.labels.end());
    CHECK(static_cast<int>(distinct.size()) == t.n);
    if (inst.order_from_fallback) {
        WARN_MESSAGE(false, "order for " << family_name(inst.spec.kind)
                                         << " came from the fallback search");
    }
}

} // namespace

TEST_CASE("symmetric trees: counts, levels and minimum spans") {
    struct Row { int k, d; long long n, total, hcv; };
    const Row rows[] = {
        {2, 2, 4, 3, 4},    {2, 3, 6, 4, 12},    {2, 4, 10, 15, 52},
        {3, 2, 5, 4, 9},    {3, 3, 8, 6, 30},    {3, 4, 17, 28, 201},
        {2, 5, 14, 20, 116},
    };
    for (const Row& r : rows) {
        CAPTURE(r.k);
        CAPTURE(r.d);
        CHECK(symmetric_vertex_count(r.k, r.d) == r.n);
        CHECK(symmetric_total_level(r.k, r.d) == r.total);
        CHECK(hc_symmetric(r.k, r.d) == r.hcv);
        FamilyInstance inst = gen_symmetric(r.k, r.d);
        check_instance(inst, r.n, r.total, r.hcv);
        CHECK(!inst.order_from_fallback);
        CHECK(is_db_half(inst.tree)); // every pair within half the order
    }
    CHECK_THROWS_AS(gen_symmetric(1, 3), BadParams);
    CHECK_THROWS_AS(gen_symmetric(2, 1), BadParams);
    CHECK_THROWS_AS(symmetric_vertex_count(1, 2), BadParams);
}

TEST_CASE("firecrackers: counts, levels and minimum spans") {
    struct Row { int m, k; long long n, total, hcv; };
    const Row rows[] = {
        {3, 4, 12, 23, 76},  {3, 5, 15, 31, 135}, {4, 4, 16, 28, 154},
        {4, 5, 20, 38, 266}, {5, 4, 20, 49, 264}, {5, 5, 25, 65, 447},
    };
    for (const Row& r : rows) {
        CAPTURE(r.m);
        CAPTURE(r.k);
        CHECK(firecracker_vertex_count(r.m, r.k) == r.m * static_cast<long long>(r.k));
        CHECK(firecracker_vertex_count(r.m, r.k) == r.n);
        CHECK(firecracker_total_level(r.m, r.k) == r.total);
        CHECK(hc_firecracker(r.m, r.k) == r.hcv);
        FamilyInstance inst = gen_firecracker(r.m, r.k);
        check_instance(inst, r.n, r.total, r.hcv);
        CHECK(inst.order_from_fallback == (r.m % 2 == 1));
        CHECK(is_db_half(inst.tree));
    }
    // odd path length: a single central path vertex; even: a central edge
    CHECK(center(gen_firecracker(3, 4).tree).centers.size() == 1);
    CHECK(center(gen_firecracker(4, 4).tree).centers.size() == 2);
    CHECK(diameter(gen_firecracker(3, 4).tree) == 6);
    CHECK_THROWS_AS(gen_firecracker(2, 4), BadParams);
    CHECK_THROWS_AS(gen_firecracker(3, 3), BadParams);
}

TEST_CASE("caterpillars: counts, levels and minimum spans") {
    struct Row { int m, k; long long n, total, hcv; };
    const Row rows[] = {
        {3, 3, 4, 3, 4},   {3, 4, 5, 4, 9},   {4, 3, 6, 4, 12},
        {4, 4, 8, 6, 30},  {5, 3, 8, 11, 28}, {5, 4, 11, 16, 69},
    };
    for (const Row& r : rows) {
        CAPTURE(r.m);
        CAPTURE(r.k);
        long long n = static_cast<long long>(r.m) * (r.k - 1) - 2 * (r.k - 2);
        CHECK(caterpillar_vertex_count(r.m, r.k) == n);
        CHECK(n == r.n);
        CHECK(caterpillar_total_level(r.m, r.k) == r.total);
        CHECK(hc_caterpillar(r.m, r.k) == r.hcv);
        FamilyInstance inst = gen_caterpillar(r.m, r.k);
        check_instance(inst, r.n, r.total, r.hcv);
        CHECK(inst.order_from_fallback); // published index scheme never validates
        CHECK(is_db_half(inst.tree));
    }
    CHECK_THROWS_AS(gen_caterpillar(2, 3), BadParams);
    CHECK_THROWS_AS(gen_caterpillar(3, 2), BadParams);
}

TEST_CASE("paths with pendants: counts, levels and minimum spans") {
    struct Row { int m; long long n, total, hcv; };
    const Row rows[] = {
        {3, 4, 3, 4},   {4, 6, 4, 12},  {5, 6, 7, 12},
        {6, 8, 8, 26},  {7, 8, 13, 24}, {8, 10, 14, 44},
    };
    for (const Row& r : rows) {
        CAPTURE(r.m);
        CHECK(path_plus_pendant_vertex_count(r.m) == r.n);
        CHECK(path_plus_pendant_total_level(r.m) == r.total);
        CHECK(hc_path_plus_pendant(r.m) == r.hcv);
        FamilyInstance inst = gen_path_plus_pendant(r.m);
        check_instance(inst, r.n, r.total, r.hcv);
        CHECK(!inst.order_from_fallback);
        CHECK(is_db_half(inst.tree) == (r.m <= 4)); // longer paths exceed half
    }
    CHECK_THROWS_AS(gen_path_plus_pendant(2), BadParams);
}

TEST_CASE("family names and parameter echo") {
    CHECK(family_name(FamilyKind::SymmetricTree) == "symmetric");
    CHECK(family_name(FamilyKind::Firecracker) == "firecracker");
    CHECK(family_name(FamilyKind::Caterpillar) == "caterpillar");
    CHECK(family_name(FamilyKind::PathPlusPendant) == "path-plus-pendant");

    FamilyInstance inst = gen_symmetric(2, 3);
    CHECK(inst.spec.kind == FamilyKind::SymmetricTree);
    CHECK(inst.spec.k == 2);
    CHECK(inst.spec.d == 3);
}

TEST_CASE("small members coincide with hand-built trees") {
    // symmetric k=2, d=2 is the star on four vertices
    FamilyInstance s22 = gen_symmetric(2, 2);
    CHECK(s22.tree.n == 4);
    CHECK(s22.tree.max_degree() == 3);
    CHECK(center(s22.tree).centers == std::vector<VertexId>{0});

    // caterpillar m=4, k=3 and the pendant path m=4 are the same shape
    CHECK(ahu_canonical(gen_caterpillar(4, 3).tree) ==
          ahu_canonical(gen_path_plus_pendant(4).tree));
}
