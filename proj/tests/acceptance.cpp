// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hc/cli.hpp"
#include "hc/coloring.hpp"
#include "hc/families.hpp"
#include "hc/oracle.hpp"
#include "hc/tree.hpp"

using namespace hc;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& d) {
        if (ok) {
            ok = false;
            detail = d;
        }
    }
    void expect(bool cond, const std::string& d) {
        if (!cond) fail(d);
    }
};

Tree star(int k) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return validate_tree(k + 1, e);
}

template <typename Fn>
void for_each_grid_instance(Fn&& fn) {
    for (int k : {2, 3}) {
        for (int d : {2, 3, 4}) {
            fn(gen_symmetric(k, d), hc_symmetric(k, d), symmetric_vertex_count(k, d),
               symmetric_total_level(k, d), "symmetric(" + std::to_string(k) + "," +
               std::to_string(d) + ")");
        }
    }
    for (int m : {3, 4, 5}) {
        for (int k : {4, 5}) {
            fn(gen_firecracker(m, k), hc_firecracker(m, k), firecracker_vertex_count(m, k),
               firecracker_total_level(m, k), "firecracker(" + std::to_string(m) + "," +
               std::to_string(k) + ")");
        }
    }
    for (int m : {3, 4, 5}) {
        for (int k : {3, 4}) {
            fn(gen_caterpillar(m, k), hc_caterpillar(m, k), caterpillar_vertex_count(m, k),
               caterpillar_total_level(m, k), "caterpillar(" + std::to_string(m) + "," +
               std::to_string(k) + ")");
        }
    }
    for (int m = 3; m <= 8; ++m) {
        fn(gen_path_plus_pendant(m), hc_path_plus_pendant(m), path_plus_pendant_vertex_count(m),
           path_plus_pendant_total_level(m), "path-plus-pendant(" + std::to_string(m) + ")");
    }
}

// closed form == lower bound == span of the constructive coloring, and the
// coloring passes verification, on every grid instance
Check criterion_1() {
    Check c;
    for_each_grid_instance([&](const FamilyInstance& inst, long long formula, long long,
                               long long, const std::string& name) {
        long long lb = lower_bound(inst.tree);
        Coloring col = coloring_from_order(inst.tree, inst.canonical_order);
        c.expect(formula == lb, name + ": closed form " + std::to_string(formula) +
                                    " != bound " + std::to_string(lb));
        c.expect(col.span() == lb, name + ": span " + std::to_string(col.span()) +
                                       " != bound " + std::to_string(lb));
        c.expect(verify(inst.tree, col).valid, name + ": constructed coloring is invalid");
    });
    return c;
}

// the exact search reproduces the known values on six small trees
Check criterion_2() {
    Check c;
    auto probe = [&](const Tree& t, long long want, const std::string& name) {
        long long got = brute_force_hc(t).value;
        c.expect(got == want,
                 name + ": exact " + std::to_string(got) + " != " + std::to_string(want));
    };
    probe(star(3), 4, "4-star");
    probe(gen_symmetric(2, 3).tree, 12, "symmetric(2,3)");
    probe(gen_caterpillar(4, 3).tree, 12, "caterpillar(4,3)");
    probe(gen_caterpillar(3, 3).tree, 4, "caterpillar(3,3)");
    probe(gen_path_plus_pendant(4).tree, 12, "path-plus-pendant(4)");
    probe(gen_path_plus_pendant(5).tree, 12, "path-plus-pendant(5)");
    return c;
}

// vertex counts and level sums match their closed forms on every grid instance
Check criterion_3() {
    Check c;
    for_each_grid_instance([&](const FamilyInstance& inst, long long, long long n,
                               long long total, const std::string& name) {
        c.expect(inst.tree.n == n, name + ": n " + std::to_string(inst.tree.n) + " != " +
                                       std::to_string(n));
        long long got = levels(inst.tree, center(inst.tree)).total;
        c.expect(got == total, name + ": level sum " + std::to_string(got) + " != " +
                                   std::to_string(total));
    });
    return c;
}

// the exact minimum never drops below the bound, and meets it whenever the
// ordering conditions produce an order
Check criterion_4() {
    Check c;
    auto sweep = [&](const Tree& t, const std::string& name) {
        long long hcv = brute_force_hc(t).value;
        if (t.n >= 4 && t.max_degree() >= 3) {
            long long lb = lower_bound(t);
            c.expect(hcv >= lb, name + ": exact " + std::to_string(hcv) + " below bound " +
                                    std::to_string(lb));
            if (auto r = hc_via_conditions(t)) {
                c.expect(hcv == lb, name + ": order qualified but exact " +
                                        std::to_string(hcv) + " != bound " + std::to_string(lb));
                c.expect(r->value == hcv, name + ": conditional value mismatch");
            }
        }
    };
    for (int n = 4; n <= 8; ++n) {
        int idx = 0;
        for (const Tree& t : enumerate_trees(n)) {
            if (t.max_degree() >= 3) {
                sweep(t, "census n=" + std::to_string(n) + " #" + std::to_string(idx));
            }
            ++idx;
        }
    }
    for (unsigned long long seed = 1; seed <= 200; ++seed) {
        sweep(random_tree(9, seed), "random n=9 seed=" + std::to_string(seed));
    }
    return c;
}

// the center-based distance identity agrees with traversal on random trees
Check criterion_5() {
    Check c;
    for (unsigned long long seed = 1; seed <= 1000; ++seed) {
        int n = 2 + static_cast<int>(seed % 39); // spans 2..40
        Tree t = random_tree(n, seed);
        CenterInfo ci = center(t);
        LevelTable lt = levels(t, ci);
        std::vector<std::vector<int>> dist = distance_matrix(t);
        for (int u = 0; u < n && c.ok; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (distance_via_levels(t, ci, lt, u, v) != dist[u][v]) {
                    c.fail("seed " + std::to_string(seed) + ": pair " + std::to_string(u) +
                           "," + std::to_string(v));
                    break;
                }
            }
        }
    }
    return c;
}

// stars color to the squared value: k+1 vertices need span (k-1)^2
Check criterion_6() {
    Check c;
    for (int k = 3; k <= 6; ++k) {
        long long want = static_cast<long long>(k - 1) * (k - 1);
        long long got = brute_force_hc(star(k)).value;
        c.expect(got == want, "star k=" + std::to_string(k) + ": exact " + std::to_string(got) +
                                  " != " + std::to_string(want));
    }
    return c;
}

// the exact minimum respects (n-1)^2 minus the maximum ordered distance sum
Check criterion_7() {
    Check c;
    for (int n = 1; n <= 7; ++n) {
        int idx = 0;
        for (const Tree& t : enumerate_trees(n)) {
            long long hcv = brute_force_hc(t).value;
            long long d = brute_force_D(t);
            long long floor = static_cast<long long>(n - 1) * (n - 1) - d;
            c.expect(hcv >= floor, "census n=" + std::to_string(n) + " #" +
                                       std::to_string(idx) + ": exact " + std::to_string(hcv) +
                                       " below " + std::to_string(floor));
            ++idx;
        }
    }
    return c;
}

// tables and seeded searches repeat byte-identically
Check criterion_8() {
    Check c;
    auto capture = [](const std::vector<std::string>& args, int& code) {
        std::ostringstream out, err;
        code = run_cli(args, out, err);
        return out.str();
    };
    int code1 = 0, code2 = 0;
    std::string t1 = capture({"table", "--family", "pathpendant", "--m", "3..8"}, code1);
    std::string t2 = capture({"table", "--family", "pathpendant", "--m", "3..8"}, code2);
    c.expect(code1 == 0 && code2 == 0, "table run failed");
    c.expect(t1 == t2, "table output changed between runs");

    const std::string tree_path = "acceptance_tmp_rand9.tree";
    int gcode = 0;
    capture({"gen", "--family", "random", "--n", "9", "--seed", "123", "-o", tree_path}, gcode);
    c.expect(gcode == 0, "seeded generation failed");
    std::string o1 = capture({"oracle", tree_path}, code1);
    std::string o2 = capture({"oracle", tree_path}, code2);
    c.expect(code1 == 0 && code2 == 0, "oracle run failed");
    c.expect(o1 == o2, "oracle output changed between runs");
    std::string g2 = capture({"gen", "--family", "random", "--n", "9", "--seed", "123"}, gcode);
    std::ifstream f(tree_path);
    std::ostringstream stored;
    stored << f.rdbuf();
    c.expect(g2 == stored.str(), "seeded generation changed between runs");
    std::remove(tree_path.c_str());
    return c;
}

} // namespace

int main() {
    struct Row {
        int num;
        const char* what;
        Check (*fn)();
    };
    const Row rows[] = {
        {1, "family grids: closed form, lower bound and constructive span coincide", criterion_1},
        {2, "exact search reproduces the known small-tree values", criterion_2},
        {3, "family vertex counts and level sums match their closed forms", criterion_3},
        {4, "exact minimum never beats the bound and meets it when an order qualifies", criterion_4},
        {5, "center-based distance identity holds on seeded random trees", criterion_5},
        {6, "stars color to the squared closed form", criterion_6},
        {7, "exact minimum respects the ordered-distance-sum bound", criterion_7},
        {8, "generation, tables and exact search repeat byte-identically", criterion_8},
    };
    int failures = 0;
    for (const Row& row : rows) {
        Check c;
        try {
            c = row.fn();
        } catch (const std::exception& e) {
            c.fail(std::string("unexpected exception: ") + e.what());
        }
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << row.num << ": " << row.what;
        if (!c.ok) std::cout << " [" << c.detail << "]";
        std::cout << "\n";
        if (!c.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
