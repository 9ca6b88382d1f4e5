#include "hc/coloring.hpp"

#include <algorithm>
#include <cstdlib>

namespace hc {

long long Coloring::span() const {
    long long s = 0;
    for (long long c : color) s = std::max(s, c);
    return s;
}

bool is_permutation(const LinearOrder& o, int n) {
    if (static_cast<int>(o.order.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (VertexId v : o.order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

namespace {

void require_permutation(const LinearOrder& o, int n) {
    if (!is_permutation(o, n))
        throw NotAPermutation("order is not a permutation of 0.." + std::to_string(n - 1));
}

} // namespace

VerifyReport verify(const Tree& t, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != t.n)
        throw MissingVertexColor("coloring has " + std::to_string(c.color.size()) +
                                 " entries for " + std::to_string(t.n) + " vertices");
    for (long long col : c.color)
        if (col < 0) throw MissingVertexColor("vertex without a non-negative color");

    VerifyReport rep;
    for (VertexId u = 0; u < t.n; ++u) {
        std::vector<int> row = bfs_distances(t, u);
        for (VertexId v = u + 1; v < t.n; ++v) {
            long long slack = row[v] + std::llabs(c.color[u] - c.color[v]) - (t.n - 1);
            if (slack < 0) rep.violations.push_back({u, v, slack});
        }
    }
    rep.valid = rep.violations.empty();
    return rep;
}

long long lower_bound(const Tree& t) {
    if (t.n < 4 || t.max_degree() < 3)
        throw HypothesisViolated("bound requires at least 4 vertices and maximum degree at least 3");
    CenterInfo c = center(t);
    LevelTable lt = levels(t, c);
    long long n = t.n;
    return (n - 1) * (n - 1 - c.epsilon()) + c.epsilon_prime() - 2 * lt.total;
}

OrderConditionReport check_order(const Tree& t, const LinearOrder& o, bool require_gap) {
    require_permutation(o, t.n);
    CenterDecomposition d = decompose(t);
    const auto& ord = o.order;
    const int n = t.n;

    OrderConditionReport rep;
    auto fail = [&rep](bool& cond, int idx, const char* reason) {
        cond = false;
        if (!rep.first_violation) rep.first_violation = {idx, reason};
    };

    if (d.c.epsilon() == 0) {
        VertexId w = d.c.centers[0];
        if (ord[0] != w)
            fail(rep.cond_endpoints, 0, "order must start at the central vertex");
        else if (n >= 2 && !t.adjacent(w, ord[n - 1]))
            fail(rep.cond_endpoints, n - 1, "order must end at a neighbor of the central vertex");
    } else {
        VertexId a = d.c.centers[0], b = d.c.centers[1];
        bool ok = (ord[0] == a && ord[n - 1] == b) || (ord[0] == b && ord[n - 1] == a);
        if (!ok)
            fail(rep.cond_endpoints, 0, "order must start and end at the two central vertices");
    }

    for (int i = 0; i + 1 < n; ++i) {
        VertexId a = ord[i], b = ord[i + 1];
        bool ok;
        const char* reason;
        if (d.c.epsilon() == 0) {
            ok = d.lt.level[a] == 0 || d.lt.level[b] == 0 || d.anchor[a] != d.anchor[b];
            reason = "consecutive vertices share a branch";
        } else {
            ok = d.side[a] != d.side[b];
            reason = "consecutive vertices on the same side of the center edge";
        }
        if (!ok) fail(rep.cond_branches, i, reason);
        if (require_gap && 2 * bfs_distances(t, a)[b] > n)
            fail(rep.cond_gap, i, "consecutive distance exceeds half the order");
    }
    return rep;
}

Coloring coloring_from_order(const Tree& t, const LinearOrder& o) {
    require_permutation(o, t.n);
    CenterDecomposition d = decompose(t);
    const auto& ord = o.order;
    const long long n = t.n;
    const long long eps = d.c.epsilon();

    Coloring col;
    col.color.assign(t.n, 0);
    long long cur = 0;
    for (int i = 0; i + 1 < t.n; ++i) {
        long long inc = n - 1 - d.lt.level[ord[i]] - d.lt.level[ord[i + 1]] - eps;
        if (inc < 0)
            throw NegativeIncrement("step " + std::to_string(i) + " would decrease the color");
        cur += inc;
        col.color[ord[i + 1]] = cur;
    }
    return col;
}

Coloring greedy_coloring(const Tree& t, const LinearOrder& o) {
    require_permutation(o, t.n);
    const auto& ord = o.order;
    const long long n = t.n;
    std::vector<std::vector<int>> dist = distance_matrix(t);

    Coloring col;
    col.color.assign(t.n, 0);
    for (int i = 1; i < t.n; ++i) {
        long long c = 0;
        for (int j = 0; j < i; ++j) {
            long long need = n - 1 - dist[ord[j]][ord[i]];
            c = std::max(c, col.color[ord[j]] + std::max(0LL, need));
        }
        col.color[ord[i]] = c;
    }
    return col;
}

namespace {

// Backtracking engine behind find_qualified_order. Endpoints are fixed
// before the middle is filled; candidates are tried in ascending id order,
// so the first order found is deterministic.
struct QualifiedSearch {
    const Tree& t;
    const CenterDecomposition& d;
    bool require_gap;
    int n;
    std::vector<std::vector<int>> dist; // built only when require_gap

    std::vector<VertexId> seq;
    std::vector<char> used;

    // One-center bookkeeping: branch anchors compressed to group ids; the
    // center itself never occurs past position 0 so it needs no group.
    std::vector<int> group;
    std::vector<int> group_left;

    QualifiedSearch(const Tree& tree, const CenterDecomposition& dec, bool gap)
        : t(tree), d(dec), require_gap(gap), n(tree.n) {
        if (require_gap) dist = distance_matrix(t);
        seq.assign(n, -1);
        used.assign(n, 0);
    }

    bool gap_ok(VertexId a, VertexId b) const {
        return !require_gap || 2 * dist[a][b] <= n;
    }

    // --- one center ---------------------------------------------------

    bool pair_ok_single(VertexId a, VertexId b) const {
        bool branch_ok = d.lt.level[a] == 0 || d.lt.level[b] == 0 || d.anchor[a] != d.anchor[b];
        return branch_ok && gap_ok(a, b);
    }

    // Necessary condition for arranging the unused vertices (reserved one
    // included) into the remaining slots with no two consecutive from one
    // branch: no branch may hold more than half the slots, rounded up, and
    // a branch holding exactly that many must not match the vertex just
    // placed when the slot count is odd.
    bool alternation_feasible(int slots_left, int just_placed_group) const {
        int max_cnt = 0, max_group = -1;
        for (size_t g = 0; g < group_left.size(); ++g)
            if (group_left[g] > max_cnt) {
                max_cnt = group_left[g];
                max_group = static_cast<int>(g);
            }
        if (2 * max_cnt > slots_left + 1) return false;
        if (slots_left % 2 == 1 && 2 * max_cnt == slots_left + 1 && max_group == just_placed_group)
            return false;
        return true;
    }

    bool dfs_single(int pos, VertexId reserved) {
        VertexId prev = seq[pos - 1];
        if (pos == n - 1) {
            if (!pair_ok_single(prev, reserved)) return false;
            seq[pos] = reserved;
            return true;
        }
        for (VertexId v = 0; v < n; ++v) {
            if (used[v] || v == reserved || !pair_ok_single(prev, v)) continue;
            used[v] = 1;
            seq[pos] = v;
            --group_left[group[v]];
            if (alternation_feasible(n - 1 - pos, group[v]) && dfs_single(pos + 1, reserved))
                return true;
            ++group_left[group[v]];
            used[v] = 0;
        }
        return false;
    }

    std::optional<LinearOrder> run_single() {
        VertexId w = d.c.centers[0];
        group.assign(n, -1);
        int groups = 0;
        std::vector<int> anchor_group(n, -1);
        for (VertexId v = 0; v < n; ++v)
            if (v != w) {
                VertexId a = d.anchor[v];
                if (anchor_group[a] < 0) anchor_group[a] = groups++;
                group[v] = anchor_group[a];
            }
        seq[0] = w;
        used[w] = 1;
        if (n == 1) return LinearOrder{{w}};
        for (VertexId last : t.adj[w]) {
            group_left.assign(groups, 0);
            for (VertexId v = 0; v < n; ++v)
                if (v != w) ++group_left[group[v]];
            used[last] = 1;
            if (n == 2) {
                if (pair_ok_single(w, last)) {
                    seq[1] = last;
                    return LinearOrder{seq};
                }
            } else if (dfs_single(1, last)) {
                return LinearOrder{seq};
            }
            used[last] = 0;
        }
        return std::nullopt;
    }

    // --- two centers ---------------------------------------------------

    bool dfs_two(int pos, VertexId reserved, VertexId odd_side) {
        VertexId prev = seq[pos - 1];
        if (pos == n - 1) {
            if (!gap_ok(prev, reserved)) return false;
            seq[pos] = reserved;
            return true;
        }
        VertexId want = (pos % 2 == 1) ? odd_side : d.side[seq[0]];
        for (VertexId v = 0; v < n; ++v) {
            if (used[v] || v == reserved || d.side[v] != want || !gap_ok(prev, v)) continue;
            used[v] = 1;
            seq[pos] = v;
            if (dfs_two(pos + 1, reserved, odd_side)) return true;
            used[v] = 0;
        }
        return false;
    }

    std::optional<LinearOrder> run_two() {
        VertexId c0 = d.c.centers[0], c1 = d.c.centers[1];
        int side0 = 0;
        for (VertexId v = 0; v < n; ++v)
            if (d.side[v] == c0) ++side0;
        if (2 * side0 != n) return std::nullopt; // strict alternation needs equal sides
        for (auto [first, last] : {std::pair{c0, c1}, std::pair{c1, c0}}) {
            std::fill(used.begin(), used.end(), 0);
            seq[0] = first;
            used[first] = 1;
            used[last] = 1;
            if (n == 2) return LinearOrder{{first, last}};
            if (dfs_two(1, last, d.side[last])) return LinearOrder{seq};
        }
        return std::nullopt;
    }
};

constexpr int kMaxGapSearchN = 2048;

} // namespace

std::optional<LinearOrder> find_qualified_order(const Tree& t, bool require_gap) {
    if (require_gap && t.n > kMaxGapSearchN)
        throw BadParams("qualified-order search with the gap condition is limited to " +
                        std::to_string(kMaxGapSearchN) + " vertices");
    CenterDecomposition d = decompose(t);
    QualifiedSearch s(t, d, require_gap);
    return d.c.epsilon() == 0 ? s.run_single() : s.run_two();
}

std::optional<ConditionalHc> hc_via_conditions(const Tree& t) {
    if (t.n < 4 || t.max_degree() < 3)
        throw HypothesisViolated("conditions require at least 4 vertices and maximum degree at least 3");
    auto o = find_qualified_order(t, !is_db_half(t));
    if (!o) return std::nullopt;
    ConditionalHc out;
    out.order = *o;
    out.coloring = coloring_from_order(t, out.order);
    out.value = out.coloring.span();
    if (out.value != lower_bound(t))
        throw Error("internal: qualified order did not meet the bound");
    return out;
}

} // namespace hc
