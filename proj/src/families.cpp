#include "hc/families.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hc/errors.hpp"

namespace hc {

namespace {

using I128 = __int128;

// Generators materialize the whole tree, so keep instances at a size where
// O(n^2) downstream analyses stay usable.
constexpr long long kMaxFamilyVertices = 200000;

long long exact_div(I128 num, I128 den, const char* what) {
    if (den == 0 || num % den != 0) {
        throw Error(std::string("internal: ") + what + " is not integral");
    }
    I128 q = num / den;
    if (q > I128(9'000'000'000'000'000'000LL) || q < -I128(9'000'000'000'000'000'000LL)) {
        throw BadParams(std::string(what) + " overflows");
    }
    return static_cast<long long>(q);
}

void check_instance_size(long long n) {
    if (n > kMaxFamilyVertices) {
        throw BadParams("family instance exceeds the generator size cap");
    }
}

std::string joined_digits(const std::vector<int>& digits) {
    std::string s;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(digits[i]);
    }
    return s;
}

/// Validates a transcribed ordering; any defect (not a permutation, or a
/// failed ordering condition) falls back to the deterministic search so the
/// instance always ships a certified order.
void adopt_order(FamilyInstance& inst, std::optional<LinearOrder> literal) {
    bool require_gap = !is_db_half(inst.tree);
    if (literal && is_permutation(*literal, inst.tree.n) &&
        check_order(inst.tree, *literal, require_gap).all()) {
        inst.canonical_order = std::move(*literal);
        inst.order_from_fallback = false;
        return;
    }
    auto found = find_qualified_order(inst.tree, require_gap);
    if (!found) {
        throw Error("internal: no qualified order exists for a family instance");
    }
    inst.canonical_order = std::move(*found);
    inst.order_from_fallback = true;
}

/// Collects slot assignments position -> vertex, rejecting collisions and
/// out-of-range positions. Used by the transcribed index schemes.
struct SlotTable {
    std::vector<VertexId> slot;
    bool ok = true;

    explicit SlotTable(int n) : slot(n, -1) {}

    void place(long long pos, VertexId v) {
        if (!ok) return;
        if (pos < 0 || pos >= static_cast<long long>(slot.size()) || slot[pos] != -1) {
            ok = false;
            return;
        }
        slot[pos] = v;
    }

    std::optional<LinearOrder> finish() const {
        if (!ok) return std::nullopt;
        for (VertexId v : slot) {
            if (v == -1) return std::nullopt;
        }
        return LinearOrder{slot};
    }
};

// ---------------------------------------------------------------------------
// Symmetric trees.
//
// Every internal vertex has degree k+1 and all leaves have eccentricity d.
// Even d: a single center w whose k+1 subtrees branch k ways per level down
// to depth d/2. Odd d: two adjacent centers w, w', each with k subtrees down
// to depth (d-1)/2.

struct SymmetricShape {
    Tree tree;
    std::vector<std::string> labels;
    // Per vertex: distance from its center, digit string (child indexes on
    // the path below the branch root), branch number (even d) or side (odd).
    std::vector<int> depth;
    std::vector<std::vector<int>> digits;
    std::vector<int> branch; // even d: 1..k+1; odd d: 0 for w-side, 1 for w'-side
};

SymmetricShape build_symmetric(int k, int d) {
    long long n = symmetric_vertex_count(k, d);
    SymmetricShape shape;
    shape.labels.resize(n);
    shape.depth.assign(n, 0);
    shape.digits.resize(n);
    shape.branch.assign(n, 0);

    std::vector<std::pair<VertexId, VertexId>> edges;
    int next_id = 0;
    if (d % 2 == 0) {
        int half = d / 2;
        VertexId w = next_id++;
        shape.labels[w] = "w";
        std::vector<VertexId> frontier;
        for (int t = 1; t <= k + 1; ++t) {
            VertexId v = next_id++;
            edges.emplace_back(w, v);
            shape.labels[v] = "w^{" + std::to_string(t) + "}";
            shape.depth[v] = 1;
            shape.branch[v] = t;
            frontier.push_back(v);
        }
        for (int lvl = 2; lvl <= half; ++lvl) {
            std::vector<VertexId> next;
            for (VertexId p : frontier) {
                for (int i = 0; i < k; ++i) {
                    VertexId v = next_id++;
                    edges.emplace_back(p, v);
                    shape.depth[v] = lvl;
                    shape.branch[v] = shape.branch[p];
                    shape.digits[v] = shape.digits[p];
                    shape.digits[v].push_back(i);
                    shape.labels[v] = "w^{" + std::to_string(shape.branch[v]) + "}_{" +
                                      joined_digits(shape.digits[v]) + "}";
                    next.push_back(v);
                }
            }
            frontier = std::move(next);
        }
    } else {
        int half = (d - 1) / 2;
        VertexId w = next_id++;
        VertexId wp = next_id++;
        edges.emplace_back(w, wp);
        shape.labels[w] = "w";
        shape.labels[wp] = "w'";
        shape.branch[wp] = 1;
        std::vector<VertexId> frontier;
        for (int side = 0; side <= 1; ++side) {
            for (int i = 0; i < k; ++i) {
                VertexId v = next_id++;
                edges.emplace_back(side == 0 ? w : wp, v);
                shape.depth[v] = 1;
                shape.branch[v] = side;
                shape.digits[v] = {i};
                shape.labels[v] = (side == 0 ? "w_{" : "w'_{") + joined_digits(shape.digits[v]) + "}";
                frontier.push_back(v);
            }
        }
        for (int lvl = 2; lvl <= half; ++lvl) {
            std::vector<VertexId> next;
            for (int side = 0; side <= 1; ++side) {
                for (VertexId p : frontier) {
                    if (shape.branch[p] != side || shape.depth[p] != lvl - 1) continue;
                    for (int i = 0; i < k; ++i) {
                        VertexId v = next_id++;
                        edges.emplace_back(p, v);
                        shape.depth[v] = lvl;
                        shape.branch[v] = side;
                        shape.digits[v] = shape.digits[p];
                        shape.digits[v].push_back(i);
                        shape.labels[v] = (side == 0 ? "w_{" : "w'_{") +
                                          joined_digits(shape.digits[v]) + "}";
                        next.push_back(v);
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    shape.tree = validate_tree(static_cast<int>(n), std::move(edges));
    return shape;
}

/// Rank of a vertex within its branch/side under the published renaming:
/// digits are read little-endian (first digit least significant) and deeper
/// vertices come first. `levels_below` is the digit length of the deepest
/// level; the published offset sums powers one level too high in the even-d
/// case, a uniform shift over the whole tree, so ranks are taken relative to
/// the corrected base that makes them run 1..count.
long long branch_rank(const std::vector<int>& digits, int k, int max_len) {
    long long idx = 0;
    long long pw = 1;
    for (int digit : digits) {
        idx += digit * pw;
        pw *= k;
    }
    long long offset = 0; // vertices deeper than this one: sum of k^r, r = l+1..max_len
    pw = 1;
    for (int r = 1; r <= max_len; ++r) {
        pw *= k;
        if (r > static_cast<int>(digits.size())) offset += pw;
    }
    return 1 + idx + offset;
}

std::optional<LinearOrder> symmetric_literal_order(const SymmetricShape& shape, int k, int d) {
    int n = shape.tree.n;
    SlotTable slots(n);
    if (d % 2 == 0) {
        // Deep vertices cycle through the k+1 branches; the k+1 branch roots
        // close the order, the last one adjacent to the center.
        int max_len = d / 2 - 1; // digit length of the deepest vertices
        long long per_branch = 0;
        std::vector<std::vector<VertexId>> by_branch(k + 2);
        for (VertexId v = 0; v < n; ++v) {
            if (shape.depth[v] >= 2) by_branch[shape.branch[v]].push_back(v);
        }
        per_branch = by_branch[1].size();
        slots.place(0, 0);
        std::vector<std::vector<VertexId>> ranked(k + 2,
                                                  std::vector<VertexId>(per_branch + 1, -1));
        for (int t = 1; t <= k + 1; ++t) {
            for (VertexId v : by_branch[t]) {
                long long r = branch_rank(shape.digits[v], k, max_len);
                if (r < 1 || r > per_branch || ranked[t][r] != -1) return std::nullopt;
                ranked[t][r] = v;
            }
        }
        long long middle = static_cast<long long>(k + 1) * per_branch;
        for (long long j = 1; j <= middle; ++j) {
            int t = static_cast<int>((j - 1) % (k + 1)) + 1;
            long long s = (j + k) / (k + 1);
            slots.place(j, ranked[t][s]);
        }
        for (long long j = n - k - 1; j <= n - 1; ++j) {
            slots.place(j, static_cast<VertexId>(j - (n - k - 2))); // w^{t} has id t
        }
    } else {
        // Strict alternation between the two sides, starting at w and ending
        // at w'; within a side, deeper vertices first.
        int max_len = (d - 1) / 2;
        long long per_side = (n - 2) / 2;
        std::vector<std::vector<VertexId>> ranked(2, std::vector<VertexId>(per_side + 1, -1));
        for (VertexId v = 2; v < n; ++v) {
            long long r = branch_rank(shape.digits[v], k, max_len);
            if (r < 1 || r > per_side || ranked[shape.branch[v]][r] != -1) return std::nullopt;
            ranked[shape.branch[v]][r] = v;
        }
        slots.place(0, 0);
        slots.place(n - 1, 1);
        for (long long j = 1; j <= n - 2; ++j) {
            long long s = (j + 1) / 2;
            slots.place(j, ranked[j % 2 == 1 ? 1 : 0][s]);
        }
    }
    return slots.finish();
}

// ---------------------------------------------------------------------------
// Firecrackers.
//
// m stars of k vertices each; in copy i, vertex j=1 is the apex, j=2..k-1
// are its free leaves, and j=k lies on the path joining the copies.

int firecracker_id(int m, int k, int i, int j) {
    if (j == k) return i - 1;
    if (j == 1) return m + i - 1;
    return 2 * m + (i - 1) * (k - 2) + (j - 2);
}

std::optional<LinearOrder> firecracker_literal_order(const Tree& tree, int m, int k) {
    int n = tree.n;
    SlotTable slots(n);
    if (m % 2 == 0) {
        VertexId first = firecracker_id(m, k, m / 2 + 1, k);
        VertexId last = firecracker_id(m, k, m / 2, k);
        slots.place(0, first);
        slots.place(n - 1, last);
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= k; ++j) {
                VertexId v = firecracker_id(m, k, i, j);
                if (v == first || v == last) continue;
                long long t1 = (i <= m / 2)
                                   ? static_cast<long long>(j - 1) * m + 2 * i - 1
                                   : static_cast<long long>(j - 1) * m + 2 * (i - m / 2);
                if (t1 >= 1 && t1 <= n - m + 1 && slots.ok && slots.slot[t1] == -1) {
                    slots.place(t1, v);
                    continue;
                }
                long long t2;
                if (i < m / 2) {
                    t2 = static_cast<long long>(j - 1) * m + 2 * i - 1;
                } else if (i > m / 2 + 1) {
                    t2 = static_cast<long long>(j - 1) * m + 2 * (i - 1 - m / 2);
                } else {
                    return std::nullopt;
                }
                if (t2 < n - m + 2 || t2 > n - 2) return std::nullopt;
                slots.place(t2, v);
            }
        }
    } else {
        // Transcribed as printed; the row arithmetic does not produce a
        // permutation (see adopt_order's fallback), but it is kept so the
        // failure stays machine-checked rather than assumed.
        CenterInfo c = center(tree);
        VertexId w = c.centers.front();
        slots.place(0, w);
        int f = m / 2;
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= k; ++j) {
                VertexId v = firecracker_id(m, k, i, j);
                if (v == w) continue;
                long long t1;
                if (i == f) {
                    t1 = static_cast<long long>(j - 1) * m + (i - f);
                } else if (i < f) {
                    t1 = static_cast<long long>(j - 1) * m + 2 * i;
                } else {
                    t1 = static_cast<long long>(j - 1) * m + 2 * (i - f) + 1;
                }
                if (t1 >= 1 && t1 <= n - m && slots.ok && slots.slot[t1] == -1) {
                    slots.place(t1, v);
                    continue;
                }
                long long t2;
                if (i < f) {
                    t2 = static_cast<long long>(j - 1) * m - 2 * (i - f) + 1;
                } else if (i > f) {
                    t2 = static_cast<long long>(j - 1) * m + 2 * (m - i + 1);
                } else {
                    return std::nullopt;
                }
                if (t2 < n - m + 1 || t2 > n - 1) return std::nullopt;
                slots.place(t2, v);
            }
        }
    }
    return slots.finish();
}

// ---------------------------------------------------------------------------
// Caterpillars.
//
// Spine v_1..v_m; each inner spine vertex carries k-2 legs.

int caterpillar_spine_id(int i) { return i - 1; }

int caterpillar_leg_id(int m, int k, int i, int j) {
    return m + (i - 2) * (k - 2) + (j - 1);
}

std::optional<LinearOrder> caterpillar_literal_order(const Tree& tree, int m, int k) {
    // Transcribed as printed for both parities; the published rows collide
    // and leave positions empty, so this reliably hands over to the
    // fallback search, keeping the discrepancy machine-checked.
    int n = tree.n;
    SlotTable slots(n);
    if (m % 2 == 1) {
        int f = m / 2;
        slots.place(0, caterpillar_spine_id(f + 1));
        slots.place(n - 1, caterpillar_spine_id(f));
        for (int i = 1; i <= m; ++i) {
            VertexId v = caterpillar_spine_id(i);
            if (i == f || i == f + 1) continue;
            long long t;
            if (i < f) {
                t = 2 * i - 1;
            } else if (i > f + 1) {
                t = 2LL * (i - f);
            } else {
                return std::nullopt;
            }
            if (t < 1 || t > m - 2) return std::nullopt;
            slots.place(t, v);
        }
        for (int i = 2; i <= m - 1; ++i) {
            for (int j = 1; j <= k - 2; ++j) {
                long long t;
                if (i < f) {
                    t = static_cast<long long>(m - 2) * j + 2 * (i - 1);
                } else if (i == f) {
                    t = static_cast<long long>(m - 2) * j + 1;
                } else {
                    t = static_cast<long long>(m - 2) * j + 2 * (i - f) + 1;
                }
                if (t < m - 1 || t > n - 1) return std::nullopt;
                slots.place(t, caterpillar_leg_id(m, k, i, j));
            }
        }
    } else {
        slots.place(0, caterpillar_spine_id(m / 2 + 1));
        slots.place(n - 1, caterpillar_spine_id(m / 2));
        for (int i = 1; i <= m; ++i) {
            VertexId v = caterpillar_spine_id(i);
            if (i == m / 2 || i == m / 2 + 1) continue;
            long long t;
            if (i < m / 2 - 1) {
                t = 2 * i - 1;
            } else if (i > m / 2 + 1) {
                t = 2LL * (i - m / 2);
            } else {
                return std::nullopt;
            }
            if (t < 1 || t > m - 2) return std::nullopt;
            slots.place(t, v);
        }
        for (int i = 2; i <= m - 1; ++i) {
            for (int j = 1; j <= k - 2; ++j) {
                long long t;
                if (i <= m / 2) {
                    t = static_cast<long long>(m - 2) * j + 2 * (i - 2) + 1;
                } else {
                    t = static_cast<long long>(m - 2) * j + 2 * (i - m / 2);
                }
                if (t < m - 1 || t > n - 1) return std::nullopt;
                slots.place(t, caterpillar_leg_id(m, k, i, j));
            }
        }
    }
    return slots.finish();
}

// ---------------------------------------------------------------------------
// Path plus pendant(s).

std::optional<LinearOrder> path_plus_pendant_order(int m) {
    if (m % 2 == 1) {
        int c = (m + 1) / 2;
        int n = m + 1;
        std::vector<VertexId> ord(n, -1);
        ord[0] = c - 1;
        for (int j = 1; j <= (m - 1) / 2; ++j) {
            ord[2 * j - 1] = j - 1;
            ord[2 * j] = c + j - 1;
        }
        ord[n - 1] = m; // the pendant
        return LinearOrder{std::move(ord)};
    }
    int n = m + 2;
    std::vector<VertexId> ord(n, -1);
    ord[0] = m / 2; // v_{m/2+1}
    for (int j = 1; j <= m / 2 - 1; ++j) {
        ord[2 * j - 1] = j - 1;           // v_j
        ord[2 * j] = m / 2 + j;           // v_{m/2+1+j}
    }
    ord[m - 1] = m;     // pendant at v_{m/2}
    ord[m] = m + 1;     // pendant at v_{m/2+1}
    ord[m + 1] = m / 2 - 1; // v_{m/2}
    return LinearOrder{std::move(ord)};
}

} // namespace

std::string family_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::SymmetricTree: return "symmetric";
    case FamilyKind::Firecracker: return "firecracker";
    case FamilyKind::Caterpillar: return "caterpillar";
    case FamilyKind::PathPlusPendant: return "path-plus-pendant";
    }
    throw BadParams("unknown family kind");
}

FamilyInstance gen_symmetric(int k, int d) {
    SymmetricShape shape = build_symmetric(k, d);
    std::optional<LinearOrder> literal = symmetric_literal_order(shape, k, d);
    FamilyInstance inst;
    inst.tree = std::move(shape.tree);
    inst.spec = FamilySpec{FamilyKind::SymmetricTree, 0, k, d};
    inst.labels = std::move(shape.labels);
    adopt_order(inst, std::move(literal));
    return inst;
}

FamilyInstance gen_firecracker(int m, int k) {
    long long n = firecracker_vertex_count(m, k);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::string> labels(n);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= k; ++j) {
            labels[firecracker_id(m, k, i, j)] =
                "w^{" + std::to_string(i) + "}_{" + std::to_string(j) + "}";
        }
        if (i < m) edges.emplace_back(i - 1, i);
        edges.emplace_back(firecracker_id(m, k, i, k), firecracker_id(m, k, i, 1));
        for (int j = 2; j <= k - 1; ++j) {
            edges.emplace_back(firecracker_id(m, k, i, 1), firecracker_id(m, k, i, j));
        }
    }
    FamilyInstance inst;
    inst.tree = validate_tree(static_cast<int>(n), std::move(edges));
    inst.spec = FamilySpec{FamilyKind::Firecracker, m, k, 0};
    inst.labels = std::move(labels);
    adopt_order(inst, firecracker_literal_order(inst.tree, m, k));
    return inst;
}

FamilyInstance gen_caterpillar(int m, int k) {
    long long n = caterpillar_vertex_count(m, k);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::string> labels(n);
    for (int i = 1; i <= m; ++i) {
        labels[caterpillar_spine_id(i)] = "v_{" + std::to_string(i) + "}";
        if (i < m) edges.emplace_back(i - 1, i);
    }
    for (int i = 2; i <= m - 1; ++i) {
        for (int j = 1; j <= k - 2; ++j) {
            int leg = caterpillar_leg_id(m, k, i, j);
            labels[leg] = "v_{" + std::to_string(i) + "}^{" + std::to_string(j) + "}";
            edges.emplace_back(caterpillar_spine_id(i), leg);
        }
    }
    FamilyInstance inst;
    inst.tree = validate_tree(static_cast<int>(n), std::move(edges));
    inst.spec = FamilySpec{FamilyKind::Caterpillar, m, k, 0};
    inst.labels = std::move(labels);
    adopt_order(inst, caterpillar_literal_order(inst.tree, m, k));
    return inst;
}

FamilyInstance gen_path_plus_pendant(int m) {
    long long n = path_plus_pendant_vertex_count(m);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::string> labels(n);
    for (int i = 1; i <= m; ++i) {
        labels[i - 1] = "v_{" + std::to_string(i) + "}";
        if (i < m) edges.emplace_back(i - 1, i);
    }
    if (m % 2 == 1) {
        labels[m] = "v'";
        edges.emplace_back((m - 1) / 2, m); // pendant at the center v_{(m+1)/2}
    } else {
        labels[m] = "v'";
        labels[m + 1] = "v''";
        edges.emplace_back(m / 2 - 1, m);     // pendant at v_{m/2}
        edges.emplace_back(m / 2, m + 1);     // pendant at v_{m/2+1}
    }
    FamilyInstance inst;
    inst.tree = validate_tree(static_cast<int>(n), std::move(edges));
    inst.spec = FamilySpec{FamilyKind::PathPlusPendant, m, 0, 0};
    inst.labels = std::move(labels);
    adopt_order(inst, path_plus_pendant_order(m));
    return inst;
}

// ---------------------------------------------------------------------------
// Closed forms.

namespace {

void require_symmetric_params(int k, int d) {
    if (k < 2 || d < 2) throw BadParams("symmetric tree needs k >= 2 and d >= 2");
}

void require_firecracker_params(int m, int k) {
    if (m < 3 || k < 4) throw BadParams("firecracker needs m >= 3 and k >= 4");
}

void require_caterpillar_params(int m, int k) {
    if (m < 3 || k < 3) throw BadParams("caterpillar needs m >= 3 and k >= 3");
}

void require_path_plus_pendant_params(int m) {
    if (m < 3) throw BadParams("path-plus-pendant needs m >= 3");
}

long long pow_ll(int k, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > kMaxFamilyVertices) throw BadParams("family instance exceeds the generator size cap");
        r *= k;
    }
    return r;
}

} // namespace

long long symmetric_vertex_count(int k, int d) {
    require_symmetric_params(k, d);
    long long n;
    if (d % 2 == 0) {
        long long g = 0, pw = 1; // 1 + k + ... + k^{d/2-1}
        for (int r = 0; r < d / 2; ++r) {
            g += pw;
            if (g > kMaxFamilyVertices) throw BadParams("family instance exceeds the generator size cap");
            pw *= k;
        }
        n = 1 + static_cast<long long>(k + 1) * g;
    } else {
        long long s = 0, pw = 1; // k + k^2 + ... + k^{(d-1)/2}
        for (int r = 1; r <= (d - 1) / 2; ++r) {
            pw *= k;
            s += pw;
            if (s > kMaxFamilyVertices) throw BadParams("family instance exceeds the generator size cap");
        }
        n = 2 * (1 + s);
    }
    check_instance_size(n);
    return n;
}

long long symmetric_total_level(int k, int d) {
    symmetric_vertex_count(k, d); // validates parameters and size
    I128 e = k - 1;
    if (d % 2 == 0) {
        I128 kk = pow_ll(k, d / 2);
        I128 num = I128(k + 1) * (I128(d) * kk * e - 2 * (kk - 1));
        return exact_div(num, 2 * e * e, "symmetric total level");
    }
    I128 kk = pow_ll(k, (d - 1) / 2);
    I128 num = I128(k) * (I128(d - 1) * kk * e - 2 * (kk - 1));
    return exact_div(num, e * e, "symmetric total level");
}

long long hc_symmetric(int k, int d) {
    symmetric_vertex_count(k, d);
    I128 e = k - 1;
    if (d % 2 == 0) {
        I128 kk = pow_ll(k, d / 2);
        I128 a = I128(k + 1) * (kk - 1);
        I128 num = a * (a + 2 - e * d) - I128(k + 1) * d * e + e * e;
        return exact_div(num, e * e, "symmetric chromatic closed form");
    }
    I128 kk = pow_ll(k, (d - 1) / 2);
    I128 num = 4 * I128(k) * (kk - 1) * (I128(k) * (kk - 1) + 1) +
               2 * I128(k) * (2 - d) * kk * e - 2 * I128(k) * e;
    return exact_div(num, e * e, "symmetric chromatic closed form");
}

long long firecracker_vertex_count(int m, int k) {
    require_firecracker_params(m, k);
    long long n = static_cast<long long>(m) * k;
    check_instance_size(n);
    return n;
}

long long firecracker_total_level(int m, int k) {
    firecracker_vertex_count(m, k);
    I128 mm = m, kk = k;
    if (m % 2 == 1) {
        return exact_div(kk * mm * mm + (8 * kk - 12) * mm - kk, 4, "firecracker total level");
    }
    return exact_div(kk * mm * mm + 6 * mm * (kk - 2), 4, "firecracker total level");
}

long long hc_firecracker(int m, int k) {
    firecracker_vertex_count(m, k);
    I128 mm = m, kk = k;
    I128 base = mm * mm * kk * kk - 6 * mm * (kk - 1);
    if (m % 2 == 1) {
        return exact_div(2 * base - kk * (mm * mm - 1) + 4, 2, "firecracker chromatic closed form");
    }
    return exact_div(2 * base - kk * mm * mm + 4, 2, "firecracker chromatic closed form");
}

long long caterpillar_vertex_count(int m, int k) {
    require_caterpillar_params(m, k);
    long long n = m + static_cast<long long>(m - 2) * (k - 2);
    check_instance_size(n);
    return n;
}

long long caterpillar_total_level(int m, int k) {
    caterpillar_vertex_count(m, k);
    I128 mm = m, kk = k;
    if (m % 2 == 1) {
        return exact_div((mm * mm - 5) * (kk - 1), 4, "caterpillar total level") + 1;
    }
    return exact_div(mm * (mm - 2) * (kk - 1), 4, "caterpillar total level");
}

long long hc_caterpillar(int m, int k) {
    caterpillar_vertex_count(m, k);
    I128 mm = m, kk = k;
    I128 sq = (mm - 2) * (mm - 2) * kk * kk;
    if (m % 2 == 1) {
        I128 num = 2 * sq - (5 * mm * mm - 20 * mm + 19) * kk + (3 * mm * mm - 12 * mm + 11);
        return exact_div(num, 2, "caterpillar chromatic closed form");
    }
    I128 num = 2 * sq - (5 * mm * mm - 20 * mm + 20) * kk + (3 * mm * mm - 12 * mm + 12);
    return exact_div(num, 2, "caterpillar chromatic closed form");
}

long long path_plus_pendant_vertex_count(int m) {
    require_path_plus_pendant_params(m);
    long long n = (m % 2 == 1) ? m + 1 : m + 2;
    check_instance_size(n);
    return n;
}

long long path_plus_pendant_total_level(int m) {
    path_plus_pendant_vertex_count(m);
    I128 mm = m;
    if (m % 2 == 1) {
        return exact_div(mm * mm + 3, 4, "path-plus-pendant total level");
    }
    return exact_div(mm * mm - 2 * mm + 8, 4, "path-plus-pendant total level");
}

long long hc_path_plus_pendant(int m) {
    path_plus_pendant_vertex_count(m);
    I128 mm = m;
    if (m % 2 == 1) {
        return exact_div(mm * mm - 1, 2, "path-plus-pendant chromatic closed form");
    }
    return exact_div(mm * mm + 4 * mm - 8, 2, "path-plus-pendant chromatic closed form");
}

} // namespace hc
