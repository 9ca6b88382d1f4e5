#include "hc/tree.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace hc {

int Tree::max_degree() const {
    int d = 0;
    for (const auto& a : adj) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Tree::adjacent(VertexId u, VertexId v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Tree validate_tree(int n, std::vector<std::pair<VertexId, VertexId>> edges) {
    if (n < 1) throw BadParams("vertex count must be at least 1");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BadVertexId("edge endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw CycleDetected("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw CycleDetected("duplicate edge");
    if (static_cast<int>(edges.size()) > n - 1)
        throw CycleDetected("more than n-1 edges");
    if (static_cast<int>(edges.size()) < n - 1)
        throw DisconnectedGraph("fewer than n-1 edges");

    Tree t;
    t.n = n;
    t.edges = std::move(edges);
    t.adj.assign(n, {});
    for (auto [u, v] : t.edges) {
        t.adj[u].push_back(v);
        t.adj[v].push_back(u);
    }
    for (auto& a : t.adj) std::sort(a.begin(), a.end());

    // n-1 edges and full reachability together rule out cycles.
    std::vector<char> seen(n, 0);
    std::deque<VertexId> q{0};
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (VertexId v : t.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push_back(v);
            }
    }
    if (reached < n) throw DisconnectedGraph("graph is not connected");
    return t;
}

CenterInfo center(const Tree& t) {
    if (t.n == 1) return {{0}};
    std::vector<int> deg(t.n);
    for (VertexId u = 0; u < t.n; ++u) deg[u] = static_cast<int>(t.adj[u].size());

    std::vector<VertexId> cur;
    for (VertexId u = 0; u < t.n; ++u)
        if (deg[u] == 1) cur.push_back(u);
    int remaining = t.n;
    while (remaining > 2) {
        std::vector<VertexId> next;
        for (VertexId leaf : cur) {
            --remaining;
            for (VertexId v : t.adj[leaf])
                if (--deg[v] == 1) next.push_back(v);
        }
        std::sort(next.begin(), next.end());
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return {cur};
}

CenterDecomposition decompose(const Tree& t) {
    CenterDecomposition d;
    d.c = center(t);
    d.lt.level.assign(t.n, -1);
    d.parent.assign(t.n, -1);
    d.anchor.assign(t.n, kNoAnchor);
    d.side.assign(t.n, -1);

    std::deque<VertexId> q;
    for (VertexId w : d.c.centers) {
        d.lt.level[w] = 0;
        d.side[w] = w;
        q.push_back(w);
    }
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (VertexId v : t.adj[u])
            if (d.lt.level[v] < 0) {
                d.lt.level[v] = d.lt.level[u] + 1;
                d.parent[v] = u;
                d.side[v] = d.side[u];
                d.anchor[v] = (d.lt.level[u] == 0) ? v : d.anchor[u];
                q.push_back(v);
            }
    }
    d.lt.total = 0;
    for (int lv : d.lt.level) d.lt.total += lv;
    return d;
}

LevelTable levels(const Tree& t, const CenterInfo& c) {
    LevelTable lt;
    lt.level.assign(t.n, -1);
    std::deque<VertexId> q;
    for (VertexId w : c.centers) {
        lt.level[w] = 0;
        q.push_back(w);
    }
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (VertexId v : t.adj[u])
            if (lt.level[v] < 0) {
                lt.level[v] = lt.level[u] + 1;
                q.push_back(v);
            }
    }
    lt.total = 0;
    for (int lv : lt.level) lt.total += lv;
    return lt;
}

BranchId branch_of(const Tree& t, const CenterInfo& c, VertexId u) {
    CenterDecomposition d = decompose(t);
    (void)c;
    return {d.anchor[u], d.side[u]};
}

int phi(const Tree& t, const CenterInfo& c, const LevelTable& lt, VertexId u, VertexId v) {
    CenterDecomposition d = decompose(t);
    if (c.epsilon() == 1 && d.side[u] != d.side[v]) return 0;
    VertexId a = u, b = v;
    while (lt.level[a] > lt.level[b]) a = d.parent[a];
    while (lt.level[b] > lt.level[a]) b = d.parent[b];
    while (a != b) {
        a = d.parent[a];
        b = d.parent[b];
    }
    return lt.level[a];
}

int delta(const Tree& t, const CenterInfo& c, VertexId u, VertexId v) {
    if (c.epsilon() == 0) return 0;
    CenterDecomposition d = decompose(t);
    return d.side[u] != d.side[v] ? 1 : 0;
}

std::vector<int> bfs_distances(const Tree& t, VertexId src) {
    std::vector<int> dist(t.n, -1);
    dist[src] = 0;
    std::deque<VertexId> q{src};
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (VertexId v : t.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

std::vector<std::vector<int>> distance_matrix(const Tree& t) {
    std::vector<std::vector<int>> m(t.n);
    for (VertexId u = 0; u < t.n; ++u) m[u] = bfs_distances(t, u);
    return m;
}

int distance(const Tree& t, VertexId u, VertexId v) {
    return bfs_distances(t, u)[v];
}

int distance_via_levels(const Tree& t, const CenterInfo& c, const LevelTable& lt, VertexId u, VertexId v) {
    return lt.level[u] + lt.level[v] - 2 * phi(t, c, lt, u, v) + delta(t, c, u, v);
}

int diameter(const Tree& t) {
    std::vector<int> d0 = bfs_distances(t, 0);
    VertexId far = 0;
    for (VertexId u = 0; u < t.n; ++u)
        if (d0[u] > d0[far]) far = u;
    std::vector<int> d1 = bfs_distances(t, far);
    return *std::max_element(d1.begin(), d1.end());
}

bool is_db_half(const Tree& t) {
    return 2 * diameter(t) <= t.n;
}

std::vector<VertexId> bfs_order(const Tree& t, const CenterInfo& c) {
    std::vector<VertexId> order;
    order.reserve(t.n);
    std::vector<char> seen(t.n, 0);
    std::deque<VertexId> q;
    for (VertexId w : c.centers) {
        seen[w] = 1;
        q.push_back(w);
    }
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        order.push_back(u);
        for (VertexId v : t.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                q.push_back(v);
            }
    }
    return order;
}

} // namespace hc
