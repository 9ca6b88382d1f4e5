#include "hc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <utility>

#include "hc/errors.hpp"

namespace hc {

namespace {

using Clock = std::chrono::steady_clock;

/// Shared node/time accounting for a search. tick() is called once per
/// explored node and flips `exceeded` when a limit runs out; workers poll
/// the flag and unwind.
struct BudgetGuard {
    long long node_limit = 0;
    bool has_deadline = false;
    Clock::time_point deadline;
    std::atomic<long long> nodes{0};
    std::atomic<bool> exceeded{false};

    explicit BudgetGuard(const OracleBudget& b) : node_limit(b.node_limit) {
        if (b.time_limit_seconds > 0) {
            has_deadline = true;
            deadline = Clock::now() +
                       std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(b.time_limit_seconds));
        }
    }

    bool tick(long long local_count) {
        long long total = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_limit > 0 && total > node_limit) {
            exceeded.store(true, std::memory_order_relaxed);
        } else if (has_deadline && (local_count == 1 || (local_count & 255) == 0) &&
                   Clock::now() > deadline) {
            exceeded.store(true, std::memory_order_relaxed);
        }
        return !exceeded.load(std::memory_order_relaxed);
    }
};

class ExactHcSearch {
  public:
    ExactHcSearch(const Tree& t, const OracleBudget& budget) : t_(t), n_(t.n), guard_(budget) {
        if (n_ > budget.max_n) {
            throw Inexhaustive("tree order " + std::to_string(n_) +
                               " exceeds the exact-search cap of " +
                               std::to_string(budget.max_n));
        }
        dist_ = distance_matrix(t_);
        w_.assign(n_, std::vector<long long>(n_, 0));
        std::vector<int> ecc(n_, 0);
        for (int u = 0; u < n_; ++u) {
            for (int v = 0; v < n_; ++v) {
                w_[u][v] = std::max(0LL, static_cast<long long>(n_) - 1 - dist_[u][v]);
                ecc[u] = std::max(ecc[u], dist_[u][v]);
            }
        }
        cand_.resize(n_);
        std::iota(cand_.begin(), cand_.end(), 0);
        std::sort(cand_.begin(), cand_.end(), [&](VertexId a, VertexId b) {
            if (ecc[a] != ecc[b]) return ecc[a] > ecc[b];
            return a < b;
        });
        greedy_ = greedy_coloring(t_, LinearOrder{bfs_order(t_, center(t_))});
        lb_ = -1;
        if (n_ >= 4 && t_.max_degree() >= 3) lb_ = lower_bound(t_);
    }

    /// Two-phase search: find the optimal value (optionally spreading
    /// first-position subtrees across threads), then a deterministic serial
    /// pass for the witness, so the reported coloring never depends on
    /// scheduling.
    OracleHcResult run(bool parallel) {
        if (n_ == 1) {
            return OracleHcResult{0, Coloring{{0}}, 0};
        }
        long long greedy_span = greedy_.span();
        if (lb_ >= 0 && greedy_span <= lb_) {
            return OracleHcResult{greedy_span, greedy_, 0};
        }
        std::atomic<long long> best(greedy_span);
        std::atomic<bool> stop(false);
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (int i = 0; i < n_; ++i) {
                if (stop.load(std::memory_order_relaxed) ||
                    guard_.exceeded.load(std::memory_order_relaxed)) {
                    continue;
                }
                Worker wk = make_worker();
                seed_first(wk, cand_[i]);
                dfs_value(wk, 1, best, stop);
            }
        } else {
            Worker wk = make_worker();
            dfs_value(wk, 0, best, stop);
        }
        if (guard_.exceeded.load()) {
            throw Inexhaustive("exact search budget exhausted before completion");
        }
        OracleHcResult res;
        res.value = best.load();
        res.nodes_explored = guard_.nodes.load();
        if (res.value == greedy_span) {
            res.witness = greedy_;
            return res;
        }
        Worker wk = make_worker();
        Coloring out;
        if (!dfs_witness(wk, 0, res.value, out)) {
            if (guard_.exceeded.load()) {
                throw Inexhaustive("exact search budget exhausted before completion");
            }
            throw Error("internal: optimal value has no witness ordering");
        }
        res.witness = std::move(out);
        res.nodes_explored = guard_.nodes.load();
        return res;
    }

    /// Single-phase reference: one depth-first pass that keeps the best
    /// (value, witness) seen. Produces the identical result to run():
    /// improvements are strict, so the recorded witness is the first leaf in
    /// depth-first order that attains the optimum.
    OracleHcResult run_single_phase() {
        if (n_ == 1) {
            return OracleHcResult{0, Coloring{{0}}, 0};
        }
        long long greedy_span = greedy_.span();
        if (lb_ >= 0 && greedy_span <= lb_) {
            return OracleHcResult{greedy_span, greedy_, 0};
        }
        best_single_ = greedy_span;
        witness_single_ = greedy_;
        stop_single_ = false;
        Worker wk = make_worker();
        dfs_single(wk, 0);
        if (guard_.exceeded.load()) {
            throw Inexhaustive("exact search budget exhausted before completion");
        }
        return OracleHcResult{best_single_, witness_single_, guard_.nodes.load()};
    }

  private:
    struct Worker {
        std::vector<std::vector<long long>> mincol; // per depth: forced minimum color
        std::vector<long long> cols;                // color of seq[i]
        std::vector<VertexId> seq;
        std::vector<char> used;
        long long local_nodes = 0;
    };

    Worker make_worker() const {
        Worker wk;
        wk.mincol.assign(n_ + 1, std::vector<long long>(n_, 0));
        wk.cols.assign(n_, 0);
        wk.seq.assign(n_, -1);
        wk.used.assign(n_, 0);
        return wk;
    }

    void seed_first(Worker& wk, VertexId v) const {
        wk.used[v] = 1;
        wk.seq[0] = v;
        wk.cols[0] = 0;
        for (int u = 0; u < n_; ++u) {
            wk.mincol[1][u] = wk.used[u] ? 0 : w_[v][u];
        }
    }

    void place(Worker& wk, int depth, VertexId v, long long cv) const {
        wk.used[v] = 1;
        wk.seq[depth] = v;
        wk.cols[depth] = cv;
        const auto& cur = wk.mincol[depth];
        auto& next = wk.mincol[depth + 1];
        for (int u = 0; u < n_; ++u) {
            next[u] = wk.used[u] ? 0 : std::max(cur[u], cv + w_[v][u]);
        }
    }

    // Largest color any completion of this prefix must still pay: the span
    // so far and every unplaced vertex's forced minimum.
    long long node_bound(const Worker& wk, int depth) const {
        const auto& mc = wk.mincol[depth];
        long long bound = depth > 0 ? wk.cols[depth - 1] : 0;
        for (int u = 0; u < n_; ++u) {
            if (!wk.used[u]) bound = std::max(bound, mc[u]);
        }
        return bound;
    }

    void dfs_value(Worker& wk, int depth, std::atomic<long long>& best,
                   std::atomic<bool>& stop) {
        if (stop.load(std::memory_order_relaxed)) return;
        if (!guard_.tick(++wk.local_nodes)) return;
        if (depth == n_) {
            long long span = wk.cols[n_ - 1];
            long long cur = best.load(std::memory_order_relaxed);
            while (span < cur &&
                   !best.compare_exchange_weak(cur, span, std::memory_order_relaxed)) {
            }
            if (lb_ >= 0 && best.load(std::memory_order_relaxed) <= lb_) {
                stop.store(true, std::memory_order_relaxed);
            }
            return;
        }
        if (node_bound(wk, depth) >= best.load(std::memory_order_relaxed)) return;
        const auto& mc = wk.mincol[depth];
        for (VertexId v : cand_) {
            if (wk.used[v]) continue;
            long long cv = mc[v];
            if (cv >= best.load(std::memory_order_relaxed)) continue;
            place(wk, depth, v, cv);
            dfs_value(wk, depth + 1, best, stop);
            wk.used[v] = 0;
            if (stop.load(std::memory_order_relaxed) ||
                guard_.exceeded.load(std::memory_order_relaxed)) {
                return;
            }
        }
    }

    bool dfs_witness(Worker& wk, int depth, long long target, Coloring& out) {
        if (!guard_.tick(++wk.local_nodes)) return false;
        if (depth == n_) {
            out.color.assign(n_, 0);
            for (int i = 0; i < n_; ++i) out.color[wk.seq[i]] = wk.cols[i];
            return true;
        }
        if (node_bound(wk, depth) > target) return false;
        const auto& mc = wk.mincol[depth];
        for (VertexId v : cand_) {
            if (wk.used[v]) continue;
            long long cv = mc[v];
            if (cv > target) continue;
            place(wk, depth, v, cv);
            if (dfs_witness(wk, depth + 1, target, out)) return true;
            wk.used[v] = 0;
            if (guard_.exceeded.load(std::memory_order_relaxed)) return false;
        }
        return false;
    }

    void dfs_single(Worker& wk, int depth) {
        if (stop_single_) return;
        if (!guard_.tick(++wk.local_nodes)) return;
        if (depth == n_) {
            long long span = wk.cols[n_ - 1];
            if (span < best_single_) {
                best_single_ = span;
                witness_single_.color.assign(n_, 0);
                for (int i = 0; i < n_; ++i) witness_single_.color[wk.seq[i]] = wk.cols[i];
                if (lb_ >= 0 && best_single_ <= lb_) stop_single_ = true;
            }
            return;
        }
        if (node_bound(wk, depth) >= best_single_) return;
        const auto& mc = wk.mincol[depth];
        for (VertexId v : cand_) {
            if (wk.used[v]) continue;
            long long cv = mc[v];
            if (cv >= best_single_) continue;
            place(wk, depth, v, cv);
            dfs_single(wk, depth + 1);
            wk.used[v] = 0;
            if (stop_single_ || guard_.exceeded.load(std::memory_order_relaxed)) return;
        }
    }

    const Tree& t_;
    int n_;
    BudgetGuard guard_;
    std::vector<std::vector<int>> dist_;
    std::vector<std::vector<long long>> w_;
    std::vector<VertexId> cand_;
    Coloring greedy_;
    long long lb_ = -1;
    long long best_single_ = 0;
    Coloring witness_single_;
    bool stop_single_ = false;
};

std::vector<std::pair<VertexId, VertexId>> sequence_decode(int n, const std::vector<int>& seq) {
    std::vector<int> deg(n, 1);
    for (int x : seq) deg[x]++;
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

std::string ahu_encode(const Tree& t, VertexId v, VertexId parent) {
    std::vector<std::string> kids;
    for (VertexId u : t.adj[v]) {
        if (u != parent) kids.push_back(ahu_encode(t, u, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& kid : kids) s += kid;
    s += ")";
    return s;
}

} // namespace

OracleHcResult brute_force_hc(const Tree& t, const OracleBudget& budget) {
    return ExactHcSearch(t, budget).run(true);
}

OracleHcResult brute_force_hc_serial(const Tree& t, const OracleBudget& budget) {
    return ExactHcSearch(t, budget).run_single_phase();
}

long long brute_force_D(const Tree& t, const OracleBudget& budget) {
    int n = t.n;
    if (n > budget.max_n) {
        throw Inexhaustive("tree order " + std::to_string(n) +
                           " exceeds the exact-search cap of " + std::to_string(budget.max_n));
    }
    if (n == 1) return 0;
    auto dist = distance_matrix(t);
    int full = 1 << n;
    const long long kUnset = -1;
    std::vector<std::vector<long long>> dp(full, std::vector<long long>(n, kUnset));
    for (int v = 0; v < n; ++v) dp[1 << v][v] = 0;
    for (int mask = 1; mask < full; ++mask) {
        for (int last = 0; last < n; ++last) {
            if (!(mask & (1 << last)) || dp[mask][last] == kUnset) continue;
            for (int next = 0; next < n; ++next) {
                if (mask & (1 << next)) continue;
                int nm = mask | (1 << next);
                long long cand = dp[mask][last] + dist[last][next];
                if (cand > dp[nm][next]) dp[nm][next] = cand;
            }
        }
    }
    long long best = 0;
    for (int v = 0; v < n; ++v) best = std::max(best, dp[full - 1][v]);
    return best;
}

std::string ahu_canonical(const Tree& t) {
    CenterInfo c = center(t);
    if (c.centers.size() == 1) {
        return "1" + ahu_encode(t, c.centers[0], -1);
    }
    std::string a = ahu_encode(t, c.centers[0], c.centers[1]);
    std::string b = ahu_encode(t, c.centers[1], c.centers[0]);
    return "2" + (a <= b ? a + b : b + a);
}

std::vector<Tree> enumerate_trees(int n) {
    if (n < 1) throw BadParams("tree enumeration needs n >= 1");
    if (n > 10) throw BudgetExceeded("tree enumeration is capped at n = 10");
    if (n == 1) return {validate_tree(1, {})};
    if (n == 2) return {validate_tree(2, {{0, 1}})};

    long long total = 1;
    for (int i = 0; i < n - 2; ++i) total *= n;

    // Fixed chunking (not thread count) so the merged result is identical
    // under any schedule; ties between chunks resolve by smallest sequence
    // index.
    const int chunks = 64;
    using ClassMap = std::map<std::string, std::pair<long long, Tree>>;
    std::vector<ClassMap> partial(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (int c = 0; c < chunks; ++c) {
        long long lo = total * c / chunks;
        long long hi = total * (c + 1) / chunks;
        std::vector<int> seq(n - 2);
        for (long long idx = lo; idx < hi; ++idx) {
            long long rest = idx;
            for (int i = 0; i < n - 2; ++i) {
                seq[i] = static_cast<int>(rest % n);
                rest /= n;
            }
            Tree t = validate_tree(n, sequence_decode(n, seq));
            std::string canon = ahu_canonical(t);
            // Indices ascend within a chunk, so the first hit per class wins.
            auto it = partial[c].find(canon);
            if (it == partial[c].end()) {
                partial[c].emplace(std::move(canon), std::make_pair(idx, std::move(t)));
            }
        }
    }
    ClassMap merged;
    for (auto& pm : partial) {
        for (auto& [canon, entry] : pm) {
            auto it = merged.find(canon);
            if (it == merged.end() || entry.first < it->second.first) {
                merged.insert_or_assign(canon, std::move(entry));
            }
        }
    }
    std::vector<Tree> out;
    out.reserve(merged.size());
    for (auto& [canon, entry] : merged) out.push_back(std::move(entry.second));
    return out;
}

Tree random_tree(int n, unsigned long long seed) {
    if (n < 1) throw BadParams("random tree needs n >= 1");
    if (n == 1) return validate_tree(1, {});
    if (n == 2) return validate_tree(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = pick(rng);
    return validate_tree(n, sequence_decode(n, seq));
}

} // namespace hc
