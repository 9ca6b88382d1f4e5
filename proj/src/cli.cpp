#include "hc/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hc/coloring.hpp"
#include "hc/errors.hpp"
#include "hc/families.hpp"
#include "hc/io.hpp"
#include "hc/oracle.hpp"
#include "hc/tree.hpp"

namespace hc {

namespace {

constexpr const char* kBoundNote = "n/a (needs n >= 4 and max degree >= 3)";

bool meets_bound_hypotheses(const Tree& t) {
    return t.n >= 4 && t.max_degree() >= 3;
}

template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
    if (path.empty()) {
        fn(fallback);
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "' for writing");
    fn(f);
}

struct Range {
    long long lo = 0;
    long long hi = 0;
};

Range parse_range(const std::string& s, const char* flag) {
    auto to_ll = [&](const std::string& part) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(part, &used);
            if (used == part.size()) return v;
        } catch (...) {
        }
        throw ParseError(std::string("bad value for ") + flag + ": '" + s +
                         "' (expected A or A..B)");
    };
    Range r;
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        r.lo = r.hi = to_ll(s);
    } else {
        r.lo = to_ll(s.substr(0, pos));
        r.hi = to_ll(s.substr(pos + 2));
    }
    if (r.lo > r.hi) throw ParseError(std::string("empty range for ") + flag + ": '" + s + "'");
    return r;
}

int int_param(long long v, const char* flag) {
    if (v < -1000000000LL || v > 1000000000LL) {
        throw BadParams(std::string(flag) + " value is out of range");
    }
    return static_cast<int>(v);
}

FamilyInstance generate_family(const std::string& family, long long m, long long k, long long d,
                               bool has_m, bool has_k, bool has_d) {
    auto need = [&](bool have, const char* flag) {
        if (!have) throw ParseError("family '" + family + "' requires " + flag);
    };
    auto reject = [&](bool have, const char* flag) {
        if (have) throw ParseError("family '" + family + "' does not take " + flag);
    };
    if (family == "symmetric") {
        need(has_k, "--k");
        need(has_d, "--d");
        reject(has_m, "--m");
        return gen_symmetric(int_param(k, "--k"), int_param(d, "--d"));
    }
    if (family == "firecracker") {
        need(has_m, "--m");
        need(has_k, "--k");
        reject(has_d, "--d");
        return gen_firecracker(int_param(m, "--m"), int_param(k, "--k"));
    }
    if (family == "caterpillar") {
        need(has_m, "--m");
        need(has_k, "--k");
        reject(has_d, "--d");
        return gen_caterpillar(int_param(m, "--m"), int_param(k, "--k"));
    }
    if (family == "pathpendant" || family == "path-plus-pendant") {
        need(has_m, "--m");
        reject(has_k, "--k");
        reject(has_d, "--d");
        return gen_path_plus_pendant(int_param(m, "--m"));
    }
    throw ParseError("unknown family '" + family + "'");
}

std::vector<std::pair<std::string, long long>> family_params(const FamilySpec& spec) {
    switch (spec.kind) {
    case FamilyKind::SymmetricTree: return {{"k", spec.k}, {"d", spec.d}};
    case FamilyKind::Firecracker:
    case FamilyKind::Caterpillar: return {{"m", spec.m}, {"k", spec.k}};
    case FamilyKind::PathPlusPendant: return {{"m", spec.m}};
    }
    return {};
}

int cmd_gen(const std::string& family, long long m, long long k, long long d, long long n,
            unsigned long long seed, bool has_m, bool has_k, bool has_d, bool has_n,
            bool has_seed, const std::string& out_path, std::ostream& out) {
    TreeDoc doc;
    if (family == "random") {
        if (!has_n) throw ParseError("family 'random' requires --n");
        if (!has_seed) throw ParseError("family 'random' requires an explicit --seed");
        if (has_m || has_k || has_d) throw ParseError("family 'random' takes only --n and --seed");
        if (n < 1 || n > 1000000) throw BadParams("random tree size must be in 1..1000000");
        doc.tree = random_tree(static_cast<int>(n), seed);
        doc.family = "random";
        doc.params = {{"n", n}, {"seed", static_cast<long long>(seed)}};
    } else {
        if (has_n || has_seed) {
            throw ParseError("--n and --seed only apply to family 'random'");
        }
        FamilyInstance inst = generate_family(family, m, k, d, has_m, has_k, has_d);
        doc.family = family_name(inst.spec.kind);
        doc.params = family_params(inst.spec);
        doc.labels = std::move(inst.labels);
        doc.order = std::move(inst.canonical_order);
        doc.tree = std::move(inst.tree);
    }
    with_output(out_path, out, [&](std::ostream& os) { save_tree(doc, os); });
    return 0;
}

int cmd_analyze(const std::string& tree_path, std::ostream& out) {
    TreeDoc doc = load_tree_file(tree_path);
    const Tree& t = doc.tree;
    CenterInfo c = center(t);
    LevelTable lt = levels(t, c);
    out << "n " << t.n << "\n";
    out << "diameter " << diameter(t) << "\n";
    out << "centers";
    for (VertexId v : c.centers) out << " " << v;
    out << "\n";
    out << "epsilon " << c.epsilon() << "\n";
    out << "epsilon_prime " << c.epsilon_prime() << "\n";
    out << "total_level " << lt.total << "\n";
    out << "db_half " << (is_db_half(t) ? "true" : "false") << "\n";
    if (meets_bound_hypotheses(t)) {
        out << "lower_bound " << lower_bound(t) << "\n";
    } else {
        out << "lower_bound " << kBoundNote << "\n";
    }
    return 0;
}

int cmd_color(const std::string& tree_path, const std::string& order_mode,
              const std::string& out_path, std::ostream& out) {
    TreeDoc doc = load_tree_file(tree_path);
    const Tree& t = doc.tree;
    std::optional<long long> lb;
    if (meets_bound_hypotheses(t)) lb = lower_bound(t);

    Coloring col;
    int code = 0;
    if (order_mode == "auto") {
        std::optional<ConditionalHc> found;
        try {
            found = hc_via_conditions(t);
        } catch (const HypothesisViolated&) {
        }
        if (found) {
            col = std::move(found->coloring);
        } else {
            col = greedy_coloring(t, LinearOrder{bfs_order(t, center(t))});
            code = 3;
        }
    } else if (order_mode == "canonical") {
        if (!doc.order) {
            throw ParseError("tree file carries no stored order; use --order auto or a file "
                             "produced by 'gen'");
        }
        col = coloring_from_order(t, *doc.order);
    } else {
        auto ids = load_order_list_file(order_mode);
        if (static_cast<int>(ids.size()) != t.n) {
            throw ParseError("order file lists " + std::to_string(ids.size()) +
                             " ids but the tree has n = " + std::to_string(t.n));
        }
        LinearOrder o{std::move(ids)};
        if (!is_permutation(o, t.n)) {
            throw NotAPermutation("order file is not a permutation of 0.." +
                                  std::to_string(t.n - 1));
        }
        if (check_order(t, o, !is_db_half(t)).all()) {
            col = coloring_from_order(t, o);
        } else {
            col = greedy_coloring(t, o);
        }
    }

    ColoringDoc cdoc;
    cdoc.n = t.n;
    cdoc.coloring = std::move(col);
    cdoc.optimal = lb.has_value() && cdoc.coloring.span() == *lb;
    with_output(out_path, out, [&](std::ostream& os) { save_coloring(cdoc, os); });
    return code;
}

int cmd_verify(const std::string& tree_path, const std::string& coloring_path,
               std::ostream& out) {
    TreeDoc td = load_tree_file(tree_path);
    ColoringDoc cd = load_coloring_file(coloring_path);
    if (cd.n != td.tree.n) {
        throw ParseError("coloring is for n = " + std::to_string(cd.n) +
                         " but the tree has n = " + std::to_string(td.tree.n));
    }
    VerifyReport rep = verify(td.tree, cd.coloring);
    if (rep.valid) {
        out << "valid\n";
        out << "span " << cd.coloring.span() << "\n";
        return 0;
    }
    out << "invalid\n";
    out << "violations " << rep.violations.size() << "\n";
    for (const auto& v : rep.violations) {
        out << "pair " << v.u << " " << v.v << " slack " << v.slack << "\n";
    }
    return 1;
}

int cmd_oracle(const std::string& tree_path, int max_n, long long node_limit, double time_limit,
               std::ostream& out) {
    TreeDoc td = load_tree_file(tree_path);
    OracleBudget budget;
    budget.max_n = max_n;
    budget.node_limit = node_limit;
    budget.time_limit_seconds = time_limit;
    OracleHcResult res = brute_force_hc(td.tree, budget);
    out << "hc " << res.value << "\n";
    if (meets_bound_hypotheses(td.tree)) {
        long long lb = lower_bound(td.tree);
        out << "lower_bound " << lb << "\n";
        out << "gap " << (res.value - lb) << "\n";
    } else {
        out << "lower_bound " << kBoundNote << "\n";
    }
    out << "witness";
    for (long long c : res.witness.color) out << " " << c;
    out << "\n";
    return 0;
}

struct TableRow {
    std::vector<long long> params;
    long long n = 0;
    long long total_level = 0;
    long long formula = 0;
    long long lb = 0;
    long long span = 0;
    std::optional<long long> oracle;
    bool agree = false;
};

TableRow make_row(const FamilyInstance& inst, long long formula,
                  std::vector<long long> params, int max_n) {
    TableRow row;
    row.params = std::move(params);
    row.n = inst.tree.n;
    row.total_level = levels(inst.tree, center(inst.tree)).total;
    row.formula = formula;
    row.lb = lower_bound(inst.tree);
    Coloring col = coloring_from_order(inst.tree, inst.canonical_order);
    row.span = col.span();
    bool valid = verify(inst.tree, col).valid;
    if (inst.tree.n <= max_n) {
        OracleBudget budget;
        budget.max_n = max_n;
        row.oracle = brute_force_hc(inst.tree, budget).value;
    }
    row.agree = valid && row.formula == row.lb && row.lb == row.span &&
                (!row.oracle || *row.oracle == row.formula);
    return row;
}

void emit_table(const std::vector<std::string>& param_names, const std::vector<TableRow>& rows,
                const std::string& format, std::ostream& os) {
    std::vector<std::string> header = param_names;
    for (const char* col : {"n", "total_level", "formula_hc", "lower_bound", "span",
                            "oracle_hc", "agree"}) {
        header.push_back(col);
    }
    auto cells = [&](const TableRow& row) {
        std::vector<std::string> out;
        for (long long p : row.params) out.push_back(std::to_string(p));
        out.push_back(std::to_string(row.n));
        out.push_back(std::to_string(row.total_level));
        out.push_back(std::to_string(row.formula));
        out.push_back(std::to_string(row.lb));
        out.push_back(std::to_string(row.span));
        out.push_back(row.oracle ? std::to_string(*row.oracle) : "");
        out.push_back(row.agree ? "true" : "false");
        return out;
    };
    if (format == "csv") {
        for (std::size_t i = 0; i < header.size(); ++i) {
            os << (i ? "," : "") << header[i];
        }
        os << "\n";
        for (const auto& row : rows) {
            auto cs = cells(row);
            for (std::size_t i = 0; i < cs.size(); ++i) os << (i ? "," : "") << cs[i];
            os << "\n";
        }
        return;
    }
    os << "|";
    for (const auto& h : header) os << " " << h << " |";
    os << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& row : rows) {
        os << "|";
        for (const auto& c : cells(row)) os << " " << (c.empty() ? "-" : c) << " |";
        os << "\n";
    }
}

int cmd_table(const std::string& family, const std::string& m_range, const std::string& k_range,
              const std::string& d_range, bool has_m, bool has_k, bool has_d,
              const std::string& format, int max_n, const std::string& out_path,
              std::ostream& out) {
    if (format != "csv" && format != "markdown") {
        throw ParseError("--format must be csv or markdown");
    }
    auto need = [&](bool have, const char* flag) {
        if (!have) throw ParseError("family '" + family + "' requires a " + flag + " range");
    };
    auto reject = [&](bool have, const char* flag) {
        if (have) throw ParseError("family '" + family + "' does not take " + flag);
    };
    std::vector<std::string> param_names;
    std::vector<TableRow> rows;
    if (family == "symmetric") {
        need(has_k, "--k");
        need(has_d, "--d");
        reject(has_m, "--m");
        Range kr = parse_range(k_range, "--k");
        Range dr = parse_range(d_range, "--d");
        param_names = {"k", "d"};
        for (long long k = kr.lo; k <= kr.hi; ++k) {
            for (long long d = dr.lo; d <= dr.hi; ++d) {
                int ki = int_param(k, "--k");
                int di = int_param(d, "--d");
                rows.push_back(
                    make_row(gen_symmetric(ki, di), hc_symmetric(ki, di), {k, d}, max_n));
            }
        }
    } else if (family == "firecracker") {
        need(has_m, "--m");
        need(has_k, "--k");
        reject(has_d, "--d");
        Range mr = parse_range(m_range, "--m");
        Range kr = parse_range(k_range, "--k");
        param_names = {"m", "k"};
        for (long long m = mr.lo; m <= mr.hi; ++m) {
            for (long long k = kr.lo; k <= kr.hi; ++k) {
                int mi = int_param(m, "--m");
                int ki = int_param(k, "--k");
                rows.push_back(
                    make_row(gen_firecracker(mi, ki), hc_firecracker(mi, ki), {m, k}, max_n));
            }
        }
    } else if (family == "caterpillar") {
        need(has_m, "--m");
        need(has_k, "--k");
        reject(has_d, "--d");
        Range mr = parse_range(m_range, "--m");
        Range kr = parse_range(k_range, "--k");
        param_names = {"m", "k"};
        for (long long m = mr.lo; m <= mr.hi; ++m) {
            for (long long k = kr.lo; k <= kr.hi; ++k) {
                int mi = int_param(m, "--m");
                int ki = int_param(k, "--k");
                rows.push_back(
                    make_row(gen_caterpillar(mi, ki), hc_caterpillar(mi, ki), {m, k}, max_n));
            }
        }
    } else if (family == "pathpendant" || family == "path-plus-pendant") {
        need(has_m, "--m");
        reject(has_k, "--k");
        reject(has_d, "--d");
        Range mr = parse_range(m_range, "--m");
        param_names = {"m"};
        for (long long m = mr.lo; m <= mr.hi; ++m) {
            int mi = int_param(m, "--m");
            rows.push_back(
                make_row(gen_path_plus_pendant(mi), hc_path_plus_pendant(mi), {m}, max_n));
        }
    } else {
        throw ParseError("unknown family '" + family + "'");
    }
    with_output(out_path, out, [&](std::ostream& os) { emit_table(param_names, rows, format, os); });
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hamiltonian chromatic numbers of trees: exact search, constructive "
                 "colorings, and closed-form family tables"};
    app.name("hctree");
    app.require_subcommand(1);

    std::string g_family, g_out;
    long long g_m = 0, g_k = 0, g_d = 0, g_n = 0;
    unsigned long long g_seed = 0;
    auto* gen = app.add_subcommand("gen", "generate a tree file for a named family");
    gen->add_option("--family", g_family,
                    "symmetric | firecracker | caterpillar | pathpendant | random")
        ->required();
    auto* g_m_opt = gen->add_option("--m", g_m, "family parameter m");
    auto* g_k_opt = gen->add_option("--k", g_k, "family parameter k");
    auto* g_d_opt = gen->add_option("--d", g_d, "family parameter d");
    auto* g_n_opt = gen->add_option("--n", g_n, "vertex count (random family)");
    auto* g_seed_opt = gen->add_option("--seed", g_seed, "random seed (random family)");
    gen->add_option("-o,--out", g_out, "output file (default: stdout)");

    std::string a_tree;
    auto* analyze = app.add_subcommand("analyze", "report structural quantities of a tree");
    analyze->add_option("tree", a_tree, "tree file")->required();

    std::string c_tree, c_order = "auto", c_out;
    auto* color = app.add_subcommand("color", "produce a hamiltonian coloring");
    color->add_option("tree", c_tree, "tree file")->required();
    color->add_option("--order", c_order,
                      "auto | canonical | path to a file of vertex ids (default: auto)");
    color->add_option("-o,--out", c_out, "output file (default: stdout)");

    std::string v_tree, v_coloring;
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring against a tree");
    verify_cmd->add_option("tree", v_tree, "tree file")->required();
    verify_cmd->add_option("coloring", v_coloring, "coloring file")->required();

    std::string o_tree;
    int o_max_n = 10;
    long long o_node_limit = 0;
    double o_time_limit = 0.0;
    auto* oracle = app.add_subcommand("oracle", "exact minimum span by exhaustive search");
    oracle->add_option("tree", o_tree, "tree file")->required();
    oracle->add_option("--max-n", o_max_n, "largest tree the search accepts (default 10)");
    oracle->add_option("--node-limit", o_node_limit, "search node budget, 0 = unlimited");
    oracle->add_option("--time-limit", o_time_limit, "search time budget in seconds, 0 = unlimited");

    std::string t_family, t_m, t_k, t_d, t_format = "csv", t_out;
    int t_max_n = 10;
    auto* table = app.add_subcommand("table", "closed forms vs computed values over a grid");
    table->add_option("--family", t_family,
                      "symmetric | firecracker | caterpillar | pathpendant")
        ->required();
    auto* t_m_opt = table->add_option("--m", t_m, "range A..B or single value A");
    auto* t_k_opt = table->add_option("--k", t_k, "range A..B or single value A");
    auto* t_d_opt = table->add_option("--d", t_d, "range A..B or single value A");
    table->add_option("--format", t_format, "csv or markdown (default: csv)");
    table->add_option("--max-n", t_max_n,
                      "fill the oracle column when n is at most this (default 10)");
    table->add_option("-o,--out", t_out, "output file (default: stdout)");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("hctree");
    for (const auto& a : args) argv_store.push_back(a);
    std::vector<char*> argv;
    argv.reserve(argv_store.size());
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(g_family, g_m, g_k, g_d, g_n, g_seed, g_m_opt->count() > 0,
                           g_k_opt->count() > 0, g_d_opt->count() > 0, g_n_opt->count() > 0,
                           g_seed_opt->count() > 0, g_out, out);
        }
        if (analyze->parsed()) return cmd_analyze(a_tree, out);
        if (color->parsed()) return cmd_color(c_tree, c_order, c_out, out);
        if (verify_cmd->parsed()) return cmd_verify(v_tree, v_coloring, out);
        if (oracle->parsed()) {
            return cmd_oracle(o_tree, o_max_n, o_node_limit, o_time_limit, out);
        }
        if (table->parsed()) {
            return cmd_table(t_family, t_m, t_k, t_d, t_m_opt->count() > 0,
                             t_k_opt->count() > 0, t_d_opt->count() > 0, t_format, t_max_n,
                             t_out, out);
        }
    } catch (const Inexhaustive& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace hc
