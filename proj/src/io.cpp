#include "hc/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hc/errors.hpp"

namespace hc {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokenize(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

long long want_ll(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used == tok.size()) return v;
    } catch (...) {
    }
    throw ParseError(std::string("expected an integer for ") + what + ", got '" + tok + "'");
}

int want_vertex(const std::string& tok, int n, const char* what) {
    long long v = want_ll(tok, what);
    if (v < 0 || v >= n) {
        throw ParseError(std::string(what) + " id " + tok + " is out of range 0.." +
                         std::to_string(n - 1));
    }
    return static_cast<int>(v);
}

void want_arity(const std::vector<std::string>& tok, std::size_t arity) {
    if (tok.size() != arity) {
        throw ParseError("keyword '" + tok[0] + "' expects " + std::to_string(arity - 1) +
                         " argument(s), got " + std::to_string(tok.size() - 1));
    }
}

void want_n_first(bool saw_n, const std::string& kw) {
    if (!saw_n) throw ParseError("'" + kw + "' line before 'n' line");
}

} // namespace

TreeDoc load_tree(std::istream& in) {
    std::string line;
    bool saw_header = false;
    bool saw_n = false;
    int n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::string> labels;
    std::string family;
    std::vector<std::pair<std::string, long long>> params;
    std::optional<std::vector<VertexId>> order;
    while (std::getline(in, line)) {
        auto tok = tokenize(strip_comment(line));
        if (tok.empty()) continue;
        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "hctree" || tok[1] != "1") {
                throw ParseError("expected 'hctree 1' header line");
            }
            saw_header = true;
            continue;
        }
        const std::string& kw = tok[0];
        if (kw == "n") {
            want_arity(tok, 2);
            if (saw_n) throw ParseError("duplicate 'n' line");
            long long v = want_ll(tok[1], "n");
            if (v < 1) throw ParseError("n must be at least 1");
            n = static_cast<int>(v);
            labels.assign(n, "");
            saw_n = true;
        } else if (kw == "edge") {
            want_n_first(saw_n, kw);
            want_arity(tok, 3);
            edges.emplace_back(want_vertex(tok[1], n, "edge"), want_vertex(tok[2], n, "edge"));
        } else if (kw == "label") {
            want_n_first(saw_n, kw);
            want_arity(tok, 3);
            labels[want_vertex(tok[1], n, "label")] = tok[2];
        } else if (kw == "family") {
            want_arity(tok, 2);
            family = tok[1];
        } else if (kw == "param") {
            want_arity(tok, 3);
            params.emplace_back(tok[1], want_ll(tok[2], "param"));
        } else if (kw == "order") {
            want_n_first(saw_n, kw);
            if (order) throw ParseError("duplicate 'order' line");
            if (tok.size() != static_cast<std::size_t>(n) + 1) {
                throw ParseError("'order' expects exactly n = " + std::to_string(n) + " ids");
            }
            std::vector<VertexId> o(n);
            for (int i = 0; i < n; ++i) o[i] = want_vertex(tok[i + 1], n, "order");
            order = std::move(o);
        } else {
            throw ParseError("unknown keyword '" + kw + "'");
        }
    }
    if (!saw_header) throw ParseError("empty document: expected 'hctree 1' header line");
    if (!saw_n) throw ParseError("missing 'n' line");

    TreeDoc doc;
    doc.tree = validate_tree(n, edges);
    if (std::any_of(labels.begin(), labels.end(), [](const std::string& s) { return !s.empty(); })) {
        doc.labels = std::move(labels);
    }
    doc.family = std::move(family);
    doc.params = std::move(params);
    if (order) {
        LinearOrder o{std::move(*order)};
        if (!is_permutation(o, n)) {
            throw NotAPermutation("'order' line is not a permutation of 0.." +
                                  std::to_string(n - 1));
        }
        doc.order = std::move(o);
    }
    return doc;
}

void save_tree(const TreeDoc& doc, std::ostream& out) {
    out << "hctree 1\n";
    out << "n " << doc.tree.n << "\n";
    for (const auto& [u, v] : doc.tree.edges) out << "edge " << u << " " << v << "\n";
    for (std::size_t i = 0; i < doc.labels.size(); ++i) {
        if (!doc.labels[i].empty()) out << "label " << i << " " << doc.labels[i] << "\n";
    }
    if (!doc.family.empty()) out << "family " << doc.family << "\n";
    for (const auto& [key, value] : doc.params) out << "param " << key << " " << value << "\n";
    if (doc.order) {
        out << "order";
        for (VertexId v : doc.order->order) out << " " << v;
        out << "\n";
    }
}

ColoringDoc load_coloring(std::istream& in) {
    std::string line;
    bool saw_header = false;
    bool saw_n = false;
    int n = 0;
    std::vector<long long> color;
    std::vector<char> seen;
    std::optional<bool> optimal;
    std::optional<long long> recorded_span;
    while (std::getline(in, line)) {
        auto tok = tokenize(strip_comment(line));
        if (tok.empty()) continue;
        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "hccoloring" || tok[1] != "1") {
                throw ParseError("expected 'hccoloring 1' header line");
            }
            saw_header = true;
            continue;
        }
        const std::string& kw = tok[0];
        if (kw == "n") {
            want_arity(tok, 2);
            if (saw_n) throw ParseError("duplicate 'n' line");
            long long v = want_ll(tok[1], "n");
            if (v < 1) throw ParseError("n must be at least 1");
            n = static_cast<int>(v);
            color.assign(n, 0);
            seen.assign(n, 0);
            saw_n = true;
        } else if (kw == "color") {
            want_n_first(saw_n, kw);
            want_arity(tok, 3);
            int id = want_vertex(tok[1], n, "color");
            if (seen[id]) throw ParseError("duplicate color for vertex " + std::to_string(id));
            long long value = want_ll(tok[2], "color");
            if (value < 0) throw ParseError("colors must be nonnegative");
            color[id] = value;
            seen[id] = 1;
        } else if (kw == "optimal") {
            want_arity(tok, 2);
            if (tok[1] == "true") {
                optimal = true;
            } else if (tok[1] == "false") {
                optimal = false;
            } else {
                throw ParseError("'optimal' expects true or false");
            }
        } else if (kw == "span") {
            want_arity(tok, 2);
            recorded_span = want_ll(tok[1], "span");
        } else {
            throw ParseError("unknown keyword '" + kw + "'");
        }
    }
    if (!saw_header) throw ParseError("empty document: expected 'hccoloring 1' header line");
    if (!saw_n) throw ParseError("missing 'n' line");
    for (int v = 0; v < n; ++v) {
        if (!seen[v]) throw MissingVertexColor("no color for vertex " + std::to_string(v));
    }
    ColoringDoc doc;
    doc.n = n;
    doc.coloring = Coloring{std::move(color)};
    doc.optimal = optimal;
    if (recorded_span && *recorded_span != doc.coloring.span()) {
        throw ParseError("recorded span " + std::to_string(*recorded_span) +
                         " does not match the recomputed maximum " +
                         std::to_string(doc.coloring.span()));
    }
    return doc;
}

void save_coloring(const ColoringDoc& doc, std::ostream& out) {
    out << "hccoloring 1\n";
    out << "n " << doc.n << "\n";
    for (int v = 0; v < doc.n; ++v) out << "color " << v << " " << doc.coloring.color[v] << "\n";
    if (doc.optimal) out << "optimal " << (*doc.optimal ? "true" : "false") << "\n";
    out << "span " << doc.coloring.span() << "\n";
}

std::vector<VertexId> load_order_list(std::istream& in) {
    std::string line;
    std::vector<VertexId> out;
    while (std::getline(in, line)) {
        for (const auto& tok : tokenize(strip_comment(line))) {
            long long v = want_ll(tok, "order entry");
            if (v < 0) throw ParseError("order entries must be nonnegative");
            out.push_back(static_cast<int>(v));
        }
    }
    return out;
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "' for writing");
    return f;
}

} // namespace

TreeDoc load_tree_file(const std::string& path) {
    auto f = open_in(path);
    return load_tree(f);
}

void save_tree_file(const TreeDoc& doc, const std::string& path) {
    auto f = open_out(path);
    save_tree(doc, f);
}

ColoringDoc load_coloring_file(const std::string& path) {
    auto f = open_in(path);
    return load_coloring(f);
}

void save_coloring_file(const ColoringDoc& doc, const std::string& path) {
    auto f = open_out(path);
    save_coloring(doc, f);
}

std::vector<VertexId> load_order_list_file(const std::string& path) {
    auto f = open_in(path);
    return load_order_list(f);
}

} // namespace hc
