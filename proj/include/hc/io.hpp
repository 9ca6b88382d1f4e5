#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hc/coloring.hpp"
#include "hc/tree.hpp"

namespace hc {

/// On-disk tree document. Format (version 1):
///
///   hctree 1
///   n 6
///   edge 0 1
///   ...
///   label 0 w
///   family symmetric
///   param k 2
///   param d 3
///   order 0 4 2 5 3 1
///
/// '#' starts a comment; blank lines are skipped. `n` must precede every
/// line that mentions a vertex id. `label`, `family`, `param`, and `order`
/// are optional; `order`, when present, must be a permutation of 0..n-1.
/// Unknown keywords are a ParseError. load(save(doc)) == doc.
struct TreeDoc {
    Tree tree;
    std::vector<std::string> labels; ///< size n when any label is set, else empty; "" = unset
    std::string family;              ///< "" when no provenance block
    std::vector<std::pair<std::string, long long>> params;
    std::optional<LinearOrder> order;

    bool operator==(const TreeDoc& o) const {
        return tree.n == o.tree.n && tree.edges == o.tree.edges && labels == o.labels &&
               family == o.family && params == o.params &&
               (order.has_value() == o.order.has_value()) &&
               (!order || order->order == o.order->order);
    }
};

/// On-disk coloring document. Format (version 1):
///
///   hccoloring 1
///   n 4
///   color 0 0
///   color 1 2
///   color 2 3
///   color 3 4
///   optimal true
///   span 4
///
/// Every vertex 0..n-1 must get exactly one color line. The trailing `span`
/// is redundant but must equal the recomputed maximum; a mismatch is a
/// ParseError. `optimal` is optional. load(save(doc)) == doc.
struct ColoringDoc {
    int n = 0;
    Coloring coloring;
    std::optional<bool> optimal;

    bool operator==(const ColoringDoc& o) const {
        return n == o.n && coloring.color == o.coloring.color && optimal == o.optimal;
    }
};

TreeDoc load_tree(std::istream& in);
TreeDoc load_tree_file(const std::string& path);
void save_tree(const TreeDoc& doc, std::ostream& out);
void save_tree_file(const TreeDoc& doc, const std::string& path);

ColoringDoc load_coloring(std::istream& in);
ColoringDoc load_coloring_file(const std::string& path);
void save_coloring(const ColoringDoc& doc, std::ostream& out);
void save_coloring_file(const ColoringDoc& doc, const std::string& path);

/// Reads a bare vertex order: whitespace-separated ids, '#' comments
/// allowed. Must be a permutation of 0..n-1 for the tree it is applied to
/// (checked by the caller).
std::vector<VertexId> load_order_list(std::istream& in);
std::vector<VertexId> load_order_list_file(const std::string& path);

} // namespace hc
