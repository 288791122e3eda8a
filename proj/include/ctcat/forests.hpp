// forests.hpp -- rooted labeled ordered forests and their symmetric structure

#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctcat/validation.hpp"

namespace ctcat {

struct ForestNode {
    int label = 0;  ///< signed nonzero node label
    std::vector<ForestNode> children;

    bool operator==(const ForestNode&) const = default;
};

/// A rooted labeled ordered forest: an ordered sequence of ordered trees.
/// Serialized as `Tree ("," Tree)*` with `Tree := INT ["(" Forest ")"]`,
/// e.g. `-2(3,-3(2)),1(-1)`. Whitespace is insignificant.
struct Forest {
    std::vector<ForestNode> roots;

    bool operator==(const Forest&) const = default;
};

Forest parse_forest(std::string_view text);
std::string to_string(const Forest& f);

std::size_t node_count(const Forest& f);

/// Labels in breadth-first order: roots left to right, then their children
/// left to right, level by level (BFS over a virtual super-root whose
/// ordered children are the roots).
std::vector<int> bfs_order(const Forest& f);

/// True iff node i appears after node j in BFS order and strictly before
/// the block where j's children appear. Children blocks follow the BFS
/// order of their parents, so for a leaf j the boundary is the first child
/// of the next internal node; a leaf with no internal node after it bounds
/// nothing, and only the "after j" clause constrains.
bool is_sub_descendant(const Forest& f, int i, int j);

/// Checks that f has n nodes with distinct labels whose absolute values are
/// exactly 1..n.
ValidationReport validate_labeled_forest(const Forest& f, int n);

/// Checks the three conditions of a symmetric forest with 2n nodes: the
/// first n BFS labels cover 1..n in absolute value, the last n mirror them
/// negated, and every node pair satisfies the sub-descendant property.
ValidationReport validate_symmetric_forest(const Forest& f, int n);

/// Leaves strictly after the last internal node in BFS order, in BFS
/// order. A forest with no internal node has all its nodes special.
std::vector<int> special_leaves(const Forest& f);

/// The forest on the negated labels realizing the reversed sub-descendant
/// relation. Involution.
Forest symmetric_forest(const Forest& f);

/// All symmetric forests obtained by shuffling f with its symmetric; 2^s
/// forests where s is the number of special leaves of f.
std::vector<Forest> forest_shuffles(const Forest& f);

/// Splits a symmetric forest into the induced sub-forest on the first n BFS
/// nodes and the one on the last n; the second is the symmetric of the
/// first.
std::pair<Forest, Forest> decompose_symmetric_forest(const Forest& g, int n);

/// Returns a copy of the shape with labels assigned by BFS position.
Forest relabel_by_bfs(const Forest& shape, const std::vector<int>& labels);

/// Streams every ordered forest with n nodes once, sorted by serialization.
/// Unlabeled mode emits each of the catalan(n) shapes canonically labeled
/// 1..n in BFS order; labeled mode emits all 2^n * n! signed labelings of
/// every shape.
void enumerate_forests(int n, bool labeled, const std::function<void(const Forest&)>& emit);
std::vector<Forest> all_forests(int n, bool labeled);

/// Brute-force tally of unlabeled shapes by number of special leaves.
std::map<int, long long> count_forests_by_special_leaves(int n);

}  // namespace ctcat
