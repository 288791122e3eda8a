#include "ctcat/forests.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

#include "ctcat/bijections.hpp"
#include "ctcat/counting.hpp"

namespace ctcat {

namespace {

struct Parser {
    std::string_view text;
    std::size_t at = 0;

    void skip_ws() {
        while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
    }

    [[noreturn]] void fail(const std::string& message) {
        throw std::invalid_argument("forest parse error at offset " + std::to_string(at) + ": " +
                                    message);
    }

    int parse_label() {
        skip_ws();
        std::size_t begin = at;
        if (at < text.size() && text[at] == '-') ++at;
        std::size_t digits = at;
        while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) ++at;
        if (at == digits) fail("expected node label");
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + at, value);
        if (ec != std::errc{} || ptr != text.data() + at) fail("node label out of range");
        if (value == 0) fail("node label must be nonzero");
        return value;
    }

    ForestNode parse_tree() {
        ForestNode node;
        node.label = parse_label();
        skip_ws();
        if (at < text.size() && text[at] == '(') {
            ++at;
            node.children = parse_list();
            skip_ws();
            if (at >= text.size() || text[at] != ')') fail("expected ')'");
            ++at;
        }
        return node;
    }

    std::vector<ForestNode> parse_list() {
        std::vector<ForestNode> trees;
        trees.push_back(parse_tree());
        skip_ws();
        while (at < text.size() && text[at] == ',') {
            ++at;
            trees.push_back(parse_tree());
            skip_ws();
        }
        return trees;
    }
};

void collect_labels(const ForestNode& node, std::set<int>& seen) {
    if (!seen.insert(node.label).second)
        throw std::invalid_argument("duplicate node label " + std::to_string(node.label));
    for (const ForestNode& child : node.children) collect_labels(child, seen);
}

void render(const ForestNode& node, std::string& out) {
    out += std::to_string(node.label);
    if (!node.children.empty()) {
        out += '(';
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i) out += ',';
            render(node.children[i], out);
        }
        out += ')';
    }
}

// Label-indexed view of a forest: BFS sequence, positions, child lists and
// parents. Labels must be distinct.
struct ForestIndex {
    std::vector<int> bfs;
    std::map<int, int> pos;  // 1-based BFS position
    std::map<int, std::vector<int>> kids;
    std::map<int, int> parent;    // roots absent
    std::vector<int> child_start;  // by 1-based position: where the node's
                                   // children (would) start in BFS order
};

constexpr int kNoBoundary = std::numeric_limits<int>::max();

ForestIndex build_index(const Forest& f) {
    ForestIndex ix;
    std::deque<const ForestNode*> queue;
    for (const ForestNode& root : f.roots) queue.push_back(&root);
    while (!queue.empty()) {
        const ForestNode* node = queue.front();
        queue.pop_front();
        ix.bfs.push_back(node->label);
        if (!ix.pos.emplace(node->label, static_cast<int>(ix.bfs.size())).second)
            throw std::invalid_argument("duplicate node label " + std::to_string(node->label));
        auto& kids = ix.kids[node->label];
        for (const ForestNode& child : node->children) {
            kids.push_back(child.label);
            ix.parent[child.label] = node->label;
            queue.push_back(&child);
        }
    }
    // children blocks appear in BFS order of their parents, so the children
    // of a leaf would start where the next internal node's children do
    const int count = static_cast<int>(ix.bfs.size());
    ix.child_start.assign(count + 2, kNoBoundary);
    for (int p = count; p >= 1; --p) {
        const auto& kids = ix.kids.at(ix.bfs[p - 1]);
        ix.child_start[p] = kids.empty() ? ix.child_start[p + 1] : ix.pos.at(kids.front());
    }
    return ix;
}

bool sub_descendant(const ForestIndex& ix, int i, int j) {
    const int pi = ix.pos.at(i);
    const int pj = ix.pos.at(j);
    return pi > pj && pi < ix.child_start[pj];
}

}  // namespace

Forest parse_forest(std::string_view text) {
    Parser parser{text};
    parser.skip_ws();
    if (parser.at == text.size()) throw std::invalid_argument("empty forest text");
    Forest f{parser.parse_list()};
    parser.skip_ws();
    if (parser.at != text.size()) parser.fail("unexpected trailing input");
    std::set<int> seen;
    for (const ForestNode& root : f.roots) collect_labels(root, seen);
    return f;
}

std::string to_string(const Forest& f) {
    std::string out;
    for (std::size_t i = 0; i < f.roots.size(); ++i) {
        if (i) out += ',';
        render(f.roots[i], out);
    }
    return out;
}

std::size_t node_count(const Forest& f) {
    std::size_t count = 0;
    std::deque<const ForestNode*> queue;
    for (const ForestNode& root : f.roots) queue.push_back(&root);
    while (!queue.empty()) {
        const ForestNode* node = queue.front();
        queue.pop_front();
        ++count;
        for (const ForestNode& child : node->children) queue.push_back(&child);
    }
    return count;
}

std::vector<int> bfs_order(const Forest& f) {
    return build_index(f).bfs;
}

bool is_sub_descendant(const Forest& f, int i, int j) {
    ForestIndex ix = build_index(f);
    if (!ix.pos.count(i)) throw std::invalid_argument("no node labeled " + std::to_string(i));
    if (!ix.pos.count(j)) throw std::invalid_argument("no node labeled " + std::to_string(j));
    return sub_descendant(ix, i, j);
}

ValidationReport validate_labeled_forest(const Forest& f, int n) {
    if (n < 1) return ValidationReport::bad("size parameter n must be >= 1");
    std::set<int> seen;
    try {
        for (const ForestNode& root : f.roots) collect_labels(root, seen);
    } catch (const std::invalid_argument& e) {
        return ValidationReport::bad(e.what());
    }
    if (static_cast<int>(seen.size()) != n)
        return ValidationReport::bad("expected " + std::to_string(n) + " nodes, got " +
                                     std::to_string(seen.size()));
    std::set<int> abs_seen;
    for (int label : seen) {
        if (std::abs(label) > n)
            return ValidationReport::bad("label out of range: " + std::to_string(label));
        if (!abs_seen.insert(std::abs(label)).second)
            return ValidationReport::bad("absolute label " + std::to_string(std::abs(label)) +
                                         " used twice");
    }
    return ValidationReport::okay();
}

ValidationReport validate_symmetric_forest(const Forest& f, int n) {
    if (n < 1) return ValidationReport::bad("size parameter n must be >= 1");
    ForestIndex ix;
    try {
        ix = build_index(f);
    } catch (const std::invalid_argument& e) {
        return ValidationReport::bad(e.what());
    }
    if (static_cast<int>(ix.bfs.size()) != 2 * n)
        return ValidationReport::bad("expected " + std::to_string(2 * n) + " nodes, got " +
                                     std::to_string(ix.bfs.size()));

    // (i) the first n BFS labels cover 1..n in absolute value
    std::set<int> abs_seen;
    for (int p = 0; p < n; ++p) {
        const int label = ix.bfs[p];
        if (std::abs(label) > n || !abs_seen.insert(std::abs(label)).second)
            return ValidationReport::violated(1, std::to_string(label));
    }

    // (ii) the last n BFS labels mirror the first n negated
    for (int j = 1; j <= n; ++j) {
        const int late = ix.bfs[n + j - 1];
        const int early = ix.bfs[n - j];
        if (late != -early)
            return ValidationReport::violated(2, std::to_string(late) + "," + std::to_string(early));
    }

    // (iii) every ordered pair satisfies the sub-descendant property
    for (int a : ix.bfs)
        for (int b : ix.bfs)
            if (sub_descendant(ix, a, b) && !sub_descendant(ix, -b, -a))
                return ValidationReport::violated(3, std::to_string(a) + "," + std::to_string(b));

    return ValidationReport::okay();
}

std::vector<int> special_leaves(const Forest& f) {
    ForestIndex ix = build_index(f);
    int last_internal = 0;
    for (int label : ix.bfs)
        if (!ix.kids.at(label).empty()) last_internal = ix.pos.at(label);
    std::vector<int> out;
    for (int p = last_internal; p < static_cast<int>(ix.bfs.size()); ++p) out.push_back(ix.bfs[p]);
    return out;
}

Forest symmetric_forest(const Forest& f) {
    const int n = static_cast<int>(node_count(f));
    require_valid(validate_labeled_forest(f, n), "symmetric_forest");
    return phi(symmetric_word(psi(f, false)));
}

std::vector<Forest> forest_shuffles(const Forest& f) {
    const int n = static_cast<int>(node_count(f));
    require_valid(validate_labeled_forest(f, n), "forest_shuffles");

    std::vector<Forest> out;
    for (const Word& w : sketch_shuffles(psi(f, false), n)) out.push_back(phi(w));

    const std::size_t s = special_leaves(f).size();
    std::set<std::string> distinct;
    for (const Forest& g : out) distinct.insert(to_string(g));
    if (distinct.size() != out.size() || out.size() != (std::size_t{1} << s))
        detail::internal_error("forest_shuffles: expected 2^s distinct forests");
    return out;
}

namespace {

// Induced sub-forest on a BFS position range. New roots are the kept nodes
// whose parent is absent or dropped, in BFS order; child order is preserved.
Forest induced_by_range(const ForestIndex& ix, int lo, int hi) {
    auto kept = [&](int label) {
        const int p = ix.pos.at(label);
        return lo <= p && p <= hi;
    };
    std::function<ForestNode(int)> build = [&](int label) {
        ForestNode node{label, {}};
        for (int child : ix.kids.at(label))
            if (kept(child)) node.children.push_back(build(child));
        return node;
    };
    Forest out;
    for (int label : ix.bfs) {
        if (!kept(label)) continue;
        auto parent = ix.parent.find(label);
        if (parent == ix.parent.end() || !kept(parent->second)) out.roots.push_back(build(label));
    }
    return out;
}

}  // namespace

std::pair<Forest, Forest> decompose_symmetric_forest(const Forest& g, int n) {
    require_valid(validate_symmetric_forest(g, n), "decompose_symmetric_forest");
    ForestIndex ix = build_index(g);
    Forest first = induced_by_range(ix, 1, n);
    Forest second = induced_by_range(ix, n + 1, 2 * n);
    return {std::move(first), std::move(second)};
}

Forest relabel_by_bfs(const Forest& shape, const std::vector<int>& labels) {
    Forest out = shape;
    std::deque<ForestNode*> queue;
    for (ForestNode& root : out.roots) queue.push_back(&root);
    std::size_t next = 0;
    while (!queue.empty()) {
        ForestNode* node = queue.front();
        queue.pop_front();
        if (next >= labels.size())
            throw std::invalid_argument("relabel_by_bfs: not enough labels");
        node->label = labels[next++];
        for (ForestNode& child : node->children) queue.push_back(&child);
    }
    if (next != labels.size()) throw std::invalid_argument("relabel_by_bfs: too many labels");
    return out;
}

namespace {

// All forest shapes with n nodes, built bottom-up; labels are placeholders.
std::vector<std::vector<ForestNode>> shape_lists(int n) {
    std::vector<std::vector<std::vector<ForestNode>>> forests(n + 1);
    std::vector<std::vector<ForestNode>> trees(n + 1);  // tree shapes by node count
    forests[0] = {{}};
    for (int m = 1; m <= n; ++m) {
        // a tree with m nodes is a root over a forest with m-1 nodes
        for (const auto& child_list : forests[m - 1]) trees[m].push_back(ForestNode{1, child_list});
        // a forest with m nodes starts with a tree of some size k
        for (int k = 1; k <= m; ++k)
            for (const ForestNode& first : trees[k])
                for (const auto& rest : forests[m - k]) {
                    std::vector<ForestNode> combined;
                    combined.reserve(1 + rest.size());
                    combined.push_back(first);
                    combined.insert(combined.end(), rest.begin(), rest.end());
                    forests[m].push_back(std::move(combined));
                }
    }
    return forests[n];
}

}  // namespace

void enumerate_forests(int n, bool labeled, const std::function<void(const Forest&)>& emit) {
    if (n < 1) throw std::invalid_argument("enumerate_forests: n must be >= 1");

    std::vector<std::string> serialized;
    std::vector<int> canonical(n);
    for (int i = 0; i < n; ++i) canonical[i] = i + 1;

    for (const auto& roots : shape_lists(n)) {
        Forest shape{roots};
        if (!labeled) {
            serialized.push_back(to_string(relabel_by_bfs(shape, canonical)));
            continue;
        }
        std::vector<int> perm = canonical;
        do {
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> labels(n);
                for (int i = 0; i < n; ++i) labels[i] = (mask >> i & 1u) ? -perm[i] : perm[i];
                serialized.push_back(to_string(relabel_by_bfs(shape, labels)));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::sort(serialized.begin(), serialized.end());
    if (std::adjacent_find(serialized.begin(), serialized.end()) != serialized.end())
        detail::internal_error("enumerate_forests: duplicate forest generated");
    for (const std::string& s : serialized) emit(parse_forest(s));
}

std::vector<Forest> all_forests(int n, bool labeled) {
    std::vector<Forest> out;
    enumerate_forests(n, labeled, [&](const Forest& f) { out.push_back(f); });
    return out;
}

std::map<int, long long> count_forests_by_special_leaves(int n) {
    std::map<int, long long> tally;
    enumerate_forests(n, false, [&](const Forest& f) {
        ++tally[static_cast<int>(special_leaves(f).size())];
    });
    return tally;
}

}  // namespace ctcat
