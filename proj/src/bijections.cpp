#include "ctcat/bijections.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ctcat {

namespace {

Rational parse_rational(std::string_view token) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("bad rational '" + std::string(token) +
                                    "' (expected p or p/q)");
    };
    if (token.empty()) return fail();
    const auto slash = token.find('/');
    try {
        BigInt num{std::string(token.substr(0, slash))};
        if (slash == std::string_view::npos) return Rational(num);
        BigInt den{std::string(token.substr(slash + 1))};
        if (den <= 0) return fail();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        return fail();
    }
}

}  // namespace

RegionPoint parse_point(std::string_view text) {
    RegionPoint point;
    std::string piece;
    std::istringstream in{std::string(text)};
    while (std::getline(in, piece, ',')) {
        // trim surrounding whitespace
        const auto b = piece.find_first_not_of(" \t");
        const auto e = piece.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty coordinate in point");
        point.coords.push_back(parse_rational(std::string_view(piece).substr(b, e - b + 1)));
    }
    if (point.coords.empty()) throw std::invalid_argument("point must have at least one coordinate");
    return point;
}

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string to_string(const RegionPoint& x) {
    std::string out;
    for (const Rational& c : x.coords) {
        if (!out.empty()) out += ',';
        out += to_string(c);
    }
    return out;
}

namespace {

struct ArrangementValue {
    Rational value;
    Letter letter;
};

// The 4n values ±x_i + s with the letter naming each one, sorted ascending.
std::vector<ArrangementValue> arrangement_values(const RegionPoint& x) {
    const int n = static_cast<int>(x.coords.size());
    if (n < 1) throw std::invalid_argument("point must have at least one coordinate");
    std::vector<ArrangementValue> values;
    values.reserve(4 * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const Rational& xi = x.coords[i - 1];
        values.push_back({xi, Letter{i, 0}});
        values.push_back({xi + 1, Letter{i, 1}});
        values.push_back({-xi, Letter{-i, 0}});
        values.push_back({1 - xi, Letter{-i, 1}});
    }
    std::sort(values.begin(), values.end(), [](const ArrangementValue& a, const ArrangementValue& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.letter < b.letter;
    });
    return values;
}

// Renders the hyperplane x_i + s = x_j + t in normalized form, one of
// `x_a - x_b = c`, `x_a + x_b = c`, or `2x_a = c`.
std::string hyperplane_equation(const Letter& first, const Letter& second) {
    const int abs_i = std::abs(first.index), abs_j = std::abs(second.index);
    const int sign_i = first.index > 0 ? 1 : -1, sign_j = second.index > 0 ? 1 : -1;
    int rhs = second.level - first.level;

    if (abs_i == abs_j) {
        int coef = sign_i - sign_j;
        if (coef == 0) detail::internal_error("coinciding values share a variable");
        if (coef < 0) rhs = -rhs;
        return "2x" + std::to_string(abs_i) + " = " + std::to_string(rhs);
    }
    const int a = std::min(abs_i, abs_j), b = std::max(abs_i, abs_j);
    int coef_a = (abs_i == a ? sign_i : 0) - (abs_j == a ? sign_j : 0);
    int coef_b = (abs_i == b ? sign_i : 0) - (abs_j == b ? sign_j : 0);
    if (coef_a < 0) {
        coef_a = -coef_a;
        coef_b = -coef_b;
        rhs = -rhs;
    }
    return "x" + std::to_string(a) + (coef_b > 0 ? " + x" : " - x") + std::to_string(b) + " = " +
           std::to_string(rhs);
}

[[noreturn]] void throw_collision(const ArrangementValue& a, const ArrangementValue& b) {
    throw std::invalid_argument("point lies on hyperplane " +
                                hyperplane_equation(a.letter, b.letter) + " (values of " +
                                to_string(a.letter) + " and " + to_string(b.letter) + " coincide)");
}

}  // namespace

void check_region_point(const RegionPoint& x) {
    const auto values = arrangement_values(x);
    for (std::size_t p = 1; p < values.size(); ++p)
        if (values[p - 1].value == values[p].value) throw_collision(values[p - 1], values[p]);
}

Word sigma(const RegionPoint& x) {
    const auto values = arrangement_values(x);
    Word word;
    word.reserve(values.size());
    for (std::size_t p = 0; p < values.size(); ++p) {
        if (p > 0 && values[p - 1].value == values[p].value) throw_collision(values[p - 1], values[p]);
        word.push_back(values[p].letter);
    }
    return word;
}

RegionPoint representative_point(const Word& w, int n) {
    require_valid(validate_symmetric_sketch(w, n), "representative_point");

    // Walk the word once, binding a value to every level-0 letter and forcing
    // the bound value plus one at its level-1 partner. The k-th level-0 letter
    // advances by (2n+1)^{-k}: the steps decay fast enough that everything
    // placed after a letter's binding and before its partner stays strictly
    // below the partner's forced value, so the walk is strictly increasing.
    // A uniform step does not have this property; it can land exactly on a
    // forced value.
    const Rational ratio(1, 2 * n + 1);
    Rational step = 1;
    std::map<int, Rational> bound;  // signed index -> walk value
    Rational current = 0;
    for (const Letter& l : w) {
        if (l.level == 0) {
            step *= ratio;
            current += step;
            bound[l.index] = current;
        } else {
            const Rational next = bound.at(l.index) + 1;
            if (!(next > current))
                detail::internal_error("representative_point: non-monotone value sequence");
            current = next;
        }
    }

    // The walk treats the indices i and -i as independent, so it realizes the
    // prescribed order but not the symmetry x_{-i} = -x_i. The reflection
    // v_j -> -v_{-j} realizes the same order because the word equals its own
    // symmetric reading, and the region is an intersection of open halfspaces,
    // so averaging the walk with its reflection stays inside and is symmetric.
    RegionPoint out;
    out.coords.reserve(n);
    for (int i = 1; i <= n; ++i)
        out.coords.push_back(Rational((bound.at(i) - bound.at(-i)) / 2));

    if (sigma(out) != w)
        detail::internal_error("representative_point: constructed point does not reproduce the sketch");
    return out;
}

SketchKind classify_sketch(const Word& w) {
    ValidationReport symmetric_report = ValidationReport::bad("letter count is not a multiple of 4");
    if (!w.empty() && w.size() % 4 == 0) {
        symmetric_report = validate_symmetric_sketch(w, static_cast<int>(w.size() / 4));
        if (symmetric_report.is_ok()) return SketchKind::symmetric;
    }
    ValidationReport annotated_report = ValidationReport::bad("letter count is not a multiple of 2");
    if (!w.empty() && w.size() % 2 == 0) {
        annotated_report = validate_annotated_sketch(w, static_cast<int>(w.size() / 2));
        if (annotated_report.is_ok()) return SketchKind::annotated;
    }
    throw std::invalid_argument("not a sketch (as symmetric: " + symmetric_report.str() +
                                "; as annotated: " + annotated_report.str() + ")");
}

namespace {

struct ArenaNode {
    int label;
    int parent = -1;            // arena index, -1 for roots
    std::vector<int> children;  // arena indices
};

ForestNode materialize(const std::vector<ArenaNode>& arena, int at) {
    ForestNode node{arena[at].label, {}};
    for (int child : arena[at].children) node.children.push_back(materialize(arena, child));
    return node;
}

// The letter-by-letter forest construction; expects a validated sketch.
Forest build_forest(const Word& w) {
    std::vector<ArenaNode> arena;
    std::map<int, int> by_label;
    std::vector<int> roots;

    auto append_after = [&](int sibling, int node) {
        // the sibling was created one step earlier, so it is rightmost in
        // its sibling list and the new node is appended after it
        const int parent = arena[sibling].parent;
        auto& list = parent < 0 ? roots : arena[parent].children;
        if (list.empty() || list.back() != sibling)
            detail::internal_error("phi: sibling attach point is not rightmost");
        list.push_back(node);
        arena[node].parent = parent;
    };

    const Letter* previous = nullptr;
    for (const Letter& l : w) {
        if (l.level == 0) {
            const int node = static_cast<int>(arena.size());
            arena.push_back({l.index, -1, {}});
            by_label[l.index] = node;
            if (previous == nullptr) {
                roots.push_back(node);
            } else if (previous->level == 0) {
                append_after(by_label.at(previous->index), node);
            } else {
                const int parent = by_label.at(previous->index);
                if (!arena[parent].children.empty())
                    detail::internal_error("phi: leftmost-child attach point already has children");
                arena[parent].children.push_back(node);
                arena[node].parent = parent;
            }
        }
        previous = &l;
    }

    Forest out;
    for (int root : roots) out.roots.push_back(materialize(arena, root));
    return out;
}

}  // namespace

Forest phi(const Word& w) {
    classify_sketch(w);  // throws unless w is one of the two sketch classes
    return build_forest(w);
}

Word psi(const Forest& f, bool symmetric) {
    const int count = static_cast<int>(node_count(f));
    if (symmetric) {
        if (count % 2 != 0)
            throw std::invalid_argument("psi: a symmetric forest has an even number of nodes");
        require_valid(validate_symmetric_forest(f, count / 2), "psi");
    } else {
        require_valid(validate_labeled_forest(f, count), "psi");
    }

    const auto bfs = bfs_order(f);
    std::map<int, int> position;  // label -> 1-based BFS position
    std::map<int, int> parent_of;
    std::map<int, int> first_child;
    {
        std::map<int, std::vector<int>> kids;
        std::deque<const ForestNode*> queue;
        for (const ForestNode& root : f.roots) queue.push_back(&root);
        int p = 0;
        while (!queue.empty()) {
            const ForestNode* node = queue.front();
            queue.pop_front();
            position[node->label] = ++p;
            for (const ForestNode& child : node->children) {
                parent_of[child.label] = node->label;
                queue.push_back(&child);
            }
            if (!node->children.empty()) first_child[node->label] = node->children.front().label;
        }
    }

    Word out;
    out.reserve(2 * bfs.size());
    std::set<int> closed;  // labels whose level-1 letter is already out
    for (int p = 1; p <= count; ++p) {
        const int label = bfs[p - 1];
        const auto parent = parent_of.find(label);
        const bool leftmost_child =
            parent != parent_of.end() && first_child.at(parent->second) == label;
        if (p == 1 || !leftmost_child) {
            out.push_back(Letter{label, 0});
            continue;
        }
        // leaves that precede the parent in BFS order close before it does
        const int parent_pos = position.at(parent->second);
        for (int q = 1; q < parent_pos; ++q) {
            const int early = bfs[q - 1];
            if (closed.insert(early).second) out.push_back(Letter{early, 1});
        }
        closed.insert(parent->second);
        out.push_back(Letter{parent->second, 1});
        out.push_back(Letter{label, 0});
    }
    for (int label : bfs)
        if (closed.insert(label).second) out.push_back(Letter{label, 1});
    return out;
}

Forest region_to_forest(const RegionPoint& x) {
    return phi(sigma(x));
}

}  // namespace ctcat
