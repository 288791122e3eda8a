#include "ctcat/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ctcat {

Letter parse_letter(std::string_view token) {
    auto fail = [&]() -> Letter {
        throw std::invalid_argument("bad letter token '" + std::string(token) +
                                    "' (expected <index>^<level>)");
    };
    auto caret = token.find('^');
    if (caret == std::string_view::npos || caret == 0 || caret + 2 != token.size()) return fail();
    int index = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + caret, index);
    if (ec != std::errc{} || ptr != token.data() + caret) return fail();
    if (index == 0)
        throw std::invalid_argument("letter index must be nonzero in '" + std::string(token) + "'");
    char level = token[caret + 1];
    if (level != '0' && level != '1') return fail();
    return Letter{index, level - '0'};
}

Word parse_word(std::string_view text) {
    Word word;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) word.push_back(parse_letter(token));
    return word;
}

std::string to_string(const Letter& letter) {
    return std::to_string(letter.index) + "^" + std::to_string(letter.level);
}

std::string to_string(const Word& word) {
    std::string out;
    for (const Letter& l : word) {
        if (!out.empty()) out += ' ';
        out += to_string(l);
    }
    return out;
}

namespace {

// Structural screening shared by both validators: letter ranges, duplicates,
// and the expected length. Fills `pos` with 1-based positions.
ValidationReport screen_letters(const Word& w, int n, std::size_t expected,
                                std::map<Letter, int>& pos) {
    if (n < 1) return ValidationReport::bad("size parameter n must be >= 1");
    if (w.size() != expected)
        return ValidationReport::bad("expected " + std::to_string(expected) + " letters, got " +
                                     std::to_string(w.size()));
    for (std::size_t p = 0; p < w.size(); ++p) {
        const Letter& l = w[p];
        if (l.index == 0 || std::abs(l.index) > n)
            return ValidationReport::bad("letter index out of range: " + to_string(l));
        if (l.level != 0 && l.level != 1)
            return ValidationReport::bad("letter level out of range: " + to_string(l));
        if (!pos.emplace(l, static_cast<int>(p) + 1).second)
            return ValidationReport::bad("duplicate letter " + to_string(l));
    }
    return ValidationReport::okay();
}

std::string witness(const Letter& a, const Letter& b) {
    return to_string(a) + "," + to_string(b);
}

}  // namespace

ValidationReport validate_symmetric_sketch(const Word& w, int n) {
    std::map<Letter, int> pos;
    if (auto r = screen_letters(w, n, 4 * static_cast<std::size_t>(n), pos); !r.is_ok()) return r;

    std::vector<int> indices;
    for (int i = -n; i <= n; ++i)
        if (i != 0) indices.push_back(i);

    // (i) the letters are exactly the alphabet on [-n, n] \ {0}
    for (int i : indices)
        for (int s : {0, 1})
            if (!pos.count(Letter{i, s}))
                return ValidationReport::violated(1, to_string(Letter{i, s}));

    auto at = [&pos](int i, int s) { return pos.at(Letter{i, s}); };

    // (ii) every level-0 letter precedes its level-1 partner
    for (int i : indices)
        if (!(at(i, 0) < at(i, 1)))
            return ValidationReport::violated(2, witness(Letter{i, 0}, Letter{i, 1}));

    // (iii) the level-1 subword repeats the level-0 index order
    for (int i : indices)
        for (int j : indices)
            if (i != j && at(i, 0) < at(j, 0) && !(at(i, 1) < at(j, 1)))
                return ValidationReport::violated(3, witness(Letter{i, 1}, Letter{j, 1}));

    // (iv) checked literally for every ordered pair, including j = i and j = -i
    for (int i : indices)
        for (int j : indices)
            for (int s : {0, 1})
                if (at(i, 0) < at(j, s) && !(at(-j, 0) < at(-i, s)))
                    return ValidationReport::violated(4, witness(Letter{-j, 0}, Letter{-i, s}));

    return ValidationReport::okay();
}

ValidationReport validate_annotated_sketch(const Word& w, int n) {
    std::map<Letter, int> pos;
    if (auto r = screen_letters(w, n, 2 * static_cast<std::size_t>(n), pos); !r.is_ok()) return r;

    std::vector<int> zeros, ones;
    for (const Letter& l : w) (l.level == 0 ? zeros : ones).push_back(l.index);

    if (static_cast<int>(zeros.size()) != n)
        return ValidationReport::bad("expected " + std::to_string(n) + " level-0 letters, got " +
                                     std::to_string(zeros.size()));
    std::set<int> abs_seen;
    for (int v : zeros)
        if (!abs_seen.insert(std::abs(v)).second)
            return ValidationReport::bad("absolute index " + std::to_string(std::abs(v)) +
                                         " used by two level-0 letters");
    // n distinct absolute values within [1, n] cover all of [1, n]

    std::set<int> set0(zeros.begin(), zeros.end());
    std::set<int> set1(ones.begin(), ones.end());
    if (set0 != set1)
        return ValidationReport::bad("level-0 and level-1 letters use different index sets");

    auto at = [&pos](int i, int s) { return pos.at(Letter{i, s}); };

    for (int i : set0)
        if (!(at(i, 0) < at(i, 1)))
            return ValidationReport::violated(2, witness(Letter{i, 0}, Letter{i, 1}));

    for (int i : set0)
        for (int j : set0)
            if (i != j && at(i, 0) < at(j, 0) && !(at(i, 1) < at(j, 1)))
                return ValidationReport::violated(3, witness(Letter{i, 1}, Letter{j, 1}));

    return ValidationReport::okay();
}

Word symmetric_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(Letter{-it->index, 1 - it->level});
    return out;
}

int rightmost_zero_position(const Word& w) {
    for (int p = static_cast<int>(w.size()); p >= 1; --p)
        if (w[p - 1].level == 0) return p;
    throw std::invalid_argument("word has no level-0 letter");
}

std::pair<Word, Word> decompose_symmetric(const Word& w, int n) {
    require_valid(validate_symmetric_sketch(w, n), "decompose_symmetric");

    std::set<int> chosen;  // signed indices of the n leftmost level-0 letters
    for (const Letter& l : w) {
        if (l.level != 0) continue;
        chosen.insert(l.index);
        if (static_cast<int>(chosen.size()) == n) break;
    }

    Word first, second;
    for (const Letter& l : w) (chosen.count(l.index) ? first : second).push_back(l);

    if (!validate_annotated_sketch(first, n).is_ok())
        detail::internal_error("decompose_symmetric: first component is not an annotated 1-sketch");
    if (second != symmetric_word(first))
        detail::internal_error("decompose_symmetric: complement differs from the symmetric word");
    return {std::move(first), std::move(second)};
}

namespace {

std::vector<Word> shuffle_rec(const Word& psi) {
    if (psi.empty()) return {Word{}};
    const int k = static_cast<int>(psi.size());
    const Letter last = psi.back();

    std::vector<Word> out;
    // keep the first i letters in front; their negations close after last^1
    for (int i = 0; i <= k - 1; ++i) {
        Word head(psi.begin(), psi.begin() + i);
        Word closing;
        for (int t = i - 1; t >= 0; --t) closing.push_back(Letter{-psi[t].index, 0});
        Word inner(psi.begin() + i, psi.begin() + (k - 1));
        for (const Word& u : shuffle_rec(inner)) {
            Word word = head;
            word.push_back(Letter{-last.index, 0});
            word.insert(word.end(), u.begin(), u.end());
            word.push_back(Letter{last.index, 1});
            word.insert(word.end(), closing.begin(), closing.end());
            out.push_back(std::move(word));
        }
    }
    // the plain concatenation of psi and its symmetric
    Word word = psi;
    for (int t = k - 1; t >= 0; --t) word.push_back(Letter{-psi[t].index, 0});
    out.push_back(std::move(word));
    return out;
}

}  // namespace

std::vector<Word> tail_shuffles(const Word& psi) {
    std::set<int> seen;
    for (const Letter& l : psi) {
        if (l.level != 1)
            throw std::invalid_argument("tail_shuffles expects level-1 letters, got " + to_string(l));
        if (l.index == 0) throw std::invalid_argument("letter index must be nonzero");
        if (!seen.insert(l.index).second)
            throw std::invalid_argument("duplicate index " + std::to_string(l.index) +
                                        " in shuffle input");
    }
    std::vector<Word> out = shuffle_rec(psi);
    std::set<Word> distinct(out.begin(), out.end());
    if (distinct.size() != out.size() || out.size() != (std::size_t{1} << psi.size()))
        detail::internal_error("tail_shuffles: expected 2^k distinct words");
    return out;
}

std::vector<Word> sketch_shuffles(const Word& w1, int n) {
    require_valid(validate_annotated_sketch(w1, n), "sketch_shuffles");

    const int s = rightmost_zero_position(w1);
    Word head(w1.begin(), w1.begin() + (s - 1));
    const Letter pivot = w1[s - 1];
    Word tail(w1.begin() + s, w1.end());
    const Word head_sym = symmetric_word(head);

    std::vector<Word> out;
    for (const Word& u : tail_shuffles(tail)) {
        Word word = head;
        word.push_back(pivot);
        word.insert(word.end(), u.begin(), u.end());
        word.push_back(Letter{-pivot.index, 1});
        word.insert(word.end(), head_sym.begin(), head_sym.end());
        out.push_back(std::move(word));
    }
    std::set<Word> distinct(out.begin(), out.end());
    if (distinct.size() != out.size())
        detail::internal_error("sketch_shuffles: duplicate shuffle produced");
    return out;
}

void enumerate_annotated_sketches(int n, const std::function<void(const Word&)>& emit) {
    if (n < 1) throw std::invalid_argument("enumerate_annotated_sketches: n must be >= 1");

    Word word;
    word.reserve(2 * static_cast<std::size_t>(n));
    std::vector<int> open_order;   // signed indices in opening order
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::size_t closed = 0;

    auto rec = [&](auto&& self) -> void {
        if (word.size() == 2 * static_cast<std::size_t>(n)) {
            emit(word);
            return;
        }
        // candidates in letter order: an opener for every unused absolute
        // index and the single admissible closer
        std::vector<Letter> candidates;
        for (int a = 1; a <= n; ++a)
            if (!used[a]) {
                candidates.push_back(Letter{-a, 0});
                candidates.push_back(Letter{a, 0});
            }
        if (closed < open_order.size()) candidates.push_back(Letter{open_order[closed], 1});
        std::sort(candidates.begin(), candidates.end());

        for (const Letter& l : candidates) {
            word.push_back(l);
            if (l.level == 0) {
                used[std::abs(l.index)] = true;
                open_order.push_back(l.index);
            } else {
                ++closed;
            }
            self(self);
            if (l.level == 0) {
                used[std::abs(l.index)] = false;
                open_order.pop_back();
            } else {
                --closed;
            }
            word.pop_back();
        }
    };
    rec(rec);
}

std::vector<Word> all_annotated_sketches(int n) {
    std::vector<Word> out;
    enumerate_annotated_sketches(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<Word> enumerate_symmetric_sketches(int n) {
    std::vector<Word> out;
    enumerate_annotated_sketches(n, [&](const Word& w1) {
        for (Word& w : sketch_shuffles(w1, n)) out.push_back(std::move(w));
    });
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        detail::internal_error("enumerate_symmetric_sketches: shuffle union is not disjoint");
    return out;
}

LatticePath to_dyck_path(const Word& w1) {
    LatticePath path;
    path.reserve(w1.size());
    int height = 0;
    for (const Letter& l : w1) {
        if (l.level == 0) {
            path += 'U';
            ++height;
        } else {
            path += 'D';
            --height;
        }
        if (height < 0)
            throw std::invalid_argument("to_dyck_path: level pattern dips below zero");
    }
    if (height != 0) throw std::invalid_argument("to_dyck_path: unbalanced level pattern");
    return path;
}

}  // namespace ctcat
