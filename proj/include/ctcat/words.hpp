// words.hpp -- annotated 1-sketches over the signed two-level alphabet

#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctcat/counting.hpp"
#include "ctcat/validation.hpp"

namespace ctcat {

/// One alphabet symbol: a signed nonzero index carrying a level. Level 0
/// stands for the bare value x_i, level 1 for the shifted value 1 + x_i.
/// Serialized as `<index>^<level>`, e.g. `-2^0`.
struct Letter {
    int index = 0;  ///< element of [-n, n] \ {0}
    int level = 0;  ///< 0 or 1

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A finite sequence of distinct letters. Words compare lexicographically,
/// letters by (index, level) with numeric index comparison.
using Word = std::vector<Letter>;

Letter parse_letter(std::string_view token);
Word parse_word(std::string_view text);
std::string to_string(const Letter& letter);
std::string to_string(const Word& word);

/// Checks the four conditions of a symmetric annotated 1-sketch of size 2n
/// (4n letters). Conditions are checked literally and in order; the report
/// names the first violated one with a witness pair.
ValidationReport validate_symmetric_sketch(const Word& w, int n);

/// Checks that w is an annotated 1-sketch of size n: 2n letters on n signed
/// indices whose absolute values are exactly 1..n, each level-0 letter
/// before its level-1 partner, both level subwords in the same index order.
ValidationReport validate_annotated_sketch(const Word& w, int n);

/// Reverses the word and maps every letter (k, s) to (-k, 1-s). Involution.
Word symmetric_word(const Word& w);

/// 1-based position of the rightmost level-0 letter.
int rightmost_zero_position(const Word& w);

/// Splits a symmetric sketch into the annotated 1-sketch on its n leftmost
/// level-0 letters (with their level-1 partners) and the complementary
/// subword, which equals the symmetric of the first component.
std::pair<Word, Word> decompose_symmetric(const Word& w, int n);

/// Shuffle set of a run of level-1 letters with its symmetric. Input must
/// consist of level-1 letters with distinct indices; returns 2^k distinct
/// words in recursion order.
std::vector<Word> tail_shuffles(const Word& psi);

/// All symmetric sketches obtained by shuffling w1 with its symmetric:
/// 2^(2n-s) words where s is the rightmost level-0 position of w1.
std::vector<Word> sketch_shuffles(const Word& w1, int n);

/// Streams every annotated 1-sketch of size n exactly once, in
/// lexicographic order; 2^n * n! * catalan(n) words in total.
void enumerate_annotated_sketches(int n, const std::function<void(const Word&)>& emit);
std::vector<Word> all_annotated_sketches(int n);

/// Every symmetric annotated 1-sketch of size 2n, sorted lexicographically;
/// 2^n * n! * C(2n, n) words in total.
std::vector<Word> enumerate_symmetric_sketches(int n);

/// Level pattern of a sketch: U per level-0 letter, D per level-1 letter.
LatticePath to_dyck_path(const Word& w1);

}  // namespace ctcat
