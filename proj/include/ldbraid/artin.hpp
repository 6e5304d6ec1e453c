#pragma once

#include <cstddef>
#include <vector>

#include "ldbraid/freeword.hpp"

namespace ldbraid {

// One Artin generator or its inverse: sigma_i for sign +1, sigma_i^{-1} for
// sign -1.
struct BraidLetter {
  int index;  // >= 1
  int sign;   // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A word over Artin letters, representing an element of the braid group B
// realised as automorphisms of the free group. Deliberately a free-monoid
// word: nothing in this library reduces or normalises a BraidWord implicitly,
// so the literal letter sequence survives into certificates.
struct BraidWord {
  std::vector<BraidLetter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Cap on the syllable count of any word produced by the action; runaway
// growth surfaces as capacity_error instead of exhausting memory.
inline constexpr std::size_t kDefaultSyllableCap = 1'000'000;

// Image of w under one Artin letter:
//   sigma_i:      x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
//   sigma_i^{-1}: x_i -> x_{i+1},               x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
// and x_j fixed for j outside {i, i+1}. A syllable (j, k) maps to the k-th
// power of the generator image, reduced.
FreeWord letter_action(BraidLetter l, const FreeWord& w,
                       std::size_t syllable_cap = kDefaultSyllableCap);

// Applies b's letters left to right: the FIRST letter acts first, so
// apply(concat(b1, b2), w) == apply(b2, apply(b1, w)).
FreeWord apply(const BraidWord& b, const FreeWord& w,
               std::size_t syllable_cap = kDefaultSyllableCap);

BraidWord concat(const BraidWord& a, const BraidWord& b);

// The shift endomorphism s applied k times: sigma_i^{+-1} -> sigma_{i+k}^{+-1}.
BraidWord shift(const BraidWord& b, int k = 1);

// Letters reversed with signs negated; apply(concat(b, inv_word(b)), w) == w.
BraidWord inv_word(const BraidWord& b);

// Cancels adjacent sigma_i sigma_i^{-1} pairs, cascading. An explicit
// utility only; no operation calls it behind the caller's back.
BraidWord free_cancel(const BraidWord& b);

int max_letter_index(const BraidWord& b);  // 0 for the empty word

// Equality of the automorphisms denoted by the two words (which is equality
// in B). A letter sigma_i^{+-1} moves only x_i and x_{i+1}, so comparing the
// images of x_1 .. x_{M+1}, with M the largest letter index occurring in
// either word, is exhaustive.
bool braid_eq(const BraidWord& a, const BraidWord& b,
              std::size_t syllable_cap = kDefaultSyllableCap);

// Syntactic check on the literal word: at least one sigma_1 and no
// sigma_1^{-1}. Sufficient, not necessary, for positivity of the element.
bool is_sigma1_positive(const BraidWord& b);

// Splits a sigma_1-positive word at its sigma_1 letters: for n occurrences,
// returns the n+1 (possibly empty) blocks of letters with index >= 2 between
// them. Throws std::invalid_argument if b is not sigma_1-positive.
std::vector<BraidWord> decompose_sigma1(const BraidWord& b);

}  // namespace ldbraid
