#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "ldbraid/errors.hpp"

namespace ldbraid {

// One maximal power x_i^k of a reduced word.
struct Syllable {
  int index;              // subscript of x_i, >= 1
  std::int64_t exponent;  // != 0 inside a FreeWord
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Reduced word of the free group on x_1, x_2, x_3, ... Adjacent syllables
// always carry distinct indices; the empty word is the identity and its only
// representation, so equality of group elements is structural equality.
// Immutable after construction.
class FreeWord {
 public:
  FreeWord() = default;

  // x_index^exponent; exponent 0 yields the identity.
  static FreeWord generator(int index, std::int64_t exponent = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  explicit FreeWord(std::vector<Syllable> reduced) : syllables_(std::move(reduced)) {}

  std::vector<Syllable> syllables_;

  friend class WordBuilder;
};

// Left-to-right syllable accumulator that keeps its content reduced at every
// step: an incoming syllable merges with or cancels against the right end.
// Growing past `syllable_cap` throws capacity_error, as does exponent
// overflow in a merge.
class WordBuilder {
 public:
  explicit WordBuilder(std::size_t syllable_cap = std::numeric_limits<std::size_t>::max())
      : cap_(syllable_cap) {}

  void push(Syllable s);
  void push(std::span<const Syllable> syllables);
  void push(const FreeWord& w) { push(std::span<const Syllable>(w.syllables())); }
  void push_inverse(const FreeWord& w);

  std::size_t size() const { return out_.size(); }
  FreeWord take();

 private:
  std::vector<Syllable> out_;
  std::size_t cap_;
};

// The unique reduced word equal to the input: zero exponents dropped,
// equal-index neighbours merged, cancellations cascaded.
FreeWord reduce(std::span<const Syllable> raw);

FreeWord mul(const FreeWord& a, const FreeWord& b);
FreeWord inv(const FreeWord& a);

// Word classes used by the lemma machinery. All take reduced words, which is
// what FreeWord guarantees.
bool in_W(const FreeWord& w);        // != 1 and does not begin or end with x_1^{+-1}
bool in_G_minus(const FreeWord& w);  // != 1 and every generator index >= 2
bool in_F2(const FreeWord& w);       // every generator index 1 or 2; 1 qualifies
bool in_Z(const FreeWord& w);        // != 1 and does not begin or end with x_1^{+-1} or x_2^{+-1}

// If v = x_1 w x_1^{-1} for some w in W, returns that (unique) w, else
// nullopt. Such a product is already reduced, so the test is syntactic on
// v's first and last syllables.
std::optional<FreeWord> strip_x1_conjugate(const FreeWord& v);

}  // namespace ldbraid
