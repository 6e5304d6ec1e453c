#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ldbraid/artin.hpp"

namespace ldbraid {

// A term of the one-generated left-self-distributive algebra: a finite binary
// tree whose leaves are the single generator. Immutable, cheap to copy
// (shared structure), compared structurally.
class LdTerm {
 public:
  LdTerm() = default;  // the generator

  static LdTerm leaf() { return LdTerm{}; }
  static LdTerm node(LdTerm left, LdTerm right);

  bool is_leaf() const { return node_ == nullptr; }
  const LdTerm& left() const;   // pre: !is_leaf()
  const LdTerm& right() const;  // pre: !is_leaf()

  int leaf_count() const;
  std::size_t hash() const;

  friend bool operator==(const LdTerm& a, const LdTerm& b);
  friend bool operator!=(const LdTerm& a, const LdTerm& b) { return !(a == b); }

 private:
  struct Node;
  explicit LdTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;  // nullptr = leaf
};

struct LdTermHash {
  std::size_t operator()(const LdTerm& t) const { return t.hash(); }
};

// Dehornoy's operation on braid words:
//   a * b = a . s(b) . sigma_1 . s(a^{-1})
// as a literal concatenation, never reduced; |a * b| = 2|a| + |b| + 1.
BraidWord star(const BraidWord& a, const BraidWord& b);

struct FoldStarResult {
  BraidWord result;  // ((a * b_1) * b_2 * ...) * b_k
  BraidWord suffix;  // result minus the literal prefix a
};

// Left fold of star over bs. Each star keeps its left argument as a literal
// prefix, so the suffix is obtained by prefix stripping; every appended
// sigma_1 is positive and every other appended letter has index >= 2, hence
// the suffix is always syntactically sigma_1-positive.
// Throws std::invalid_argument for empty bs.
FoldStarResult fold_star(const BraidWord& a, std::span<const BraidWord> bs);

// Audit record for one instance of the irreflexivity theorem.
struct IrreflexivityCertificate {
  BraidWord alpha;
  std::vector<BraidWord> betas;
  BraidWord result;  // the fold ((alpha * b_1) * ...) * b_k
  BraidWord suffix;  // result = alpha . suffix as literal words
  bool sigma1_positive = false;
  FreeWord image_of_x1;              // apply(suffix, x_1)
  std::optional<FreeWord> stripped;  // the w in W with image_of_x1 = x_1 w x_1^{-1}
  bool distinct_from_alpha = false;  // !braid_eq(alpha, result)

  bool passed() const { return sigma1_positive && stripped.has_value() && distinct_from_alpha; }
};

// Runs the checks behind the theorem on one instance. passed() must hold for
// every input; a failing certificate signals an implementation bug and is
// returned verbatim for inspection.
IrreflexivityCertificate verify_irreflexivity(const BraidWord& alpha,
                                              std::span<const BraidWord> betas,
                                              std::size_t syllable_cap = kDefaultSyllableCap);

// Interprets the term in (B, *) with the generator read as `base`.
BraidWord eval_term(const LdTerm& t, const BraidWord& base = {});

// braid_eq(a * (b * c), (a * b) * (a * c)); true for all inputs, false only
// on an implementation bug.
bool check_distributivity(const BraidWord& a, const BraidWord& b, const BraidWord& c,
                          std::size_t syllable_cap = kDefaultSyllableCap);

// Verifies a claimed witness b_1..b_k for a < b, i.e. whether
// b = ((a * b_1) * ...) * b_k in B. Does not search for witnesses.
bool check_laver_witness(const BraidWord& a, const BraidWord& b,
                         std::span<const BraidWord> bs,
                         std::size_t syllable_cap = kDefaultSyllableCap);

enum class LdEquiv { equivalent, inequivalent, unknown };

// Bounded breadth-first closure of {s} under single applications of the LD
// law a*(b*c) <-> (a*b)*(a*c) at any subterm, in both directions, restricted
// to terms with at most max_term_size leaves and explored depth_bound levels
// deep. Returns equivalent when t is reached, inequivalent when the bounded
// closure is exhausted without reaching t, and unknown when the depth bound
// cut exploration short (never a silently truncated answer).
//
// The default bounds resolve every pair of terms with at most 4 leaves:
// exhaustion needs a universe tight enough to empty out, and 12 leaves at
// depth 12 does that with room to spare, while a roomier universe (say 64
// leaves) leaves the frontier alive past any reasonable depth.
LdEquiv ld_equiv_oracle(const LdTerm& s, const LdTerm& t, int depth_bound = 12,
                        int max_term_size = 12);

}  // namespace ldbraid
