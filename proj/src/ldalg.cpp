#include "ldbraid/ldalg.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace ldbraid {

struct LdTerm::Node {
  LdTerm left;
  LdTerm right;
  int leaves;
  std::size_t hash;
};

namespace {

std::size_t hash_pair(std::size_t l, std::size_t r) {
  std::size_t h = l;
  h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

LdTerm LdTerm::node(LdTerm left, LdTerm right) {
  const int leaves = left.leaf_count() + right.leaf_count();
  const std::size_t h = hash_pair(left.hash(), right.hash());
  return LdTerm{std::make_shared<const Node>(Node{std::move(left), std::move(right), leaves, h})};
}

const LdTerm& LdTerm::left() const {
  if (!node_) throw std::logic_error("left() on a leaf");
  return node_->left;
}

const LdTerm& LdTerm::right() const {
  if (!node_) throw std::logic_error("right() on a leaf");
  return node_->right;
}

int LdTerm::leaf_count() const { return node_ ? node_->leaves : 1; }

std::size_t LdTerm::hash() const { return node_ ? node_->hash : 0x9e3779b97f4a7c15ull; }

bool operator==(const LdTerm& a, const LdTerm& b) {
  if (a.node_ == b.node_) return true;  // shared subtree, or two leaves
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash || a.node_->leaves != b.node_->leaves) return false;
  return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

BraidWord star(const BraidWord& a, const BraidWord& b) {
  const BraidWord shifted_b = shift(b);
  const BraidWord shifted_a_inv = shift(inv_word(a));
  BraidWord out;
  out.letters.reserve(2 * a.size() + b.size() + 1);
  out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
  out.letters.insert(out.letters.end(), shifted_b.letters.begin(), shifted_b.letters.end());
  out.letters.push_back(BraidLetter{1, +1});
  out.letters.insert(out.letters.end(), shifted_a_inv.letters.begin(), shifted_a_inv.letters.end());
  return out;
}

FoldStarResult fold_star(const BraidWord& a, std::span<const BraidWord> bs) {
  if (bs.empty()) throw std::invalid_argument("fold_star requires at least one beta");
  BraidWord result = a;
  for (const BraidWord& b : bs) result = star(result, b);
  BraidWord suffix;
  suffix.letters.assign(result.letters.begin() + static_cast<std::ptrdiff_t>(a.size()),
                        result.letters.end());
  return FoldStarResult{std::move(result), std::move(suffix)};
}

IrreflexivityCertificate verify_irreflexivity(const BraidWord& alpha,
                                              std::span<const BraidWord> betas,
                                              std::size_t syllable_cap) {
  FoldStarResult fold = fold_star(alpha, betas);
  IrreflexivityCertificate cert;
  cert.alpha = alpha;
  cert.betas.assign(betas.begin(), betas.end());
  cert.result = std::move(fold.result);
  cert.suffix = std::move(fold.suffix);
  cert.sigma1_positive = is_sigma1_positive(cert.suffix);
  cert.image_of_x1 = apply(cert.suffix, FreeWord::generator(1), syllable_cap);
  cert.stripped = strip_x1_conjugate(cert.image_of_x1);
  cert.distinct_from_alpha = !braid_eq(alpha, cert.result, syllable_cap);
  return cert;
}

BraidWord eval_term(const LdTerm& t, const BraidWord& base) {
  if (t.is_leaf()) return base;
  return star(eval_term(t.left(), base), eval_term(t.right(), base));
}

bool check_distributivity(const BraidWord& a, const BraidWord& b, const BraidWord& c,
                          std::size_t syllable_cap) {
  return braid_eq(star(a, star(b, c)), star(star(a, b), star(a, c)), syllable_cap);
}

bool check_laver_witness(const BraidWord& a, const BraidWord& b,
                         std::span<const BraidWord> bs, std::size_t syllable_cap) {
  return braid_eq(b, fold_star(a, bs).result, syllable_cap);
}

namespace {

// All one-step LD rewrites of u, in both directions, at every subterm.
void collect_rewrites(const LdTerm& u, std::vector<LdTerm>& out) {
  if (u.is_leaf()) return;
  const LdTerm& l = u.left();
  const LdTerm& r = u.right();
  if (!r.is_leaf()) {
    // a*(b*c) -> (a*b)*(a*c)
    out.push_back(LdTerm::node(LdTerm::node(l, r.left()), LdTerm::node(l, r.right())));
  }
  if (!l.is_leaf() && !r.is_leaf() && l.left() == r.left()) {
    // (a*b)*(a*c) -> a*(b*c)
    out.push_back(LdTerm::node(l.left(), LdTerm::node(l.right(), r.right())));
  }
  std::vector<LdTerm> sub;
  collect_rewrites(l, sub);
  for (LdTerm& v : sub) out.push_back(LdTerm::node(std::move(v), r));
  sub.clear();
  collect_rewrites(r, sub);
  for (LdTerm& v : sub) out.push_back(LdTerm::node(l, std::move(v)));
}

}  // namespace

LdEquiv ld_equiv_oracle(const LdTerm& s, const LdTerm& t, int depth_bound, int max_term_size) {
  if (depth_bound < 1 || max_term_size < 1) {
    throw std::invalid_argument("oracle bounds must be >= 1");
  }
  if (s == t) return LdEquiv::equivalent;
  if (s.leaf_count() > max_term_size || t.leaf_count() > max_term_size) {
    return LdEquiv::unknown;  // the bounded universe cannot even hold the inputs
  }

  std::unordered_set<LdTerm, LdTermHash> seen{s};
  std::vector<LdTerm> frontier{s};
  std::vector<LdTerm> rewrites;

  for (int depth = 0; depth < depth_bound; ++depth) {
    std::vector<LdTerm> next;
    for (const LdTerm& u : frontier) {
      rewrites.clear();
      collect_rewrites(u, rewrites);
      for (LdTerm& v : rewrites) {
        if (v.leaf_count() > max_term_size) continue;
        if (v == t) return LdEquiv::equivalent;
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    if (next.empty()) return LdEquiv::inequivalent;  // bounded closure exhausted
    frontier = std::move(next);
  }
  return LdEquiv::unknown;  // depth bound cut exploration short
}

}  // namespace ldbraid
