#include "ldbraid/freeword.hpp"

#include <stdexcept>
#include <utility>

namespace ldbraid {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a, b, &sum)) throw capacity_error("syllable exponent overflow");
  return sum;
}

std::int64_t checked_negate(std::int64_t k) {
  if (k == std::numeric_limits<std::int64_t>::min()) throw capacity_error("syllable exponent overflow");
  return -k;
}

}  // namespace

FreeWord FreeWord::generator(int index, std::int64_t exponent) {
  if (index < 1) throw std::invalid_argument("generator index must be >= 1");
  if (exponent == 0) return FreeWord{};
  return FreeWord{{Syllable{index, exponent}}};
}

void WordBuilder::push(Syllable s) {
  if (s.index < 1) throw std::invalid_argument("generator index must be >= 1");
  if (s.exponent == 0) return;
  if (!out_.empty() && out_.back().index == s.index) {
    const std::int64_t merged = checked_add(out_.back().exponent, s.exponent);
    if (merged == 0) {
      out_.pop_back();
    } else {
      out_.back().exponent = merged;
    }
    return;
  }
  out_.push_back(s);
  if (out_.size() > cap_) throw capacity_error("free word exceeds syllable cap");
}

void WordBuilder::push(std::span<const Syllable> syllables) {
  for (const Syllable& s : syllables) push(s);
}

void WordBuilder::push_inverse(const FreeWord& w) {
  const auto& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    push(Syllable{it->index, checked_negate(it->exponent)});
  }
}

FreeWord WordBuilder::take() { return FreeWord{std::move(out_)}; }

FreeWord reduce(std::span<const Syllable> raw) {
  WordBuilder b;
  b.push(raw);
  return b.take();
}

FreeWord mul(const FreeWord& a, const FreeWord& b) {
  WordBuilder out;
  out.push(a);
  out.push(b);
  return out.take();
}

FreeWord inv(const FreeWord& a) {
  WordBuilder out;
  out.push_inverse(a);
  return out.take();
}

bool in_W(const FreeWord& w) {
  if (w.is_identity()) return false;
  return w.syllables().front().index != 1 && w.syllables().back().index != 1;
}

bool in_G_minus(const FreeWord& w) {
  if (w.is_identity()) return false;
  for (const Syllable& s : w.syllables()) {
    if (s.index < 2) return false;
  }
  return true;
}

bool in_F2(const FreeWord& w) {
  for (const Syllable& s : w.syllables()) {
    if (s.index > 2) return false;
  }
  return true;
}

bool in_Z(const FreeWord& w) {
  if (w.is_identity()) return false;
  return w.syllables().front().index >= 3 && w.syllables().back().index >= 3;
}

std::optional<FreeWord> strip_x1_conjugate(const FreeWord& v) {
  const auto& syl = v.syllables();
  if (syl.size() < 3) return std::nullopt;
  if (!(syl.front() == Syllable{1, 1}) || !(syl.back() == Syllable{1, -1})) return std::nullopt;
  // The interior of a reduced word is reduced, and reducedness of v forbids
  // index 1 adjacent to the stripped ends, so the interior is in W.
  FreeWord w = reduce(std::span<const Syllable>(syl.data() + 1, syl.size() - 2));
  if (!in_W(w)) return std::nullopt;
  return w;
}

}  // namespace ldbraid
