#include "ldbraid/artin.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ldbraid {

namespace {

void check_letter(BraidLetter l) {
  if (l.index < 1) throw std::invalid_argument("Artin letter index must be >= 1");
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("Artin letter sign must be +1 or -1");
}

}  // namespace

FreeWord letter_action(BraidLetter l, const FreeWord& w, std::size_t syllable_cap) {
  check_letter(l);
  const int i = l.index;
  WordBuilder out(syllable_cap);
  for (const Syllable& s : w.syllables()) {
    if (l.sign > 0) {
      if (s.index == i) {
        // x_i^k -> x_i x_{i+1}^k x_i^{-1}
        out.push(Syllable{i, 1});
        out.push(Syllable{i + 1, s.exponent});
        out.push(Syllable{i, -1});
      } else if (s.index == i + 1) {
        // x_{i+1}^k -> x_i^k
        out.push(Syllable{i, s.exponent});
      } else {
        out.push(s);
      }
    } else {
      if (s.index == i) {
        // x_i^k -> x_{i+1}^k
        out.push(Syllable{i + 1, s.exponent});
      } else if (s.index == i + 1) {
        // x_{i+1}^k -> x_{i+1}^{-1} x_i^k x_{i+1}
        out.push(Syllable{i + 1, -1});
        out.push(Syllable{i, s.exponent});
        out.push(Syllable{i + 1, 1});
      } else {
        out.push(s);
      }
    }
  }
  return out.take();
}

FreeWord apply(const BraidWord& b, const FreeWord& w, std::size_t syllable_cap) {
  FreeWord image = w;
  for (const BraidLetter& l : b.letters) {
    image = letter_action(l, image, syllable_cap);
  }
  return image;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out;
  out.letters.reserve(a.size() + b.size());
  out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord shift(const BraidWord& b, int k) {
  if (k < 1) throw std::invalid_argument("shift amount must be >= 1");
  BraidWord out;
  out.letters.reserve(b.size());
  for (const BraidLetter& l : b.letters) {
    check_letter(l);
    if (l.index > std::numeric_limits<int>::max() - k) throw capacity_error("letter index overflow");
    out.letters.push_back(BraidLetter{l.index + k, l.sign});
  }
  return out;
}

BraidWord inv_word(const BraidWord& b) {
  BraidWord out;
  out.letters.reserve(b.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    check_letter(*it);
    out.letters.push_back(BraidLetter{it->index, -it->sign});
  }
  return out;
}

BraidWord free_cancel(const BraidWord& b) {
  BraidWord out;
  for (const BraidLetter& l : b.letters) {
    check_letter(l);
    if (!out.empty() && out.letters.back().index == l.index && out.letters.back().sign == -l.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

int max_letter_index(const BraidWord& b) {
  int m = 0;
  for (const BraidLetter& l : b.letters) m = std::max(m, l.index);
  return m;
}

bool braid_eq(const BraidWord& a, const BraidWord& b, std::size_t syllable_cap) {
  const int m = std::max(max_letter_index(a), max_letter_index(b));
  for (int j = 1; j <= m + 1; ++j) {
    const FreeWord gen = FreeWord::generator(j);
    if (apply(a, gen, syllable_cap) != apply(b, gen, syllable_cap)) return false;
  }
  return true;
}

bool is_sigma1_positive(const BraidWord& b) {
  bool has_sigma1 = false;
  for (const BraidLetter& l : b.letters) {
    if (l.index == 1) {
      if (l.sign < 0) return false;
      has_sigma1 = true;
    }
  }
  return has_sigma1;
}

std::vector<BraidWord> decompose_sigma1(const BraidWord& b) {
  if (!is_sigma1_positive(b)) {
    throw std::invalid_argument("decompose_sigma1 requires a sigma_1-positive word");
  }
  std::vector<BraidWord> blocks(1);
  for (const BraidLetter& l : b.letters) {
    if (l.index == 1) {
      blocks.emplace_back();
    } else {
      blocks.back().letters.push_back(l);
    }
  }
  return blocks;
}

}  // namespace ldbraid
