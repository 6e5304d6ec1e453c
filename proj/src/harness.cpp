#include "ldbraid/harness.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldbraid {

std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  SplitMix64 g(seed ^ ((stream + 1) * 0xbf58476d1ce4e5b9ull) ^ ((counter + 1) * 0x94d049bb133111ebull));
  return g.next();
}

Sampler::Sampler(const SampleConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
  if (cfg_.max_index < 1 || cfg_.max_len < 1 || cfg_.max_exp < 1 || cfg_.max_term_size < 1) {
    throw std::invalid_argument("sample bounds must be >= 1");
  }
}

// Uniform-ish pick from [lo, hi] excluding `avoid` when it lies inside.
// Callers guarantee hi > lo whenever avoid is inside the range.
int Sampler::pick_index(int lo, int hi, int avoid) {
  if (avoid < lo || avoid > hi) return static_cast<int>(rng_.range(lo, hi));
  const int k = static_cast<int>(rng_.range(lo, hi - 1));
  return k >= avoid ? k + 1 : k;
}

FreeWord Sampler::free_word() {
  int len = static_cast<int>(rng_.range(0, cfg_.max_len));
  if (cfg_.max_index == 1) len = std::min(len, 1);  // a reduced word on x_1 alone is a power
  std::vector<Syllable> syl;
  syl.reserve(static_cast<std::size_t>(len));
  int prev = 0;
  for (int i = 0; i < len; ++i) {
    const int index = pick_index(1, cfg_.max_index, prev);
    const std::int64_t mag = rng_.range(1, cfg_.max_exp);
    syl.push_back(Syllable{index, rng_.coin() ? mag : -mag});
    prev = index;
  }
  return reduce(syl);
}

FreeWord Sampler::w_word() {
  if (cfg_.max_index < 2) throw std::invalid_argument("w_word requires max_index >= 2");
  for (;;) {
    const int len = static_cast<int>(rng_.range(1, cfg_.max_len));
    std::vector<Syllable> syl;
    syl.reserve(static_cast<std::size_t>(len));
    int prev = 0;
    bool stuck = false;
    for (int i = 0; i < len; ++i) {
      const bool endpoint = (i == 0 || i == len - 1);
      const int lo = endpoint ? 2 : 1;
      if (lo >= cfg_.max_index && prev == cfg_.max_index) {
        stuck = true;  // only index available collides with the previous one
        break;
      }
      const int index = pick_index(lo, cfg_.max_index, prev);
      const std::int64_t mag = rng_.range(1, cfg_.max_exp);
      syl.push_back(Syllable{index, rng_.coin() ? mag : -mag});
      prev = index;
    }
    if (stuck) continue;
    return reduce(syl);
  }
}

FreeWord Sampler::w_word_by_rejection() {
  for (;;) {
    FreeWord w = free_word();
    if (in_W(w)) return w;
  }
}

FreeWord Sampler::g_minus_word() {
  if (cfg_.max_index < 2) throw std::invalid_argument("g_minus_word requires max_index >= 2");
  int len = static_cast<int>(rng_.range(1, cfg_.max_len));
  if (cfg_.max_index == 2) len = 1;
  std::vector<Syllable> syl;
  syl.reserve(static_cast<std::size_t>(len));
  int prev = 0;
  for (int i = 0; i < len; ++i) {
    const int index = pick_index(2, cfg_.max_index, prev);
    const std::int64_t mag = rng_.range(1, cfg_.max_exp);
    syl.push_back(Syllable{index, rng_.coin() ? mag : -mag});
    prev = index;
  }
  return reduce(syl);
}

BraidWord Sampler::braid_word() {
  const int len = static_cast<int>(rng_.range(0, cfg_.max_len));
  BraidWord out;
  out.letters.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    out.letters.push_back(
        BraidLetter{static_cast<int>(rng_.range(1, cfg_.max_index)), rng_.coin() ? +1 : -1});
  }
  return out;
}

BraidWord Sampler::sigma1_positive_word() {
  if (cfg_.max_index < 2) throw std::invalid_argument("sigma1_positive_word requires max_index >= 2");
  const int sigmas = static_cast<int>(rng_.range(1, 3));
  const int block_budget = std::max(0, cfg_.max_len - sigmas) / (sigmas + 1);
  BraidWord out;
  for (int b = 0; b <= sigmas; ++b) {
    const int block_len = static_cast<int>(rng_.range(0, block_budget));
    for (int j = 0; j < block_len; ++j) {
      out.letters.push_back(
          BraidLetter{static_cast<int>(rng_.range(2, cfg_.max_index)), rng_.coin() ? +1 : -1});
    }
    if (b < sigmas) out.letters.push_back(BraidLetter{1, +1});
  }
  return out;
}

LdTerm Sampler::random_term(int leaves) {
  if (leaves == 1) return LdTerm::leaf();
  const int left = static_cast<int>(rng_.range(1, leaves - 1));
  return LdTerm::node(random_term(left), random_term(leaves - left));
}

LdTerm Sampler::ld_term() { return random_term(static_cast<int>(rng_.range(1, cfg_.max_term_size))); }

std::vector<GenLetter> expand_letters(const FreeWord& w) {
  std::vector<GenLetter> out;
  for (const Syllable& s : w.syllables()) {
    if (s.exponent == std::numeric_limits<std::int64_t>::min()) {
      throw capacity_error("syllable exponent overflow");
    }
    const int sign = s.exponent > 0 ? +1 : -1;
    const std::int64_t mag = s.exponent > 0 ? s.exponent : -s.exponent;
    for (std::int64_t c = 0; c < mag; ++c) out.push_back(GenLetter{s.index, sign});
  }
  return out;
}

FreeWord collect_letters(const std::vector<GenLetter>& letters) {
  std::vector<Syllable> syl;
  syl.reserve(letters.size());
  for (const GenLetter& l : letters) syl.push_back(Syllable{l.index, l.sign});
  return reduce(syl);
}

namespace {

// Image of the single letter g under sigma_i^{+-1}, written letter by letter.
void append_naive_image(BraidLetter l, GenLetter g, std::vector<GenLetter>& out) {
  const int i = l.index;
  std::vector<GenLetter> img;
  if (l.sign > 0) {
    if (g.index == i) {
      img = {{i, +1}, {i + 1, +1}, {i, -1}};
    } else if (g.index == i + 1) {
      img = {{i, +1}};
    } else {
      img = {{g.index, +1}};
    }
  } else {
    if (g.index == i) {
      img = {{i + 1, +1}};
    } else if (g.index == i + 1) {
      img = {{i + 1, -1}, {i, +1}, {i + 1, +1}};
    } else {
      img = {{g.index, +1}};
    }
  }
  if (g.sign < 0) {
    std::reverse(img.begin(), img.end());
    for (GenLetter& x : img) x.sign = -x.sign;
  }
  out.insert(out.end(), img.begin(), img.end());
}

// Repeated adjacent-cancellation scan; deliberately not the stack algorithm
// the syllable engine uses.
void cancel_scan(std::vector<GenLetter>& w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p].index == w[p + 1].index && w[p].sign == -w[p + 1].sign) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p),
                w.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

std::vector<GenLetter> naive_letter_action(BraidLetter l, const std::vector<GenLetter>& word) {
  std::vector<GenLetter> out;
  for (const GenLetter& g : word) append_naive_image(l, g, out);
  cancel_scan(out);
  return out;
}

std::vector<LdTerm> enumerate_ld_terms(int size) {
  if (size < 1) throw std::invalid_argument("term size must be >= 1");
  if (size == 1) return {LdTerm::leaf()};
  std::vector<LdTerm> out;
  for (int left = 1; left < size; ++left) {
    for (const LdTerm& a : enumerate_ld_terms(left)) {
      for (const LdTerm& b : enumerate_ld_terms(size - left)) {
        out.push_back(LdTerm::node(a, b));
      }
    }
  }
  return out;
}

}  // namespace ldbraid
