#pragma once

#include <cstdint>
#include <vector>

#include "ldbraid/artin.hpp"
#include "ldbraid/freeword.hpp"
#include "ldbraid/ldalg.hpp"

namespace ldbraid {

// Bounds for the seeded samplers. Equal configs produce identical sample
// streams, on every platform.
struct SampleConfig {
  std::uint64_t seed = 1;
  int max_index = 6;
  int max_len = 16;
  std::int64_t max_exp = 5;
  int max_term_size = 8;
};

// splitmix64. Chosen over std:: engines because the byte-identical report
// contract must not depend on the standard library's distribution internals.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // In [0, n); n >= 1. Coverage of shapes matters here, not exact uniformity.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Inclusive range.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

// Stable sub-seed for (stream, counter) under a master seed; used to give
// every trial of every suite its own deterministic sampler.
std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

class Sampler {
 public:
  explicit Sampler(const SampleConfig& cfg);

  FreeWord free_word();
  FreeWord w_word();               // constructed to satisfy in_W
  FreeWord w_word_by_rejection();  // second opinion for distribution smoke tests
  FreeWord g_minus_word();         // constructed to satisfy in_G_minus
  BraidWord braid_word();
  BraidWord sigma1_positive_word();  // constructed to satisfy is_sigma1_positive
  LdTerm ld_term();

  SplitMix64& rng() { return rng_; }
  const SampleConfig& config() const { return cfg_; }

 private:
  int pick_index(int lo, int hi, int avoid);
  LdTerm random_term(int leaves);

  SampleConfig cfg_;
  SplitMix64 rng_;
};

// Letter-by-letter free-group engine, kept deliberately naive (single
// letters, repeated adjacent-cancellation scans). Exists solely to
// cross-check the syllable engine.
struct GenLetter {
  int index;
  int sign;  // +1 or -1
  friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

std::vector<GenLetter> expand_letters(const FreeWord& w);
FreeWord collect_letters(const std::vector<GenLetter>& letters);
std::vector<GenLetter> naive_letter_action(BraidLetter l, const std::vector<GenLetter>& word);

// All LD terms with exactly `size` leaves, duplicate-free;
// Catalan(size - 1) of them.
std::vector<LdTerm> enumerate_ld_terms(int size);

}  // namespace ldbraid
