#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ldbraid/harness.hpp"

namespace ldbraid {

// Bounds shared by all randomized suites.
struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = 500;
  int max_index = 6;
  int max_len = 16;
  std::size_t syllable_cap = kDefaultSyllableCap;
};

struct SuiteResult {
  std::string name;
  std::string report;  // byte-stable for a fixed config
  int trials = 0;
  int passes = 0;
  int failures = 0;
  int overflows = 0;  // resource-cap hits, counted apart from failures

  bool ok() const { return failures == 0; }
};

// lemma3, lemma4, lemma5, lemma6, theorem, relations, oracle, all.
const std::vector<std::string>& suite_names();

// Runs one named suite (or every suite, for "all"). Each trial draws from a
// sampler seeded by (seed, suite stream, trial index), so a suite behaves
// identically whether run alone or as part of "all". Unknown names throw
// std::invalid_argument.
SuiteResult run_suite(std::string_view name, const SuiteConfig& cfg);

}  // namespace ldbraid
