#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "ldbraid/harness.hpp"
#include "ldbraid/suites.hpp"
#include "ldbraid/textio.hpp"

using namespace ldbraid;

TEST_CASE("samplers satisfy their class guarantees on every draw") {
  for (std::uint64_t seed : {1ull, 99ull, 123456789ull}) {
    SampleConfig cfg;
    cfg.seed = seed;
    Sampler s(cfg);
    for (int t = 0; t < 200; ++t) {
      CHECK(in_W(s.w_word()));
      CHECK(in_W(s.w_word_by_rejection()));
      CHECK(in_G_minus(s.g_minus_word()));
      CHECK(is_sigma1_positive(s.sigma1_positive_word()));
    }
  }
}

TEST_CASE("samplers respect the configured bounds") {
  SampleConfig cfg;
  cfg.seed = 4;
  cfg.max_index = 3;
  cfg.max_len = 5;
  cfg.max_exp = 2;
  Sampler s(cfg);
  for (int t = 0; t < 200; ++t) {
    const FreeWord w = s.free_word();
    CHECK(w.size() <= 5);
    for (const Syllable& syl : w.syllables()) {
      CHECK(syl.index <= 3);
      CHECK(syl.exponent >= -2);
      CHECK(syl.exponent <= 2);
    }
    const BraidWord b = s.braid_word();
    CHECK(b.size() <= 5);
    for (const BraidLetter& l : b.letters) CHECK(l.index <= 3);
    CHECK(s.sigma1_positive_word().size() <= 5);
  }
}

TEST_CASE("tight index bounds still sample soundly") {
  SampleConfig cfg;
  cfg.seed = 17;
  cfg.max_index = 2;
  Sampler s(cfg);
  for (int t = 0; t < 100; ++t) {
    CHECK(in_W(s.w_word()));
    CHECK(in_G_minus(s.g_minus_word()));
  }
  SampleConfig one;
  one.seed = 18;
  one.max_index = 1;
  Sampler s1(one);
  for (int t = 0; t < 50; ++t) CHECK(s1.free_word().size() <= 1);
  CHECK_THROWS_AS(s1.w_word(), std::invalid_argument);
}

TEST_CASE("equal configs yield identical streams") {
  SampleConfig cfg;
  cfg.seed = 42;
  Sampler a(cfg);
  Sampler b(cfg);
  for (int t = 0; t < 100; ++t) {
    CHECK(a.free_word() == b.free_word());
    CHECK(a.braid_word() == b.braid_word());
    CHECK(a.ld_term() == b.ld_term());
    CHECK(a.sigma1_positive_word() == b.sigma1_positive_word());
  }
  Sampler c(SampleConfig{.seed = 43});
  Sampler d(SampleConfig{.seed = 42});
  bool all_equal = true;
  for (int t = 0; t < 20; ++t) {
    if (c.braid_word() != d.braid_word()) all_equal = false;
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("derived sub-seeds separate streams and trials") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t stream = 0; stream < 8; ++stream) {
    for (std::uint64_t trial = 0; trial < 64; ++trial) {
      seen.insert(derive_subseed(1, stream, trial));
    }
  }
  CHECK(seen.size() == 8 * 64);
  CHECK(derive_subseed(1, 2, 3) == derive_subseed(1, 2, 3));
  CHECK(derive_subseed(1, 2, 3) != derive_subseed(2, 2, 3));
}

TEST_CASE("sigma1-positive sampler covers the boundary shapes") {
  SampleConfig cfg;
  cfg.seed = 5;
  Sampler s(cfg);
  bool starts_with_sigma1 = false;  // an empty first block
  bool multiple_sigma1 = false;
  bool has_nonempty_block = false;
  for (int t = 0; t < 300; ++t) {
    const BraidWord b = s.sigma1_positive_word();
    int sigma1_count = 0;
    for (const BraidLetter& l : b.letters) {
      if (l.index == 1) ++sigma1_count;
    }
    if (!b.empty() && b.letters.front() == BraidLetter{1, +1}) starts_with_sigma1 = true;
    if (sigma1_count >= 2) multiple_sigma1 = true;
    if (b.size() > static_cast<std::size_t>(sigma1_count)) has_nonempty_block = true;
  }
  CHECK(starts_with_sigma1);
  CHECK(multiple_sigma1);
  CHECK(has_nonempty_block);
}

TEST_CASE("naive engine on single generators") {
  using Letters = std::vector<GenLetter>;
  CHECK(naive_letter_action({1, +1}, Letters{{1, +1}}) == Letters{{1, +1}, {2, +1}, {1, -1}});
  CHECK(naive_letter_action({2, +1}, Letters{{1, +1}}) == Letters{{1, +1}});
  CHECK(naive_letter_action({1, -1}, Letters{{2, +1}}) == Letters{{2, -1}, {1, +1}, {2, +1}});
  CHECK(naive_letter_action({1, +1}, Letters{{2, +1}}) == Letters{{1, +1}});
  CHECK(naive_letter_action({1, -1}, Letters{{1, +1}}) == Letters{{2, +1}});
  // an inverse letter maps to the reversed, negated image
  CHECK(naive_letter_action({1, +1}, Letters{{1, -1}}) == Letters{{1, +1}, {2, -1}, {1, -1}});
}

TEST_CASE("expand and collect invert each other") {
  SplitMix64 seeds(33);
  for (int t = 0; t < 200; ++t) {
    SampleConfig cfg;
    cfg.seed = seeds.next();
    Sampler s(cfg);
    const FreeWord w = s.free_word();
    CHECK(collect_letters(expand_letters(w)) == w);
  }
}

TEST_CASE("the two action engines agree") {
  SplitMix64 seeds(34);
  for (int t = 0; t < 1000; ++t) {
    SampleConfig cfg;
    cfg.seed = seeds.next();
    Sampler s(cfg);
    const FreeWord w = s.free_word();
    const BraidLetter l{static_cast<int>(s.rng().range(1, 6)), s.rng().coin() ? +1 : -1};
    CHECK(collect_letters(naive_letter_action(l, expand_letters(w))) == letter_action(l, w));
  }
}

TEST_CASE("term enumeration counts Catalan numbers") {
  CHECK(enumerate_ld_terms(1).size() == 1);
  CHECK(enumerate_ld_terms(2).size() == 1);
  CHECK(enumerate_ld_terms(3).size() == 2);
  CHECK(enumerate_ld_terms(4).size() == 5);
  CHECK(enumerate_ld_terms(5).size() == 14);
  CHECK_THROWS_AS(enumerate_ld_terms(0), std::invalid_argument);

  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> distinct;
    for (const LdTerm& t : enumerate_ld_terms(n)) {
      CHECK(t.leaf_count() == n);
      distinct.insert(print_ld_term(t));
    }
    CHECK(distinct.size() == enumerate_ld_terms(n).size());
  }
}

TEST_CASE("term sampler respects max_term_size") {
  SampleConfig cfg;
  cfg.seed = 77;
  cfg.max_term_size = 1;
  Sampler s(cfg);
  for (int t = 0; t < 50; ++t) CHECK(s.ld_term() == LdTerm::leaf());

  cfg.max_term_size = 6;
  Sampler s6(cfg);
  for (int t = 0; t < 200; ++t) CHECK(s6.ld_term().leaf_count() <= 6);
}

TEST_CASE("suite runner is deterministic and knows its names") {
  SuiteConfig cfg;
  cfg.seed = 7;
  cfg.trials = 10;
  for (const std::string& name : suite_names()) {
    const SuiteResult a = run_suite(name, cfg);
    const SuiteResult b = run_suite(name, cfg);
    CHECK(a.report == b.report);
    CHECK(a.failures == 0);
    INFO(name);
    CHECK(a.report.find("rng=splitmix64") != std::string::npos);
    CHECK(a.report.find("seed=7") != std::string::npos);
  }
  CHECK_THROWS_AS(run_suite("nosuch", cfg), std::invalid_argument);
}

TEST_CASE("a suite behaves the same alone and inside all") {
  SuiteConfig cfg;
  cfg.seed = 11;
  cfg.trials = 8;
  const SuiteResult alone = run_suite("lemma4", cfg);
  const SuiteResult all = run_suite("all", cfg);
  CHECK(all.report.find(alone.report) != std::string::npos);
}
