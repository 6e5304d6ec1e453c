// Acceptance gate: every release-blocking property, one pass/fail line each.
// Optional argv[1] names the CLI binary; when present the report-determinism
// check also runs against the real executable.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "ldbraid/harness.hpp"
#include "ldbraid/ldalg.hpp"
#include "ldbraid/suites.hpp"
#include "ldbraid/textio.hpp"

using namespace ldbraid;

namespace {

constexpr std::uint64_t kSeed = 2026;
constexpr int kAttempts = 64;  // redraw budget per trial when the cap aborts a draw

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

Sampler trial_sampler(std::uint64_t stream, int trial, int attempt, int max_index, int max_len) {
  SampleConfig cfg;
  cfg.seed = derive_subseed(kSeed, stream, static_cast<std::uint64_t>(trial) * kAttempts +
                                               static_cast<std::uint64_t>(attempt));
  cfg.max_index = max_index;
  cfg.max_len = max_len;
  return Sampler(cfg);
}

// Runs one randomized trial, redrawing on a syllable-cap abort. Returns false
// only on a genuine property failure; trials whose every attempt aborts are
// reported through `redraws`/`exhausted`.
bool run_trials(std::uint64_t stream, int trials, int max_index, int max_len,
                const std::function<bool(Sampler&)>& trial, int& redraws, int& exhausted) {
  for (int t = 0; t < trials; ++t) {
    bool settled = false;
    for (int attempt = 0; attempt < kAttempts && !settled; ++attempt) {
      Sampler s = trial_sampler(stream, t, attempt, max_index, max_len);
      try {
        if (!trial(s)) return false;
        settled = true;
      } catch (const capacity_error&) {
        ++redraws;
        if (attempt + 1 == kAttempts) ++exhausted;
      }
    }
  }
  return true;
}

bool criterion_powers(std::string&) {
  for (int i = 1; i <= 6; ++i) {
    for (int k = -5; k <= 5; ++k) {
      if (k == 0) continue;
      const BraidWord si{{{i, +1}}};
      const FreeWord expect = mul(FreeWord::generator(i),
                                  mul(FreeWord::generator(i + 1, k), inv(FreeWord::generator(i))));
      if (apply(si, FreeWord::generator(i, k)) != expect) return false;
      if (apply(si, FreeWord::generator(i + 1, k)) != FreeWord::generator(i, k)) return false;
    }
  }
  return true;
}

bool criterion_relations(std::string&) {
  for (int i = 1; i <= 6; ++i) {
    const BraidWord lhs{{{i, +1}, {i + 1, +1}, {i, +1}}};
    const BraidWord rhs{{{i + 1, +1}, {i, +1}, {i + 1, +1}}};
    if (!braid_eq(lhs, rhs)) return false;
  }
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      if (i - j > 1 || j - i > 1) {
        if (!braid_eq(BraidWord{{{i, +1}, {j, +1}}}, BraidWord{{{j, +1}, {i, +1}}})) return false;
      }
    }
  }
  return true;
}

bool criterion_round_trip(std::string& note) {
  int redraws = 0, exhausted = 0;
  const bool ok = run_trials(103, 1000, 6, 16, [](Sampler& s) {
    const BraidWord b = s.braid_word();
    const FreeWord w = s.free_word();
    return apply(concat(b, inv_word(b)), w) == w;
  }, redraws, exhausted);
  if (redraws > 0) note = "redraws=" + std::to_string(redraws);
  return ok && exhausted == 0;
}

bool criterion_w_closure(std::string& note) {
  int redraws = 0, exhausted = 0;
  const bool ok = run_trials(104, 1000, 6, 16, [](Sampler& s) {
    const int i = static_cast<int>(s.rng().range(2, 6));
    const FreeWord w = s.w_word();
    return in_W(letter_action({i, +1}, w)) && in_W(letter_action({i, -1}, w));
  }, redraws, exhausted);
  if (redraws > 0) note = "redraws=" + std::to_string(redraws);
  return ok && exhausted == 0;
}

bool criterion_conjugate_closure(std::string& note) {
  int redraws = 0, exhausted = 0;
  const FreeWord x1 = FreeWord::generator(1);
  const bool ok = run_trials(105, 1000, 6, 16, [&x1](Sampler& s) {
    const FreeWord w = s.w_word();
    const FreeWord image = letter_action({1, +1}, mul(x1, mul(w, inv(x1))));
    const auto stripped = strip_x1_conjugate(image);
    return stripped.has_value() && in_W(*stripped);
  }, redraws, exhausted);
  if (redraws > 0) note = "redraws=" + std::to_string(redraws);
  return ok && exhausted == 0;
}

bool criterion_positive_words_move_x1(std::string& note) {
  int redraws = 0, exhausted = 0;
  const FreeWord x1 = FreeWord::generator(1);
  const bool ok = run_trials(106, 500, 6, 24, [&x1](Sampler& s) {
    const BraidWord b = s.sigma1_positive_word();
    const FreeWord image = apply(b, x1, 1'000'000);
    return strip_x1_conjugate(image).has_value() && image != x1;
  }, redraws, exhausted);
  if (redraws > 0) note = "redraws=" + std::to_string(redraws);
  return ok && exhausted == 0;
}

bool criterion_distributivity(std::string& note) {
  int redraws = 0, exhausted = 0;
  const bool ok = run_trials(107, 500, 4, 6, [](Sampler& s) {
    return check_distributivity(s.braid_word(), s.braid_word(), s.braid_word());
  }, redraws, exhausted);
  if (redraws > 0) note = "redraws=" + std::to_string(redraws);
  return ok && exhausted == 0;
}

bool criterion_irreflexivity(std::string& note) {
  int redraws = 0, exhausted = 0;
  const bool ok = run_trials(108, 500, 6, 6, [](Sampler& s) {
    const BraidWord alpha = s.braid_word();
    const int k = static_cast<int>(s.rng().range(1, 4));
    SampleConfig beta_cfg = s.config();
    beta_cfg.seed = s.rng().next();
    beta_cfg.max_len = 4;
    Sampler betas_from(beta_cfg);
    std::vector<BraidWord> betas;
    for (int i = 0; i < k; ++i) betas.push_back(betas_from.braid_word());
    const IrreflexivityCertificate cert = verify_irreflexivity(alpha, betas);
    return cert.passed() && is_sigma1_positive(cert.suffix) && cert.distinct_from_alpha;
  }, redraws, exhausted);
  if (redraws > 0) note = "redraws=" + std::to_string(redraws);
  return ok && exhausted == 0;
}

bool criterion_freeness_oracle(std::string& note) {
  std::vector<LdTerm> terms;
  for (int n = 1; n <= 4; ++n) {
    for (const LdTerm& t : enumerate_ld_terms(n)) terms.push_back(t);
  }
  if (terms.size() != 9) return false;
  int unordered_pairs = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i; j < terms.size(); ++j) {
      const bool braid_equal = braid_eq(eval_term(terms[i], {}), eval_term(terms[j], {}));
      const LdEquiv verdict = ld_equiv_oracle(terms[i], terms[j]);
      if (verdict == LdEquiv::unknown) return false;
      if ((verdict == LdEquiv::equivalent) != braid_equal) return false;
      if (i != j) ++unordered_pairs;
    }
  }
  note = std::to_string(unordered_pairs) + " unordered pairs";
  return unordered_pairs == 36;
}

bool criterion_engine_agreement(std::string&) {
  int redraws = 0, exhausted = 0;
  return run_trials(110, 1000, 6, 16, [](Sampler& s) {
    const BraidLetter l{static_cast<int>(s.rng().range(1, 6)), s.rng().coin() ? +1 : -1};
    const FreeWord w = s.free_word();
    return collect_letters(naive_letter_action(l, expand_letters(w))) == letter_action(l, w);
  }, redraws, exhausted) && exhausted == 0;
}

bool criterion_textio_round_trip(std::string&) {
  int redraws = 0, exhausted = 0;
  return run_trials(111, 1000, 6, 16, [](Sampler& s) {
    const FreeWord w = s.free_word();
    const BraidWord b = s.braid_word();
    const LdTerm t = s.ld_term();
    return parse_free_word(print_free_word(w)) == w &&
           parse_braid_word(print_braid_word(b)) == b && parse_ld_term(print_ld_term(t)) == t;
  }, redraws, exhausted) && exhausted == 0;
}

std::string read_command(const std::string& cmd, int& code) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    code = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

bool criterion_determinism(const char* cli_path, std::string& note) {
  SuiteConfig cfg;  // the defaults the CLI ships with
  const SuiteResult first = run_suite("all", cfg);
  const SuiteResult second = run_suite("all", cfg);
  if (first.report != second.report) return false;
  if (first.failures != 0) return false;
  note = "in-process";
  if (cli_path != nullptr) {
    const std::string cmd = std::string(cli_path) + " prop all 2>/dev/null";
    int code_a = 0, code_b = 0;
    const std::string out_a = read_command(cmd, code_a);
    const std::string out_b = read_command(cmd, code_b);
    if (code_a != 0 || code_b != 0 || out_a.empty() || out_a != out_b) return false;
    note = "in-process + binary";
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli_path = argc > 1 ? argv[1] : nullptr;

  const std::vector<Criterion> criteria = {
      {1, "generator action on powers, both clauses, i<=6 |k|<=5", 1.0, criterion_powers},
      {2, "defining braid relations under braid_eq", 1.0, criterion_relations},
      {3, "1000x word followed by inverse acts trivially", 5.0, criterion_round_trip},
      {4, "1000x W closed under sigma_i^{+-1}, i>=2", 5.0, criterion_w_closure},
      {5, "1000x sigma_1 keeps x1 W x1^-1 form", 5.0, criterion_conjugate_closure},
      {6, "500x sigma_1-positive words move x1 into x1 W x1^-1", 10.0,
       criterion_positive_words_move_x1},
      {7, "500x left self-distributivity in B", 30.0, criterion_distributivity},
      {8, "500x irreflexivity certificates pass", 30.0, criterion_irreflexivity},
      {9, "freeness oracle matches braid equality on <=4-leaf pairs", 10.0,
       criterion_freeness_oracle},
      {10, "1000x syllable engine equals naive letter engine", 5.0, criterion_engine_agreement},
      {11, "1000x parse(print(v)) == v for all three grammars", 2.0, criterion_textio_round_trip},
      {12, "prop all reports are byte-identical across runs", 600.0,
       [cli_path](std::string& note) { return criterion_determinism(cli_path, note); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < c.budget_seconds;
    if (!(ok && in_budget)) ++failures;
    std::printf("[%s] %02d %s (%.2fs%s%s)\n", ok && in_budget ? "PASS" : "FAIL", c.id, c.label,
                secs, note.empty() ? "" : ", ", note.c_str());
    std::fflush(stdout);
  }

  if (failures == 0) {
    std::printf("acceptance: all %zu criteria pass\n", criteria.size());
  } else {
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
  }
  return failures;
}
