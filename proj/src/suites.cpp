#include "ldbraid/suites.hpp"

#include <sstream>
#include <stdexcept>

#include "ldbraid/textio.hpp"

namespace ldbraid {

namespace {

// Stream ids keep a suite's sample stream identical whether it runs alone or
// inside "all".
enum SuiteStream : std::uint64_t {
  kStreamLemma3 = 3,
  kStreamLemma4 = 4,
  kStreamLemma5 = 5,
  kStreamLemma6 = 6,
  kStreamTheorem = 7,
  kStreamRelations = 8,
  kStreamOracle = 9,
};

struct Trial {
  bool failed = false;
  std::string detail;

  static Trial fail(std::string d) { return Trial{true, std::move(d)}; }
  static Trial pass() { return Trial{}; }
};

// A trial that aborts on the syllable cap is redrawn with a fresh sub-seed;
// the summary line reports how many redraws happened. Only a trial whose
// every attempt aborts counts as an overflow.
constexpr int kAttemptsPerTrial = 64;

SampleConfig trial_sample_config(const SuiteConfig& cfg, std::uint64_t stream, int trial,
                                 int attempt) {
  SampleConfig s;
  s.seed = derive_subseed(cfg.seed, stream,
                          static_cast<std::uint64_t>(trial) * kAttemptsPerTrial +
                              static_cast<std::uint64_t>(attempt));
  s.max_index = cfg.max_index;
  s.max_len = cfg.max_len;
  return s;
}

std::string quoted_free(const FreeWord& w) { return "\"" + print_free_word(w) + "\""; }
std::string quoted_braid(const BraidWord& b) { return "\"" + print_braid_word(b) + "\""; }

Trial lemma3_trial(Sampler& s, const SuiteConfig& cfg) {
  const int i = static_cast<int>(s.rng().range(2, std::max(2, cfg.max_index)));
  const FreeWord w = s.w_word();
  const FreeWord up = letter_action(BraidLetter{i, +1}, w, cfg.syllable_cap);
  const FreeWord down = letter_action(BraidLetter{i, -1}, w, cfg.syllable_cap);
  if (!in_W(up)) {
    return Trial::fail("W not preserved: i=" + std::to_string(i) + " w=" + quoted_free(w) +
                       " image=" + quoted_free(up));
  }
  if (!in_W(down)) {
    return Trial::fail("W not preserved by inverse: i=" + std::to_string(i) +
                       " w=" + quoted_free(w) + " image=" + quoted_free(down));
  }
  const FreeWord x1 = FreeWord::generator(1);
  if (letter_action(BraidLetter{i, +1}, x1, cfg.syllable_cap) != x1) {
    return Trial::fail("x1 moved by sigma_" + std::to_string(i));
  }
  const FreeWord g = s.g_minus_word();
  const FreeWord gup = letter_action(BraidLetter{i, +1}, g, cfg.syllable_cap);
  const FreeWord gdown = letter_action(BraidLetter{i, -1}, g, cfg.syllable_cap);
  if (!in_G_minus(gup) || !in_G_minus(gdown)) {
    return Trial::fail("G^- not preserved: i=" + std::to_string(i) + " g=" + quoted_free(g));
  }
  return Trial::pass();
}

Trial lemma4_trial(Sampler& s, const SuiteConfig& cfg) {
  const FreeWord w = s.w_word();
  const FreeWord x1 = FreeWord::generator(1);
  const FreeWord conj = mul(x1, mul(w, inv(x1)));
  const FreeWord image = letter_action(BraidLetter{1, +1}, conj, cfg.syllable_cap);
  const auto stripped = strip_x1_conjugate(image);
  if (!stripped.has_value()) {
    return Trial::fail("image not of the form x1 w x1^-1: w=" + quoted_free(w) +
                       " image=" + quoted_free(image));
  }
  if (!in_W(*stripped)) {
    return Trial::fail("stripped word not in W: w=" + quoted_free(w) +
                       " stripped=" + quoted_free(*stripped));
  }
  return Trial::pass();
}

Trial lemma5_trial(Sampler& s, const SuiteConfig& cfg) {
  const BraidWord b = s.sigma1_positive_word();
  const FreeWord x1 = FreeWord::generator(1);
  const FreeWord image = apply(b, x1, cfg.syllable_cap);
  if (image == x1) {
    return Trial::fail("x1 fixed by sigma_1-positive word b=" + quoted_braid(b));
  }
  if (!strip_x1_conjugate(image).has_value()) {
    return Trial::fail("image of x1 not in x1 W x1^-1: b=" + quoted_braid(b) +
                       " image=" + quoted_free(image));
  }
  return Trial::pass();
}

Trial lemma6_trial(Sampler& s, const SuiteConfig& cfg) {
  const BraidWord a = s.braid_word();
  const BraidWord b = s.braid_word();
  const BraidWord c = s.braid_word();
  if (!check_distributivity(a, b, c, cfg.syllable_cap)) {
    return Trial::fail("distributivity failed: a=" + quoted_braid(a) + " b=" + quoted_braid(b) +
                       " c=" + quoted_braid(c));
  }
  return Trial::pass();
}

Trial theorem_trial(Sampler& s, const SuiteConfig& cfg) {
  const BraidWord alpha = s.braid_word();
  const int k = static_cast<int>(s.rng().range(1, 4));
  // Each beta is folded through up to k stars, doubling the word every time,
  // so betas are sampled a quarter of the configured length to keep image
  // growth inside the cap at the default bounds.
  SampleConfig beta_cfg = s.config();
  beta_cfg.seed = s.rng().next();
  beta_cfg.max_len = std::max(1, cfg.max_len / 4);
  Sampler beta_sampler(beta_cfg);
  std::vector<BraidWord> betas;
  betas.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) betas.push_back(beta_sampler.braid_word());
  const IrreflexivityCertificate cert = verify_irreflexivity(alpha, betas, cfg.syllable_cap);
  if (!cert.passed()) {
    std::string detail = "certificate failed: alpha=" + quoted_braid(cert.alpha) + " betas=[";
    for (std::size_t i = 0; i < cert.betas.size(); ++i) {
      if (i > 0) detail += ", ";
      detail += quoted_braid(cert.betas[i]);
    }
    detail += "] sigma1_positive=" + std::string(cert.sigma1_positive ? "true" : "false");
    detail += " stripped=" + (cert.stripped ? quoted_free(*cert.stripped) : std::string("absent"));
    detail += " distinct_from_alpha=" + std::string(cert.distinct_from_alpha ? "true" : "false");
    return Trial::fail(std::move(detail));
  }
  return Trial::pass();
}

Trial relations_trial(Sampler& s, const SuiteConfig& cfg) {
  BraidWord w = s.braid_word();

  // Inserting a canceling pair must not change the automorphism.
  {
    const std::size_t pos = static_cast<std::size_t>(s.rng().range(0, static_cast<std::int64_t>(w.size())));
    const int i = static_cast<int>(s.rng().range(1, cfg.max_index));
    const int sign = s.rng().coin() ? +1 : -1;
    BraidWord v = w;
    v.letters.insert(v.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                     {BraidLetter{i, sign}, BraidLetter{i, -sign}});
    if (!braid_eq(w, v, cfg.syllable_cap)) {
      return Trial::fail("canceling pair changed the element: w=" + quoted_braid(w) +
                         " v=" + quoted_braid(v));
    }
  }

  // Rewriting by a braid relation at a random applicable position must not
  // change the automorphism.
  struct Rewrite {
    std::size_t pos;
    bool commute;  // else: braid relation on three letters
  };
  std::vector<Rewrite> applicable;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const BraidLetter& a = w.letters[p];
    const BraidLetter& b = w.letters[p + 1];
    const int gap = a.index > b.index ? a.index - b.index : b.index - a.index;
    if (gap > 1) applicable.push_back(Rewrite{p, true});
  }
  for (std::size_t p = 0; p + 2 < w.size(); ++p) {
    const BraidLetter& a = w.letters[p];
    const BraidLetter& b = w.letters[p + 1];
    const BraidLetter& c = w.letters[p + 2];
    const bool same_sign = a.sign == b.sign && b.sign == c.sign;
    if (!same_sign || a.index != c.index) continue;
    if (b.index == a.index + 1 || a.index == b.index + 1) applicable.push_back(Rewrite{p, false});
  }
  if (!applicable.empty()) {
    const Rewrite rw =
        applicable[static_cast<std::size_t>(s.rng().below(applicable.size()))];
    BraidWord v = w;
    if (rw.commute) {
      std::swap(v.letters[rw.pos], v.letters[rw.pos + 1]);
    } else {
      // aba -> bab with |a.index - b.index| = 1 and equal signs
      const BraidLetter a = v.letters[rw.pos];
      const BraidLetter b = v.letters[rw.pos + 1];
      v.letters[rw.pos] = b;
      v.letters[rw.pos + 1] = a;
      v.letters[rw.pos + 2] = b;
    }
    if (!braid_eq(w, v, cfg.syllable_cap)) {
      return Trial::fail("relation rewrite changed the element: w=" + quoted_braid(w) +
                         " v=" + quoted_braid(v));
    }
  }
  return Trial::pass();
}

Trial oracle_trial(Sampler& s, const SuiteConfig& cfg) {
  const BraidLetter l{static_cast<int>(s.rng().range(1, cfg.max_index)), s.rng().coin() ? +1 : -1};
  const FreeWord w = s.free_word();
  const FreeWord syllable_image = letter_action(l, w, cfg.syllable_cap);
  const FreeWord naive_image = collect_letters(naive_letter_action(l, expand_letters(w)));
  if (syllable_image != naive_image) {
    return Trial::fail("engines disagree: letter=s" + std::to_string(l.index) +
                       (l.sign < 0 ? "^-1" : "") + " w=" + quoted_free(w) + " syllable=" +
                       quoted_free(syllable_image) + " naive=" + quoted_free(naive_image));
  }
  return Trial::pass();
}

// Fixed instances of the Artin relations; runs once before the randomized
// relation trials.
int relations_preamble(const SuiteConfig& cfg, std::ostream& out) {
  int failures = 0;
  for (int i = 1; i <= 6; ++i) {
    const BraidWord lhs{{{i, +1}, {i + 1, +1}, {i, +1}}};
    const BraidWord rhs{{{i + 1, +1}, {i, +1}, {i + 1, +1}}};
    if (!braid_eq(lhs, rhs, cfg.syllable_cap)) {
      ++failures;
      out << "FAIL fixed: braid relation i=" << i << "\n";
    }
  }
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      if (i - j > 1 || j - i > 1) {
        const BraidWord lhs{{{i, +1}, {j, +1}}};
        const BraidWord rhs{{{j, +1}, {i, +1}}};
        if (!braid_eq(lhs, rhs, cfg.syllable_cap)) {
          ++failures;
          out << "FAIL fixed: commutation i=" << i << " j=" << j << "\n";
        }
      }
    }
  }
  return failures;
}

using TrialFn = Trial (*)(Sampler&, const SuiteConfig&);

SuiteResult run_one(const std::string& name, std::uint64_t stream, const SuiteConfig& cfg,
                    TrialFn fn) {
  std::ostringstream out;
  out << "=== suite " << name << " ===\n";
  out << "rng=splitmix64 seed=" << cfg.seed << " trials=" << cfg.trials
      << " max-index=" << cfg.max_index << " max-len=" << cfg.max_len
      << " cap=" << cfg.syllable_cap << "\n";

  SuiteResult res;
  res.name = name;
  res.trials = cfg.trials;
  if (stream == kStreamRelations) res.failures += relations_preamble(cfg, out);

  int redraws = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    for (int attempt = 0; attempt < kAttemptsPerTrial; ++attempt) {
      Sampler sampler(trial_sample_config(cfg, stream, t, attempt));
      try {
        const Trial trial = fn(sampler, cfg);
        if (trial.failed) {
          ++res.failures;
          out << "FAIL trial " << t << ": " << trial.detail << "\n";
        } else {
          ++res.passes;
        }
        break;
      } catch (const capacity_error& e) {
        if (attempt + 1 == kAttemptsPerTrial) {
          ++res.overflows;
          out << "OVERFLOW trial " << t << ": " << e.what() << "\n";
        } else {
          ++redraws;
        }
      }
    }
  }

  out << name << ": " << res.passes << "/" << cfg.trials << " ok";
  if (res.failures > 0) out << ", failures=" << res.failures;
  if (res.overflows > 0) out << ", overflows=" << res.overflows;
  if (redraws > 0) out << ", redraws=" << redraws;
  out << "\n";
  res.report = out.str();
  return res;
}

struct SuiteEntry {
  const char* name;
  std::uint64_t stream;
  TrialFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"lemma3", kStreamLemma3, lemma3_trial},
    {"lemma4", kStreamLemma4, lemma4_trial},
    {"lemma5", kStreamLemma5, lemma5_trial},
    {"lemma6", kStreamLemma6, lemma6_trial},
    {"theorem", kStreamTheorem, theorem_trial},
    {"relations", kStreamRelations, relations_trial},
    {"oracle", kStreamOracle, oracle_trial},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const SuiteEntry& e : kSuites) v.emplace_back(e.name);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteConfig& cfg) {
  if (cfg.trials < 1 || cfg.max_index < 1 || cfg.max_len < 1 || cfg.syllable_cap < 1) {
    throw std::invalid_argument("suite bounds must be >= 1");
  }
  for (const SuiteEntry& e : kSuites) {
    if (name == e.name) return run_one(e.name, e.stream, cfg, e.fn);
  }
  if (name == "all") {
    SuiteResult total;
    total.name = "all";
    std::string report;
    for (const SuiteEntry& e : kSuites) {
      SuiteResult r = run_one(e.name, e.stream, cfg, e.fn);
      report += r.report;
      total.trials += r.trials;
      total.passes += r.passes;
      total.failures += r.failures;
      total.overflows += r.overflows;
    }
    report += "all: " + std::to_string(total.passes) + "/" + std::to_string(total.trials) + " ok";
    if (total.failures > 0) report += ", failures=" + std::to_string(total.failures);
    if (total.overflows > 0) report += ", overflows=" + std::to_string(total.overflows);
    report += "\n";
    total.report = std::move(report);
    return total;
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace ldbraid
