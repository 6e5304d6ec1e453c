// ldbraid command-line tool: the braid-word algebra, the irreflexivity
// verifier, and the randomized property suites behind one executable.
//
// Exit codes: 0 ok / 1 negative answer / 2 parse error or unknown suite /
// 3 resource limit / 4 check failure / 5 usage.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldbraid/ldalg.hpp"
#include "ldbraid/suites.hpp"
#include "ldbraid/textio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitCheckFailed = 4;
constexpr int kExitUsage = 5;

struct CliConfig {
  std::uint64_t seed = 1;
  int trials = 500;
  int max_index = 6;
  int max_len = 16;
  std::size_t syllable_cap = ldbraid::kDefaultSyllableCap;
  bool json = false;
};

int cmd_act(const std::string& braid, const std::string& word, std::size_t cap) {
  const auto b = ldbraid::parse_braid_word(braid);
  const auto w = ldbraid::parse_free_word(word);
  std::cout << ldbraid::print_free_word(ldbraid::apply(b, w, cap)) << "\n";
  return kExitOk;
}

int cmd_star(const std::string& a, const std::string& b) {
  std::cout << ldbraid::print_braid_word(
                   ldbraid::star(ldbraid::parse_braid_word(a), ldbraid::parse_braid_word(b)))
            << "\n";
  return kExitOk;
}

int cmd_eq(const std::string& a, const std::string& b, std::size_t cap) {
  const bool equal =
      ldbraid::braid_eq(ldbraid::parse_braid_word(a), ldbraid::parse_braid_word(b), cap);
  std::cout << (equal ? "equal" : "distinct") << "\n";
  return equal ? kExitOk : kExitNegative;
}

int cmd_eval(const std::string& term, const std::string& base) {
  const auto t = ldbraid::parse_ld_term(term);
  const auto b = ldbraid::parse_braid_word(base);
  std::cout << ldbraid::print_braid_word(ldbraid::eval_term(t, b)) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& alpha, const std::vector<std::string>& betas,
               const CliConfig& cfg) {
  if (betas.empty()) {
    std::cerr << "verify requires at least one beta\n";
    return kExitUsage;
  }
  const auto a = ldbraid::parse_braid_word(alpha);
  std::vector<ldbraid::BraidWord> bs;
  bs.reserve(betas.size());
  for (const std::string& b : betas) bs.push_back(ldbraid::parse_braid_word(b));

  const auto cert = ldbraid::verify_irreflexivity(a, bs, cfg.syllable_cap);

  if (cfg.json) {
    nlohmann::json j;
    j["alpha"] = ldbraid::print_braid_word(cert.alpha);
    auto beta_strings = nlohmann::json::array();
    for (const auto& b : cert.betas) beta_strings.push_back(ldbraid::print_braid_word(b));
    j["betas"] = std::move(beta_strings);
    j["result"] = ldbraid::print_braid_word(cert.result);
    j["suffix"] = ldbraid::print_braid_word(cert.suffix);
    j["sigma1_positive"] = cert.sigma1_positive;
    j["image_of_x1"] = ldbraid::print_free_word(cert.image_of_x1);
    j["stripped"] =
        cert.stripped ? nlohmann::json(ldbraid::print_free_word(*cert.stripped)) : nullptr;
    j["distinct_from_alpha"] = cert.distinct_from_alpha;
    j["passed"] = cert.passed();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "alpha:               " << ldbraid::print_braid_word(cert.alpha) << "\n";
    for (const auto& b : cert.betas) {
      std::cout << "beta:                " << ldbraid::print_braid_word(b) << "\n";
    }
    std::cout << "result:              " << ldbraid::print_braid_word(cert.result) << "\n";
    std::cout << "suffix:              " << ldbraid::print_braid_word(cert.suffix) << "\n";
    std::cout << "sigma1_positive:     " << (cert.sigma1_positive ? "true" : "false") << "\n";
    std::cout << "image_of_x1:         " << ldbraid::print_free_word(cert.image_of_x1) << "\n";
    std::cout << "stripped:            "
              << (cert.stripped ? ldbraid::print_free_word(*cert.stripped) : "absent") << "\n";
    std::cout << "distinct_from_alpha: " << (cert.distinct_from_alpha ? "true" : "false") << "\n";
    std::cout << (cert.passed() ? "PASS" : "FAIL") << "\n";
  }
  return cert.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_prop(const std::string& suite, const CliConfig& cfg) {
  ldbraid::SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.trials = cfg.trials;
  sc.max_index = cfg.max_index;
  sc.max_len = cfg.max_len;
  sc.syllable_cap = cfg.syllable_cap;

  ldbraid::SuiteResult res;
  try {
    res = ldbraid::run_suite(suite, sc);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }
  std::cout << res.report;
  if (res.failures > 0) return kExitCheckFailed;
  if (res.overflows > 0) return kExitResource;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid-group automorphisms of the free group, the left-self-distributive "
               "star operation, and an executable irreflexivity verifier"};
  app.require_subcommand(1);

  CliConfig cfg;

  std::string act_braid, act_word;
  auto* act = app.add_subcommand("act", "apply a braid word to a free word");
  act->add_option("braid", act_braid, "braid word, e.g. \"s1 s2^-1\"")->required();
  act->add_option("word", act_word, "free word, e.g. \"x1 x2^3\"")->required();
  act->add_option("--cap", cfg.syllable_cap, "syllable cap for the action");

  std::string star_a, star_b;
  auto* star_cmd = app.add_subcommand("star", "Dehornoy's a * b on braid words");
  star_cmd->add_option("a", star_a)->required();
  star_cmd->add_option("b", star_b)->required();

  std::string eq_a, eq_b;
  auto* eq = app.add_subcommand("eq", "equality in B (as automorphisms)");
  eq->add_option("a", eq_a)->required();
  eq->add_option("b", eq_b)->required();
  eq->add_option("--cap", cfg.syllable_cap, "syllable cap for the action");

  std::string eval_term, eval_base = "1";
  auto* eval = app.add_subcommand("eval", "evaluate an LD term to a braid word");
  eval->add_option("term", eval_term, "LD term, e.g. \"x*(x*x)\"")->required();
  eval->add_option("--base", eval_base, "braid word interpreting the generator");

  std::string verify_alpha;
  std::vector<std::string> verify_betas;
  auto* verify = app.add_subcommand("verify", "check one irreflexivity instance");
  verify->add_option("alpha", verify_alpha)->required();
  verify->add_option("betas", verify_betas, "one or more braid words");
  verify->add_flag("--json", cfg.json, "emit the certificate as one JSON object");
  verify->add_option("--cap", cfg.syllable_cap, "syllable cap for the action");

  std::string prop_suite;
  auto* prop = app.add_subcommand("prop", "run a randomized property suite");
  prop->add_option("suite", prop_suite, "lemma3|lemma4|lemma5|lemma6|theorem|relations|oracle|all")
      ->required();
  prop->add_option("--seed", cfg.seed, "PRNG seed");
  prop->add_option("--trials", cfg.trials, "trials per suite");
  prop->add_option("--max-index", cfg.max_index, "largest generator index sampled");
  prop->add_option("--max-len", cfg.max_len, "largest word length sampled");
  prop->add_option("--cap", cfg.syllable_cap, "syllable cap for the action");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (cfg.trials < 1 || cfg.max_index < 1 || cfg.max_len < 1 || cfg.syllable_cap < 1) {
    std::cerr << "bounds must be >= 1\n";
    return kExitUsage;
  }
  if (prop->parsed() && cfg.syllable_cap < static_cast<std::size_t>(cfg.max_len)) {
    std::cerr << "--cap must be >= --max-len\n";
    return kExitUsage;
  }

  try {
    if (act->parsed()) return cmd_act(act_braid, act_word, cfg.syllable_cap);
    if (star_cmd->parsed()) return cmd_star(star_a, star_b);
    if (eq->parsed()) return cmd_eq(eq_a, eq_b, cfg.syllable_cap);
    if (eval->parsed()) return cmd_eval(eval_term, eval_base);
    if (verify->parsed()) return cmd_verify(verify_alpha, verify_betas, cfg);
    if (prop->parsed()) return cmd_prop(prop_suite, cfg);
  } catch (const ldbraid::parse_error& e) {
    std::cerr << "parse error at bytes [" << e.span.start << "," << e.span.end
              << "): " << e.what() << "\n";
    return kExitParse;
  } catch (const ldbraid::capacity_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;  // unreachable with require_subcommand(1)
}
