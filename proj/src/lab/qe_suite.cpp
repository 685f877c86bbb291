#include <algorithm>

#include "common.hpp"

#include "hamel/logic/eval.hpp"
#include "hamel/logic/qe.hpp"
#include "hamel/logic/search.hpp"

namespace hamel::lab {

using namespace logic;

namespace {

constexpr int kOrders = 2;
constexpr int kModels = 3;
constexpr int kAssignments = 100;
constexpr int kSentenceModels = 5;

int quantifier_depth(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return 1 + quantifier_depth(*f.a);
    case Formula::Kind::Not: return quantifier_depth(*f.a);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: return std::max(quantifier_depth(*f.a), quantifier_depth(*f.b));
    default: return 0;
  }
}

std::string render_assignment(const Model& m, const Assignment& s) {
  std::string out;
  for (const auto& [k, v] : s) out += (out.empty() ? "" : ", ") + k + " = " + format_point(m, v);
  return out;
}

struct Known {
  const char* text;
  bool truth;
};

const Known kCorpus[] = {
    {"0 = 0", true},
    {"E x. (x <0 x)", false},
    {"E x. (0 <0 x & x <0 0)", false},
    {"A y. (!(y = inf) -> E x. (y <0 x & x <1 y))", true},
    {"A y. E x. (y <0 x & x <1 y)", false},
    {"A x. A y. (x <0 y | y <0 x | x = y)", true},
    {"E x. (0 <0 x & x <1 0)", true},
    {"A x. (x <=0 inf & x <=1 inf)", true},
    {"E x. (x <0 0 & 0 <0 2*x)", false},
};

}  // namespace

Report run_qe_suite(const SuiteConfig& cfg) {
  detail::Run run(cfg, "qe");
  FormulaShape shape;
  shape.orders = kOrders;
  int deepest = 0;
  std::size_t evaluations = 0;

  for (std::size_t t = 0; t < run.trials(); ++t) {
    Rng r(cfg.seed, t);
    const FormulaPtr f = random_formula(r, shape);
    const std::string text = print_formula(*f);
    const FormulaPtr g = qe(*f, kOrders);
    deepest = std::max(deepest, quantifier_depth(*f));
    const std::string out = print_formula(*g);
    run.check(is_quantifier_free(*g), text, "quantifier-free output", out);
    const auto fv = free_vars(*f);
    for (const auto& v : free_vars(*g))
      run.check(fv.contains(v), text, "free variables of the input only", out);
    const FormulaPtr gg = qe(*g, kOrders);

    for (int k = 0; k < kModels; ++k) {
      const Model m = random_plain(r, kOrders, static_cast<int>(r.range(0, 4)));
      for (int s = 0; s < kAssignments; ++s) {
        Assignment sigma;
        for (const auto& v : shape.vars) sigma[v] = random_point(r, m, 2);
        ++evaluations;
        const bool expected = evaluate_by_search(m, *f, sigma);
        const bool got = evaluate_qf(m, *g, sigma);
        const std::string in = "model{" + inline_model(m) + "} formula=" + text + " sigma={" +
                               render_assignment(m, sigma) + "}";
        if (!run.check(got == expected, in, expected ? "true" : "false", (got ? "true via " : "false via ") + out))
          break;
        run.check(evaluate_qf(m, *gg, sigma) == got, in, "qe(qe(f)) agrees with qe(f)", print_formula(*gg));
      }
    }
  }

  const std::size_t sentences = std::max<std::size_t>(1, run.trials() / 5);
  for (std::size_t t = 0; t < sentences; ++t) {
    Rng r(cfg.seed, t, 1);
    const FormulaPtr f = random_sentence(r, shape);
    const bool d = decide_sentence(*f, kOrders);
    for (int k = 0; k < kSentenceModels; ++k) {
      const Model m = random_plain(r, kOrders, static_cast<int>(r.range(0, 4)));
      const bool here = evaluate_by_search(m, *f, {});
      run.check(here == d, "model{" + inline_model(m) + "} sentence=" + print_formula(*f), d ? "true" : "false",
                here ? "true" : "false");
    }
  }

  for (const Known& k : kCorpus) {
    const FormulaPtr f = parse_formula(k.text);
    const bool d = decide_sentence(*f, kOrders);
    run.check(d == k.truth, std::string("sentence=") + k.text, k.truth ? "true" : "false", d ? "true" : "false");
    for (int i = 0; i < kSentenceModels; ++i) {
      Rng r(cfg.seed, i, 2);
      const Model m = random_plain(r, kOrders, static_cast<int>(r.range(0, 4)));
      const bool here = evaluate_by_search(m, *f, {});
      run.check(here == k.truth, "model{" + inline_model(m) + "} sentence=" + k.text, k.truth ? "true" : "false",
                here ? "true" : "false");
    }
  }

  run.report().stat("formulas", std::to_string(run.trials()));
  run.report().stat("sentences", std::to_string(sentences));
  run.report().stat("evaluations", std::to_string(evaluations));
  run.report().stat("deepest_prefix", std::to_string(deepest));
  return run.finish();
}

}  // namespace hamel::lab
