#include <map>

#include "common.hpp"

namespace hamel::lab {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms",    "value_independence", "value_growth", "witness",
                                                 "insertion", "trichotomy",         "pairs",        "qe"};
  return names;
}

std::size_t default_trials(std::string_view suite) {
  static const std::map<std::string, std::size_t, std::less<>> defaults = {
      {"axioms", 1000},   {"value_independence", 1000}, {"value_growth", 500}, {"witness", 500},
      {"insertion", 100}, {"trichotomy", 200},          {"pairs", 50},         {"qe", 500}};
  auto it = defaults.find(suite);
  if (it == defaults.end()) throw DomainError("unknown suite '" + std::string(suite) + "'");
  return it->second;
}

Report run_suite(const SuiteConfig& cfg) {
  if (cfg.suite == "axioms") return run_axiom_suite(cfg);
  if (cfg.suite == "value_independence") return run_value_independence(cfg);
  if (cfg.suite == "value_growth") return run_value_growth(cfg);
  if (cfg.suite == "witness") return run_witness_suite(cfg);
  if (cfg.suite == "insertion") return run_insertion_suite(cfg);
  if (cfg.suite == "trichotomy") return run_trichotomy(cfg);
  if (cfg.suite == "pairs") return run_pair_suite(cfg);
  if (cfg.suite == "qe") return run_qe_suite(cfg);
  throw DomainError("unknown suite '" + cfg.suite + "'");
}

namespace detail {

Interval random_interval(Rng& r, const Model& m, int order, int max_support) {
  for (;;) {
    auto endpoint = [&]() -> std::optional<Vector> {
      if (r.below(5) == 0) return std::nullopt;
      return random_vector(r, m, max_support);
    };
    std::optional<Vector> a = endpoint(), b = endpoint();
    if (a && b) {
      Ordering o = compare(m, *a, *b, order);
      if (o == Ordering::Equal) continue;
      if (o == Ordering::Greater) std::swap(a, b);
    }
    return {a ? Bound(*a) : Bound::minus_infinity(), b ? Bound(*b) : Bound::plus_infinity()};
  }
}

std::vector<Vector> increasing_values(Rng& r, Model& m, int count) {
  std::vector<Vector> out;
  for (int i = 0; i < count; ++i) {
    Cut cut = random_cut(r, m, 0);
    if (!out.empty()) {
      Vector w = random_vector(r, m);
      const Ordering o = compare(m, w, out.back(), 0);
      if (o == Ordering::Greater && r.coin()) {
        cut = Cut::below_strict(0, w);
      } else {
        cut = Cut::below_weak(0, o == Ordering::Less ? out.back() : w);
      }
    }
    Adjoined a = adjoin_value(m, cut);
    m = a.model;
    out.push_back(a.element());
  }
  return out;
}

}  // namespace detail
}  // namespace hamel::lab
