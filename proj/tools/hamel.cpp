#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hamel/lab/suites.hpp"
#include "hamel/logic/eval.hpp"
#include "hamel/logic/qe.hpp"
#include "hamel/logic/search.hpp"
#include "hamel/logic/syntax.hpp"
#include "hamel/presentation.hpp"

using namespace hamel;

namespace {

constexpr int kUsage = 2;

/// Error already carrying its source context.
struct CliError {
  std::string message;
};

[[noreturn]] void fail_in(const std::string& where, const ParseError& e) {
  std::string at = where;
  if (e.line()) at += ":" + std::to_string(e.line());
  at += ":" + std::to_string(e.position());
  throw CliError{at + ": " + e.message()};
}

Model load(const std::string& path) {
  try {
    return load_model(path);
  } catch (const ParseError& e) {
    fail_in(path, e);
  }
}

logic::FormulaPtr formula_arg(const std::string& text) {
  try {
    return logic::parse_formula(text);
  } catch (const ParseError& e) {
    fail_in("-e", e);
  }
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

/// "x = h2 + 5*t; y = inf" -> (name, expression) pairs.
std::vector<std::pair<std::string, std::string>> bindings(const std::vector<std::string>& args) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& arg : args)
    for (const auto& piece : split(arg, ';')) {
      if (trim(piece).empty()) continue;
      const auto eq = piece.find('=');
      if (eq == std::string::npos) throw CliError{"--assign: expected 'name = expression' in '" + trim(piece) + "'"};
      out.emplace_back(trim(piece.substr(0, eq)), trim(piece.substr(eq + 1)));
    }
  return out;
}

template <typename F>
auto in_binding(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    fail_in("--assign " + name, e);
  }
}

Bound bound_arg(const Model& m, const std::string& text, const std::string& where) {
  try {
    return parse_bound(m, text);
  } catch (const ParseError& e) {
    fail_in(where, e);
  }
}

Interval interval_arg(const Model& m, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw CliError{"--interval: expected 'lower, upper' in '" + text + "'"};
  return {bound_arg(m, trim(parts[0]), "--interval lower"), bound_arg(m, trim(parts[1]), "--interval upper")};
}

Vector finite_arg(const Bound& b, const char* what) {
  if (!b.is_finite()) throw CliError{std::string("--interval: ") + what + " endpoint must be finite"};
  return b.vector();
}

int cmd_model_check(const std::string& path) {
  Model m = load(path);
  std::cout << "ok: " << (m.is_hamel() ? "hamel" : "plain") << " model, " << m.order_count() << " orders, "
            << m.size() << " generators\n";
  return 0;
}

int cmd_eval(const std::string& path, const std::string& text, const std::vector<std::string>& assign) {
  logic::FormulaPtr f = formula_arg(text);
  const auto binds = bindings(assign);
  if (path.empty()) {
    try {
      logic::check_formula(*f, 2, true);
    } catch (const ParseError& e) {
      fail_in("-e", e);
    }
    logic::LeadAssignment s;
    for (const auto& [name, expr] : binds) s[name] = in_binding(name, [&] { return oracle::parse_lead_point(expr); });
    std::cout << (logic::evaluate_qf(logic::OracleStructure{}, *f, s) ? "true" : "false") << '\n';
    return 0;
  }
  Model m = load(path);
  try {
    logic::check_formula(*f, m.order_count(), m.is_hamel());
  } catch (const ParseError& e) {
    fail_in("-e", e);
  }
  logic::Assignment s;
  for (const auto& [name, expr] : binds) s[name] = in_binding(name, [&] { return parse_point(m, expr); });
  bool value = false;
  if (logic::is_quantifier_free(*f)) {
    value = logic::evaluate_qf(m, *f, s);
  } else {
    value = logic::evaluate_by_search(m, *f, s);
  }
  std::cout << (value ? "true" : "false") << '\n';
  return 0;
}

logic::FormulaPtr reduct_formula(const std::string& text, int k) {
  logic::FormulaPtr f = formula_arg(text);
  try {
    logic::check_formula(*f, k, false);
  } catch (const ParseError& e) {
    fail_in("-e", e);
  }
  return f;
}

int cmd_witness(const std::string& kind, const std::string& path, const std::vector<std::string>& intervals,
                const std::string& out) {
  Model m = load(path);
  std::vector<Interval> ivs;
  for (const auto& text : intervals) ivs.push_back(interval_arg(m, text));
  std::optional<Witness> w;
  if (kind == "density" || kind == "densepair") {
    if (ivs.size() != 1) throw CliError{kind + ": expected one --interval in order 0"};
    const Vector a = finite_arg(ivs[0].lower, "lower");
    const Vector b = finite_arg(ivs[0].upper, "upper");
    w = kind == "density" ? density_witness(m, a, b) : dense_pair_witness(m, a, b);
  } else if (kind == "nonvalue") {
    if (ivs.size() != 2) throw CliError{"nonvalue: expected two --interval options (orders 0 and 1)"};
    w = nonvalue_witness(m, ivs[0], ivs[1]);
  } else {
    if (static_cast<int>(ivs.size()) != m.order_count())
      throw CliError{"independence: expected " + std::to_string(m.order_count()) + " --interval options, one per order"};
    w = m.is_hamel() ? independence_witness(m, ivs[0], ivs[1]) : independence_witness(m, ivs);
  }
  std::cout << format_vector(w->model, w->element) << '\n';
  if (!out.empty()) save_model(out, w->model);
  return 0;
}

int cmd_values(const std::string& path, const std::vector<std::string>& exprs) {
  Model m = load(path);
  std::vector<Vector> vs;
  for (const auto& e : exprs) {
    try {
      vs.push_back(parse_vector(m, e));
    } catch (const ParseError& err) {
      fail_in("-e", err);
    }
  }
  auto join = [&](const std::vector<Vector>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + format_vector(m, x);
    return s;
  };
  std::cout << "basis: " << join(separated_basis(m, vs)) << '\n';
  std::cout << "values: " << join(subspace_values(m, vs)) << '\n';
  return 0;
}

int cmd_lab(const std::string& suite, std::size_t trials, std::uint64_t seed, int max_gens, bool machine) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = lab::suite_names();
  } else {
    lab::default_trials(suite);  // rejects unknown names
    suites = {suite};
  }
  bool ok = true;
  for (const auto& name : suites) {
    lab::SuiteConfig cfg;
    cfg.suite = name;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.max_gens = max_gens;
    lab::Report r = lab::run_suite(cfg);
    std::cout << (machine ? lab::render_machine(r) : lab::render_human(r)) << std::flush;
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision procedures and experiments for Hamel spaces", "hamel"};
  app.require_subcommand(1);

  std::string model_path, formula, out_path, suite;
  std::vector<std::string> assign, intervals, exprs;
  int orders = 2;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  int max_gens = 12;
  bool machine = false;

  auto* model = app.add_subcommand("model", "Model file operations");
  model->require_subcommand(1);
  auto* check = model->add_subcommand("check", "Load a model file and report its shape");
  check->add_option("model", model_path, "Model file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a formula in a model (or the leading-term structure)");
  eval->add_option("model", model_path, "Model file; omit for the leading-term structure");
  eval->add_option("-e", formula, "Formula")->required();
  eval->add_option("--assign", assign, "Bindings 'x = expr; y = expr'");

  auto* qe = app.add_subcommand("qe", "Eliminate quantifiers from an order-reduct formula");
  qe->add_option("-e", formula, "Formula")->required();
  qe->add_option("-k", orders, "Number of orders")->check(CLI::PositiveNumber);

  auto* decide = app.add_subcommand("decide", "Decide an order-reduct sentence");
  decide->add_option("-e", formula, "Sentence")->required();
  decide->add_option("-k", orders, "Number of orders")->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand("witness", "Construct a witness, optionally saving the extended model");
  witness->require_subcommand(1);
  std::string witness_kind;
  for (const char* kind : {"density", "independence", "nonvalue", "densepair"}) {
    auto* w = witness->add_subcommand(kind, std::string(kind) + " witness");
    w->add_option("model", model_path, "Model file")->required();
    w->add_option("--interval", intervals, "'lower, upper' (one per order; -inf/+inf allowed)");
    w->add_option("-o", out_path, "Write the extended model here");
    w->callback([&witness_kind, kind] { witness_kind = kind; });
  }

  auto* values = app.add_subcommand("values", "Separated basis and value set of a span");
  values->add_option("model", model_path, "Model file")->required();
  values->add_option("-e", exprs, "Spanning vector (repeatable)")->required();

  auto* lab_cmd = app.add_subcommand("lab", "Property suites");
  lab_cmd->require_subcommand(1);
  auto* run = lab_cmd->add_subcommand("run", "Run a suite (or 'all')");
  run->add_option("suite", suite, "Suite name or 'all'")->required();
  run->add_option("--trials", trials, "Trials (0: suite default)");
  run->add_option("--seed", seed, "Seed");
  run->add_option("--max-gens", max_gens, "Largest random tower")->check(CLI::PositiveNumber);
  run->add_flag("--machine", machine, "Line-oriented report");

  // CLI11 reports a missing subcommand without naming the stray token.
  CLI::App* group = &app;
  for (int i = 1; i < argc && group && !group->get_subcommands({}).empty(); ++i) {
    if (argv[i][0] == '-') break;
    try {
      group = group->get_subcommand(argv[i]);
    } catch (const CLI::OptionNotFound&) {
      std::cerr << "hamel: unknown subcommand '" << argv[i] << "'\n";
      return kUsage;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "hamel: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_model_check(model_path);
    if (eval->parsed()) return cmd_eval(model_path, formula, assign);
    if (qe->parsed()) {
      std::cout << logic::print_formula(*logic::qe(*reduct_formula(formula, orders), orders)) << '\n';
      return 0;
    }
    if (decide->parsed()) {
      std::cout << (logic::decide_sentence(*reduct_formula(formula, orders), orders) ? "true" : "false") << '\n';
      return 0;
    }
    if (witness->parsed()) return cmd_witness(witness_kind, model_path, intervals, out_path);
    if (values->parsed()) return cmd_values(model_path, exprs);
    if (run->parsed()) return cmd_lab(suite, trials, seed, max_gens, machine);
  } catch (const CliError& e) {
    std::cerr << "hamel: " << e.message << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "hamel: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "hamel: " << (model_path.empty() ? "" : model_path + ": ") << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "hamel: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
