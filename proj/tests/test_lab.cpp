#include <doctest.h>

#include "hamel/lab/random.hpp"
#include "hamel/lab/suites.hpp"
#include "hamel/logic/eval.hpp"
#include "hamel/presentation.hpp"
#include "support.hpp"

using namespace hamel;
using namespace hamel::lab;

TEST_CASE("random models") {
  Model empty = random_model(1, 0);
  CHECK(empty.size() == 0);
  CHECK(empty.is_hamel());
  CHECK(valuate(empty, empty.zero()).is_infinite());

  const Step schedule[] = {Step::Value, Step::Value, Step::Ball};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Model m = random_model(seed, schedule);
    REQUIRE(m.size() == 3);
    CHECK(std::holds_alternative<ValueGen>(m.record(0).kind));
    CHECK(std::holds_alternative<ValueGen>(m.record(1).kind));
    CHECK(std::holds_alternative<BallGen>(m.record(2).kind));
    const Point v = valuate(m, m.gen(2));
    CHECK((v == Point(m.gen(0)) || v == Point(m.gen(1))));
  }

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(format_model(random_model(seed, 8)) == format_model(random_model(seed, 8)));
    CHECK(format_model(random_plain_model(seed, 3, 5)) == format_model(random_plain_model(seed, 3, 5)));
  }
  CHECK(format_model(random_model(1, 8)) != format_model(random_model(2, 8)));
}

TEST_CASE("trial streams") {
  Rng a(7, 3), b(7, 3), c(7, 4), d(7, 3, 1);
  const auto x = a.below(1u << 30);
  CHECK(x == b.below(1u << 30));
  CHECK(x != c.below(1u << 30));
  CHECK(x != d.below(1u << 30));
}

TEST_CASE("inline models replay") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Model m = random_model(seed, 6);
    const std::string line = inline_model(m);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(format_model(model_from_inline(line)) == format_model(m));
  }
}

TEST_CASE("report rendering") {
  Report r;
  r.suite = "axioms";
  r.trials = 10;
  r.elapsed_ms = 12.4;
  r.stat("models", "50");
  CHECK(render_machine(r) == "suite=axioms trials=10 failures=0 elapsed_ms=12 retries=0 models=50\n");
  CHECK(render_machine_untimed(r) == "suite=axioms trials=10 failures=0 elapsed_ms=- retries=0 models=50\n");
  r.failures.push_back({"model{model hamel} x=0", "a", "b"});
  CHECK(render_machine(r) ==
        "suite=axioms trials=10 failures=1 elapsed_ms=12 retries=0 models=50\nfail: model{model hamel} x=0 expected=a actual=b\n");
  CHECK(render_human(r).find("FAIL") != std::string::npos);
  CHECK(*r.find_stat("models") == "50");
  CHECK(r.find_stat("nothing") == nullptr);
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 8);
  for (const auto& name : suite_names()) CHECK(default_trials(name) > 0);
  CHECK_THROWS_AS(default_trials("nope"), DomainError);
  CHECK_THROWS_AS(run_suite({"nope"}), DomainError);
}

TEST_CASE("every suite passes and replays at small scale") {
  for (const auto& name : suite_names()) {
    SuiteConfig cfg;
    cfg.suite = name;
    cfg.trials = name == "axioms" ? 20 : 12;
    cfg.seed = 11;
    Report a = run_suite(cfg);
    Report b = run_suite(cfg);
    INFO(render_machine(a));
    CHECK(a.suite == name);
    CHECK(a.trials == cfg.trials);
    CHECK(a.passed());
    CHECK(render_machine_untimed(a) == render_machine_untimed(b));
  }
}

TEST_CASE("hand instances behind the suites") {
  test::M1 w;
  const Model& m = w.model;
  // value independence
  CHECK(valuate(m, Scalar(2) * w.h1 - Scalar(3) * w.h2) == Point(w.h1));
  CHECK(valuate(m, Scalar(-7) * w.h2) == Point(w.h2));
  // value growth
  std::vector<Vector> g0 = {w.h1};
  CHECK(subspace_values(m, g0).size() == 1);
  std::vector<Vector> grown = {w.h1, w.h2};
  CHECK(subspace_values(m, grown).size() == 2);
  std::vector<Vector> same = {w.h1, w.h2 + Scalar(5) * w.t};
  CHECK(subspace_values(m, same).size() == 1);
  // value gap
  for (const Vector& h : {w.h1, w.h2})
    CHECK_FALSE((less(m, w.h1, h, 1) && less(m, h, Scalar(2) * w.h1, 1)));
  // predicates
  auto holds = [&](const char* f, const Vector& x) {
    return logic::evaluate_qf(m, *logic::parse_formula(f), {{"x", Point(x)}});
  };
  CHECK_FALSE(holds("!(x = inf) & v(x) = x", w.t));
  CHECK(holds("!(x = inf) & v(x) = x", w.h2));
  CHECK(logic::evaluate_qf(m, *logic::parse_formula("0 <0 v(x)"), {{"x", Point::infinity()}}));
}
