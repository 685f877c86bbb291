#pragma once

#include <chrono>
#include <initializer_list>
#include <string>
#include <utility>

#include "hamel/lab/random.hpp"
#include "hamel/lab/report.hpp"
#include "hamel/lab/suites.hpp"
#include "hamel/presentation.hpp"

namespace hamel::lab::detail {

class Run {
 public:
  Run(const SuiteConfig& cfg, std::string name)
      : cfg_(cfg), start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(name);
    report_.trials = cfg.trials ? cfg.trials : default_trials(report_.suite);
  }

  std::size_t trials() const { return report_.trials; }
  const SuiteConfig& config() const { return cfg_; }
  Report& report() { return report_; }

  void fail(std::string inputs, std::string expected, std::string actual) {
    report_.failures.push_back({std::move(inputs), std::move(expected), std::move(actual)});
  }
  /// Records a failure unless `ok`.
  bool check(bool ok, const std::string& inputs, std::string expected, std::string actual) {
    if (!ok) fail(inputs, std::move(expected), std::move(actual));
    return ok;
  }

  Report finish() {
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  SuiteConfig cfg_;
  Report report_;
  std::chrono::steady_clock::time_point start_;
};

/// `model{<inline model>} name=<point> ...`
inline std::string render_inputs(const Model& m,
                                 std::initializer_list<std::pair<std::string_view, Point>> points) {
  std::string out = "model{" + inline_model(m) + "}";
  for (const auto& [name, p] : points) {
    out += ' ';
    out += name;
    out += '=';
    out += format_point(m, p);
  }
  return out;
}

inline std::string show(const Model& m, const Point& p) { return format_point(m, p); }

/// Strict membership in an open interval, by direct comparison.
inline bool inside(const Model& m, const Interval& iv, const Vector& x, int order) {
  const bool above = iv.lower.kind() == Bound::Kind::MinusInfinity ||
                     (iv.lower.is_finite() && less(m, m.adopt(iv.lower.vector()), x, order));
  const bool below = iv.upper.kind() == Bound::Kind::PlusInfinity ||
                     (iv.upper.is_finite() && less(m, x, m.adopt(iv.upper.vector()), order));
  return above && below;
}

inline std::string show_bound(const Model& m, const Bound& b) {
  switch (b.kind()) {
    case Bound::Kind::MinusInfinity: return "-inf";
    case Bound::Kind::PlusInfinity: return "+inf";
    default: return format_vector(m, b.vector());
  }
}

inline std::string show_interval(const Model& m, const Interval& iv, int order) {
  return "(" + show_bound(m, iv.lower) + ", " + show_bound(m, iv.upper) + ")_" + std::to_string(order);
}

/// Random nonempty open interval in one order; endpoints may be infinite.
Interval random_interval(Rng& r, const Model& m, int order, int max_support);

/// `count` values strictly increasing in <_0, adjoined to m.
std::vector<Vector> increasing_values(Rng& r, Model& m, int count);

}  // namespace hamel::lab::detail
