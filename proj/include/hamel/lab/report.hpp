#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hamel/tower.hpp"

namespace hamel::lab {

struct SuiteConfig {
  std::string suite;
  std::size_t trials = 0;  // 0 selects the suite default
  std::uint64_t seed = 1;
  int max_gens = 12;
  int max_support = 3;
  long scalar_height = 5;
};

struct Failure {
  std::string inputs;  // text syntax, replayable
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  std::size_t trials = 0;
  std::vector<Failure> failures;
  std::size_t retries = 0;
  /// Suite-specific counters, in a fixed order.
  std::vector<std::pair<std::string, std::string>> stats;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  void stat(std::string key, std::string value) { stats.emplace_back(std::move(key), std::move(value)); }
  const std::string* find_stat(std::string_view key) const;
};

/// `suite=<name> trials=<n> failures=<k> elapsed_ms=<t> [retries=.. stats..]`
/// followed by one `fail: ...` line per failure.
std::string render_machine(const Report& r);
std::string render_human(const Report& r);
/// The machine report with the elapsed_ms value replaced by `-`; equal for
/// any two runs of the same configuration.
std::string render_machine_untimed(const Report& r);

/// One-line model rendering used inside failure reports: the model file
/// lines joined by "; ".
std::string inline_model(const Model& m);
Model model_from_inline(std::string_view text);

}  // namespace hamel::lab
