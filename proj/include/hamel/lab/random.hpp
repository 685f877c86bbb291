#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hamel/logic/syntax.hpp"
#include "hamel/tower.hpp"

namespace hamel::lab {

/// Seeded source of small random choices. Only the raw mt19937_64 stream is
/// used (no std distributions) so runs are identical across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Independent stream for trial `index` of a run seeded with `seed`.
  Rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0);

  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }
  Scalar scalar(long height = 5);
  Scalar nonzero_scalar(long height = 5);
  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 eng_;
};

/// Random element of the span of m's generators with at most `max_support`
/// summands.
Vector random_vector(Rng& r, const Model& m, int max_support = 3, long height = 5);
Point random_point(Rng& r, const Model& m, int max_support = 3);
Cut random_cut(Rng& r, const Model& m, int order);
/// Random element of the closed ball of alpha (all support values >=_0 alpha).
Vector random_ball_element(Rng& r, const Model& m, GenId alpha_gen);

enum class Step { Value, Ball, Any };

/// Hamel tower grown by `steps`; Any picks value or ball at random. A Ball
/// step with no value yet present falls back to a value.
Model random_hamel(Rng& r, std::span<const Step> steps);
Model random_hamel(Rng& r, int size);
Model random_plain(Rng& r, int orders, int size);

/// Fresh Hamel model from a seed. size 0 gives the trivial space.
Model random_model(std::uint64_t seed, int size);
Model random_model(std::uint64_t seed, std::span<const Step> schedule);
Model random_plain_model(std::uint64_t seed, int orders, int size);

struct FormulaShape {
  int orders = 2;
  int max_quantifiers = 3;
  int max_depth = 4;
  std::vector<std::string> vars = {"a", "b", "x", "y"};
  bool allow_inf = true;
};

logic::TermPtr random_term(Rng& r, const FormulaShape& shape);
/// v-free formula with at most shape.max_quantifiers quantifiers.
logic::FormulaPtr random_formula(Rng& r, const FormulaShape& shape);
/// As random_formula, closed by quantifying the remaining free variables.
logic::FormulaPtr random_sentence(Rng& r, const FormulaShape& shape);

}  // namespace hamel::lab
