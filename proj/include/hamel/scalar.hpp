#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hamel/error.hpp"

namespace hamel {

/// Exact rational number in canonical form (positive denominator, reduced,
/// zero is 0/1). This is the fixed coefficient field of every structure.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses `int` or `int/posint`. Throws ParseError on bad syntax and
  /// DivisionByZero on a zero denominator.
  static Scalar parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  const mpq_class& raw() const { return q_; }
  std::string numerator_string() const { return q_.get_num().get_str(); }
  std::string denominator_string() const { return q_.get_den().get_str(); }

  /// `n` or `n/d`.
  std::string to_string() const { return q_.get_str(); }

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

  std::size_t hash() const { return std::hash<std::string>{}(to_string()); }

 private:
  mpq_class q_{0};
};

}  // namespace hamel
