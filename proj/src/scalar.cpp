#include "hamel/scalar.hpp"

#include <cctype>

namespace hamel {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(mpq_class(1 / q_));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw ParseError("expected positive integer denominator", slash + 2);
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("expected integer", 1);

  mpq_class q;
  q.get_num().set_str(std::string(num), 10);
  if (den.empty()) {
    q.get_den() = 1;
  } else {
    q.get_den().set_str(std::string(den), 10);
    if (q.get_den() == 0) throw DivisionByZero();
  }
  return Scalar(std::move(q));
}

}  // namespace hamel
