#pragma once

#include <map>
#include <string>
#include <string_view>

#include "hamel/scalar.hpp"
#include "hamel/tower.hpp"

namespace hamel::oracle {

/// Leading-term model: combinations of abstract basis elements e_q indexed
/// by rationals. v picks the least index in the support, <_1 is the sign of
/// its coefficient, and values are ordered by index.
class LeadVector {
 public:
  LeadVector() = default;
  static LeadVector basis(const Scalar& index);

  const std::map<Scalar, Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_basis() const { return c_.size() == 1 && c_.begin()->second == Scalar(1); }
  /// Least index in the support (precondition: nonzero).
  const Scalar& lead_index() const { return c_.begin()->first; }
  const Scalar& lead_coeff() const { return c_.begin()->second; }

  friend LeadVector operator+(const LeadVector& a, const LeadVector& b);
  friend LeadVector operator-(const LeadVector& a, const LeadVector& b);
  friend LeadVector operator*(const Scalar& k, const LeadVector& a);
  LeadVector operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const LeadVector&, const LeadVector&) = default;

 private:
  std::map<Scalar, Scalar> c_;
};

/// Element of the oracle space or infinity.
struct LeadPoint {
  bool infinite = false;
  LeadVector v;

  static LeadPoint inf() { return {true, {}}; }
  friend bool operator==(const LeadPoint&, const LeadPoint&) = default;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

LeadPoint lead_valuate(const LeadPoint& x);
inline LeadPoint lead_valuate(const LeadVector& x) { return lead_valuate(LeadPoint{false, x}); }
Sign lead_sign1(const LeadVector& x);
/// Index order on values with infinity on top. Throws DomainError when an
/// argument is not a single basis element or infinity.
Ordering lead_value_compare(const LeadPoint& a, const LeadPoint& b);

/// `2*e1 - 3*e2`, `e(1/2)`, `e(-1)`, `0`.
LeadVector parse_lead(std::string_view text);
/// As parse_lead, also accepting `inf`.
LeadPoint parse_lead_point(std::string_view text);
std::string format_lead(const LeadVector& x);
std::string format_lead(const LeadPoint& x);

}  // namespace hamel::oracle
