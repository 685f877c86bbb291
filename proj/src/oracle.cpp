#include "hamel/oracle.hpp"

#include "hamel/text.hpp"

namespace hamel::oracle {

using text::Cursor;
using text::Tok;

LeadVector LeadVector::basis(const Scalar& index) {
  LeadVector out;
  out.c_.emplace(index, Scalar(1));
  return out;
}

LeadVector operator+(const LeadVector& a, const LeadVector& b) {
  LeadVector out = a;
  for (const auto& [q, c] : b.c_) {
    Scalar& slot = out.c_[q];
    slot += c;
    if (slot.is_zero()) out.c_.erase(q);
  }
  return out;
}

LeadVector operator-(const LeadVector& a, const LeadVector& b) { return a + (-b); }

LeadVector operator*(const Scalar& k, const LeadVector& a) {
  LeadVector out;
  if (k.is_zero()) return out;
  for (const auto& [q, c] : a.c_) out.c_.emplace(q, k * c);
  return out;
}

LeadPoint lead_valuate(const LeadPoint& x) {
  if (x.infinite || x.v.is_zero()) return LeadPoint::inf();
  return {false, LeadVector::basis(x.v.lead_index())};
}

Sign lead_sign1(const LeadVector& x) {
  if (x.is_zero()) return Sign::Zero;
  return x.lead_coeff().sign() > 0 ? Sign::Positive : Sign::Negative;
}

Ordering lead_value_compare(const LeadPoint& a, const LeadPoint& b) {
  for (const LeadPoint* p : {&a, &b})
    if (!p->infinite && !p->v.is_basis()) throw DomainError("value comparison needs a basis element or inf");
  if (a.infinite || b.infinite) return to_ordering((a.infinite ? 1 : 0) - (b.infinite ? 1 : 0));
  const auto c = a.v.lead_index() <=> b.v.lead_index();
  return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
}

namespace {

class LeadParser {
 public:
  explicit LeadParser(Cursor& c) : c_(c) {}

  LeadVector sum() {
    LeadVector acc = signed_term();
    for (;;) {
      if (c_.accept(Tok::Plus)) {
        acc = acc + signed_term();
      } else if (c_.accept(Tok::Minus)) {
        acc = acc - signed_term();
      } else {
        return acc;
      }
    }
  }

 private:
  LeadVector signed_term() {
    if (c_.accept(Tok::Minus)) return -signed_term();
    if (c_.at(Tok::Int)) {
      const text::Token first = c_.peek();
      Scalar k = c_.rational();
      if (c_.accept(Tok::Star)) return k * factor();
      if (!k.is_zero()) c_.fail_at(first, "a constant term must be 0");
      return {};
    }
    return factor();
  }

  LeadVector factor() {
    if (c_.accept(Tok::LParen)) {
      LeadVector v = sum();
      c_.expect(Tok::RParen, "')'");
      return v;
    }
    const text::Token t = c_.expect(Tok::Ident, "basis element");
    if (t.text == "e") {
      c_.expect(Tok::LParen, "'('");
      const bool neg = c_.accept(Tok::Minus);
      Scalar q = c_.rational();
      c_.expect(Tok::RParen, "')'");
      return LeadVector::basis(neg ? -q : q);
    }
    if (t.text.size() < 2 || t.text[0] != 'e' || t.text.find_first_not_of("0123456789", 1) != std::string::npos)
      c_.fail_at(t, "expected basis element e<index>, found '" + t.text + "'");
    return LeadVector::basis(Scalar::parse(t.text.substr(1)));
  }

  Cursor& c_;
};

}  // namespace

LeadVector parse_lead(std::string_view text) {
  Cursor c(text::lex(text));
  if (c.at(Tok::End)) c.fail("expected expression");
  LeadVector v = LeadParser(c).sum();
  if (!c.at(Tok::End)) c.fail(std::string("unexpected ") + text::describe(c.peek().kind));
  return v;
}

LeadPoint parse_lead_point(std::string_view text) {
  Cursor c(text::lex(text));
  if (c.at_ident("inf") && c.peek(1).kind == Tok::End) return LeadPoint::inf();
  return {false, parse_lead(text)};
}

namespace {

std::string basis_name(const Scalar& q) {
  if (q.is_integer() && q.sign() >= 0) return "e" + q.to_string();
  return "e(" + q.to_string() + ")";
}

}  // namespace

std::string format_lead(const LeadVector& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [q, coeff] : x.coeffs()) {
    Scalar c = coeff;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (c != Scalar(1)) out += c.to_string() + "*";
    out += basis_name(q);
    first = false;
  }
  return out;
}

std::string format_lead(const LeadPoint& x) { return x.infinite ? "inf" : format_lead(x.v); }

}  // namespace hamel::oracle
