#include "hamel/text.hpp"

#include <cctype>

#include "hamel/error.hpp"

namespace hamel::text {

const char* describe(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Int: return "number";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Eq: return "'='";
    case Tok::Less: return "'<'";
    case Tok::LessEq: return "'<='";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Bang: return "'!'";
  }
  return "?";
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view s, std::size_t first_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return first_column + at; };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    Token t;
    t.pos = col(start);
    if (is_ident_start(c)) {
      while (i < s.size() && is_ident_char(s[i])) ++i;
      t.kind = Tok::Ident;
    } else if (is_digit(c)) {
      while (i < s.size() && is_digit(s[i])) ++i;
      t.kind = Tok::Int;
    } else if (c == '<') {
      ++i;
      t.kind = Tok::Less;
      if (i < s.size() && s[i] == '=') {
        ++i;
        t.kind = Tok::LessEq;
      }
      const std::size_t digits = i;
      while (i < s.size() && is_digit(s[i])) ++i;
      if (i > digits) {
        if (i - digits > 6) throw ParseError("order suffix too large", col(digits));
        t.order = std::stoi(std::string(s.substr(digits, i - digits)));
      }
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      i += 2;
      t.kind = Tok::Arrow;
    } else {
      ++i;
      switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ',': t.kind = Tok::Comma; break;
        case '.': t.kind = Tok::Dot; break;
        case '=': t.kind = Tok::Eq; break;
        case '&': t.kind = Tok::Amp; break;
        case '|': t.kind = Tok::Bar; break;
        case '!': t.kind = Tok::Bang; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", col(start));
      }
    }
    t.text = std::string(s.substr(start, i - start));
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.pos = col(s.size());
  out.push_back(end);
  return out;
}

const Token& Cursor::peek(std::size_t ahead) const {
  const std::size_t j = i_ + ahead;
  return j < toks_.size() ? toks_[j] : toks_.back();
}

Token Cursor::next() {
  Token t = peek();
  if (i_ + 1 < toks_.size()) ++i_;
  return t;
}

bool Cursor::accept(Tok k) {
  if (!at(k)) return false;
  next();
  return true;
}

Token Cursor::expect(Tok k, std::string_view what) {
  if (!at(k)) fail("expected " + std::string(what) + ", found " + describe(peek().kind));
  return next();
}

void Cursor::fail(const std::string& message) const { fail_at(peek(), message); }

void Cursor::fail_at(const Token& t, const std::string& message) const { throw ParseError(message, t.pos); }

Scalar Cursor::rational() {
  Token num = expect(Tok::Int, "number");
  if (!accept(Tok::Slash)) return Scalar::parse(num.text);
  Token den = expect(Tok::Int, "denominator");
  if (den.text.find_first_not_of('0') == std::string::npos) fail_at(den, "zero denominator");
  return Scalar::parse(num.text + "/" + den.text);
}

}  // namespace hamel::text
