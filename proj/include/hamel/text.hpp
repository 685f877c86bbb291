#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hamel/scalar.hpp"

namespace hamel::text {

enum class Tok {
  End,
  Ident,
  Int,
  Plus,
  Minus,
  Star,
  Slash,
  LParen,
  RParen,
  Comma,
  Dot,
  Eq,
  Less,    // `<` with optional order suffix
  LessEq,  // `<=` with optional order suffix
  Amp,
  Bar,
  Arrow,
  Bang,
};

const char* describe(Tok t);

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;  // 1-based column
  int order = -1;       // order suffix of Less/LessEq, -1 when absent
};

/// Splits `s` into tokens. Columns are reported relative to `first_column`.
std::vector<Token> lex(std::string_view s, std::size_t first_column = 1);

bool is_ident_start(char c);
bool is_ident_char(char c);

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const;
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(std::string_view name) const { return at(Tok::Ident) && peek().text == name; }
  Token next();
  std::size_t mark() const { return i_; }
  void reset(std::size_t m) { i_ = m; }
  bool accept(Tok k);
  Token expect(Tok k, std::string_view what);
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& t, const std::string& message) const;

  /// rat := int ['/' posint]; the sign is handled by the caller.
  Scalar rational();

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace hamel::text
