#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamel {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Vectors or points from two different towers were mixed.
class ModelMismatch : public Error {
 public:
  using Error::Error;
};

/// Operation not available in this model mode (plain vs. Hamel).
class ModeError : public Error {
 public:
  using Error::Error;
};

/// Cut or alpha-cut data that is not well formed over the current tower.
class MalformedCut : public Error {
 public:
  using Error::Error;
};

class EmptyInterval : public Error {
 public:
  using Error::Error;
};

/// Precondition of a semantic operation violated (unbound variable,
/// valuation in a plain structure, argument outside a ball, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in any of the text formats. `position` is a 1-based column
/// (or line, for model files where `line` is set).
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position, std::size_t line = 0)
      : Error(format(message, position, line)),
        message_(std::move(message)),
        position_(position),
        line_(line) {}

  const std::string& message() const { return message_; }
  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& m, std::size_t pos, std::size_t line) {
    std::string out;
    if (line != 0) out += "line " + std::to_string(line) + ", ";
    out += "column " + std::to_string(pos) + ": " + m;
    return out;
  }

  std::string message_;
  std::size_t position_;
  std::size_t line_;
};

}  // namespace hamel
