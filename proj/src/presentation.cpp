#include "hamel/presentation.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "hamel/text.hpp"

namespace hamel {

using text::Cursor;
using text::Tok;

bool is_reserved_name(std::string_view name) {
  return name == "inf" || name == "v" || name == "E" || name == "A" || name == "true" || name == "false";
}

namespace {

class VectorParser {
 public:
  VectorParser(const Model& m, Cursor& c) : m_(m), c_(c) {}

  Vector sum() {
    Vector acc = signed_term();
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
  Vector signed_term() {
    if (c_.accept(Tok::Minus)) return -signed_term();
    if (c_.at(Tok::Int)) {
      const text::Token first = c_.peek();
      Scalar k = c_.rational();
      if (c_.accept(Tok::Star)) return k * factor();
      if (!k.is_zero()) c_.fail_at(first, "a constant term must be 0");
      return m_.zero();
    }
    return factor();
  }

  Vector factor() {
    if (c_.accept(Tok::LParen)) {
      Vector v = sum();
      c_.expect(Tok::RParen, "')'");
      return v;
    }
    const text::Token name = c_.peek();
    if (name.kind != Tok::Ident) c_.fail("expected generator name, found " + std::string(text::describe(name.kind)));
    c_.next();
    auto g = m_.find(name.text);
    if (!g) c_.fail_at(name, "unknown generator '" + name.text + "'");
    return m_.gen(*g);
  }

  const Model& m_;
  Cursor& c_;
};

Vector parse_vector_at(const Model& m, std::string_view text, std::size_t column) {
  Cursor c(text::lex(text, column));
  if (c.at(Tok::End)) c.fail("expected expression");
  Vector v = VectorParser(m, c).sum();
  if (!c.at(Tok::End)) c.fail(std::string("unexpected ") + text::describe(c.peek().kind));
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Vector parse_vector(const Model& m, std::string_view text) { return parse_vector_at(m, text, 1); }

Point parse_point(const Model& m, std::string_view text) {
  if (trim(text) == "inf") return Point::infinity();
  return Point(parse_vector(m, text));
}

Bound parse_bound(const Model& m, std::string_view text) {
  std::string_view t = trim(text);
  if (t == "-inf") return Bound::minus_infinity();
  if (t == "+inf" || t == "inf") return Bound::plus_infinity();
  return Bound(parse_vector(m, text));
}

std::string format_vector(const Model& m, const Vector& v) {
  const Vector w = m.adopt(v);
  if (w.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Entry& e : w.entries()) {
    Scalar c = e.coeff;
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
    out += m.name(e.gen);
    first = false;
  }
  return out;
}

std::string format_point(const Model& m, const Point& p) {
  return p.is_infinite() ? "inf" : format_vector(m, p.vector());
}

std::string format_cut(const Model& m, const Cut& c) {
  switch (c.shape) {
    case Cut::Shape::Everything: return "(all)";
    case Cut::Shape::Nothing: return "(none)";
    case Cut::Shape::BelowStrict: return "(< " + format_vector(m, c.bound) + ")";
    case Cut::Shape::BelowWeak: return "(<= " + format_vector(m, c.bound) + ")";
  }
  return "";
}

// --- model files --------------------------------------------------------------

namespace {

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t lineno) : s_(line), line_(lineno) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, at + 1, line_); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, i_); }

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= s_.size();
  }
  std::size_t pos() const { return i_; }

  std::string word() {
    skip_space();
    const std::size_t start = i_;
    if (i_ >= s_.size() || !text::is_ident_start(s_[i_])) fail("expected a name");
    while (i_ < s_.size() && text::is_ident_char(s_[i_])) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  void expect(char c) {
    skip_space();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  /// `key=` where key is an identifier; returns the key.
  std::string key() {
    std::string k = word();
    if (i_ >= s_.size() || s_[i_] != '=') fail("expected '=' after '" + k + "'");
    ++i_;
    return k;
  }

  /// Text of a parenthesized group starting at the current position, without
  /// the outer parentheses. Sets `inner_start` to its offset.
  std::string_view group(std::size_t& inner_start) {
    if (i_ >= s_.size() || s_[i_] != '(') fail("expected '('");
    int depth = 0;
    const std::size_t open = i_;
    for (; i_ < s_.size(); ++i_) {
      if (s_[i_] == '(') ++depth;
      if (s_[i_] == ')' && --depth == 0) {
        ++i_;
        inner_start = open + 1;
        return s_.substr(open + 1, i_ - open - 2);
      }
    }
    fail("unbalanced '('", open);
  }

  /// Unparenthesized value: runs until the next ` key=` or end of line.
  std::string_view value(std::size_t& start) {
    start = i_;
    std::size_t j = i_;
    while (j < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[j]))) {
        std::size_t k = j;
        while (k < s_.size() && std::isspace(static_cast<unsigned char>(s_[k]))) ++k;
        std::size_t e = k;
        while (e < s_.size() && text::is_ident_char(s_[e])) ++e;
        if (e > k && e < s_.size() && s_[e] == '=' && text::is_ident_start(s_[k])) break;
      }
      ++j;
    }
    i_ = j;
    std::string_view v = trim(s_.substr(start, j - start));
    if (v.empty()) fail("missing value");
    return v;
  }

  std::size_t line() const { return line_; }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t i_ = 0;
};

Vector vector_at(const Model& m, const LineReader& r, std::string_view text, std::size_t offset) {
  try {
    return parse_vector_at(m, text, offset + 1);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.position(), r.line());
  }
}

Cut read_cut(const Model& m, LineReader& r, int order) {
  std::size_t start = 0;
  std::string_view body = r.group(start);
  std::size_t i = 0;
  while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
  std::size_t j = i;
  while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j])) &&
         (body[j] == '<' || body[j] == '=' || std::isalpha(static_cast<unsigned char>(body[j]))))
    ++j;
  std::string_view op = body.substr(i, j - i);
  std::string_view rest = body.substr(j);
  const bool has_rest = !trim(rest).empty();
  if (op == "all" || op == "none") {
    if (has_rest) r.fail("'" + std::string(op) + "' takes no bound", start + j);
    return op == "all" ? Cut::everything(order) : Cut::nothing(order);
  }
  if (op != "<" && op != "<=") r.fail("expected one of '<', '<=', 'all', 'none'", start + i);
  if (!has_rest) r.fail("missing cut bound", start + j);
  Vector bound = vector_at(m, r, rest, start + j);
  return op == "<" ? Cut::below_strict(order, bound) : Cut::below_weak(order, bound);
}

Model read_header(std::string_view line, std::size_t lineno) {
  LineReader r(line, lineno);
  if (r.word() != "model") r.fail("expected 'model' header", 0);
  const std::size_t at = r.pos();
  std::string mode = r.word();
  if (mode == "hamel") {
    if (!r.done()) r.fail("unexpected text after header");
    return Model::hamel();
  }
  if (mode != "plain") r.fail("expected 'hamel' or 'plain'", at + 1);
  if (r.done()) r.fail("expected orders=<k>");
  if (r.key() != "orders") r.fail("expected orders=<k>");
  std::size_t vstart = 0;
  std::string_view v = r.value(vstart);
  if (v.empty() || v.size() > 3 || v.find_first_not_of("0123456789") != std::string_view::npos)
    r.fail("expected a positive order count", vstart);
  const int k = std::stoi(std::string(v));
  if (k < 1) r.fail("expected a positive order count", vstart);
  if (!r.done()) r.fail("unexpected text after header");
  return Model::plain(k);
}

Model read_gen(const Model& m, std::string_view line, std::size_t lineno) {
  LineReader r(line, lineno);
  r.word();  // "gen"
  const std::size_t name_at = r.pos() + 1;
  std::string name = r.word();
  if (is_reserved_name(name)) r.fail("'" + name + "' is reserved", name_at);
  if (m.find(name)) r.fail("duplicate generator name '" + name + "'", name_at);
  r.expect('=');
  const std::size_t kind_at = r.pos() + 1;
  std::string kind = r.word();

  std::optional<Vector> alpha, pivot;
  std::optional<bool> weak;
  std::vector<std::optional<Cut>> cuts(static_cast<std::size_t>(m.order_count()));
  while (!r.done()) {
    const std::size_t key_at = r.pos();
    std::string key = r.key();
    if (key.rfind("cut", 0) == 0 && key.size() > 3 && key.find_first_not_of("0123456789", 3) == std::string::npos) {
      const int order = std::stoi(key.substr(3));
      if (order >= m.order_count()) r.fail("order " + std::to_string(order) + " out of range", key_at);
      if (cuts[order]) r.fail("duplicate '" + key + "'", key_at);
      cuts[order] = read_cut(m, r, order);
      continue;
    }
    std::size_t vstart = 0;
    std::string_view v = r.value(vstart);
    if (key == "alpha" && !alpha) {
      alpha = vector_at(m, r, v, vstart);
    } else if (key == "pivot" && !pivot) {
      pivot = vector_at(m, r, v, vstart);
    } else if (key == "weak" && !weak) {
      if (v != "true" && v != "false") r.fail("expected true or false", vstart);
      weak = v == "true";
    } else {
      r.fail("unexpected field '" + key + "'", key_at);
    }
  }

  auto need_cut = [&](int order) {
    if (!cuts[order]) r.fail("missing cut" + std::to_string(order), kind_at - 1);
    return *cuts[order];
  };
  auto only = [&](bool ok, const char* what) {
    if (!ok) r.fail(std::string("'") + what + "' not allowed for " + kind + " generators", kind_at - 1);
  };

  try {
    if (kind == "value") {
      if (!m.is_hamel()) r.fail("value generators need a Hamel model", kind_at - 1);
      only(!alpha && !pivot && !weak, "alpha/pivot/weak");
      return adjoin_value(m, need_cut(0), name).model;
    }
    if (kind == "ball") {
      if (!m.is_hamel()) r.fail("ball generators need a Hamel model", kind_at - 1);
      if (!alpha) r.fail("missing alpha", kind_at - 1);
      return adjoin_ball(m, AlphaCut{*alpha, pivot.value_or(m.zero()), weak.value_or(true)}, need_cut(0), name)
          .model;
    }
    if (kind == "free") {
      if (m.is_hamel()) r.fail("free generators need a plain model", kind_at - 1);
      only(!alpha && !pivot && !weak, "alpha/pivot/weak");
      std::vector<Cut> all;
      for (int i = 0; i < m.order_count(); ++i) all.push_back(need_cut(i));
      return adjoin_free(m, std::move(all), name).model;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), kind_at, lineno);
  }
  r.fail("expected 'value', 'ball' or 'free'", kind_at - 1);
}

}  // namespace

Model parse_model(std::string_view text) {
  std::optional<Model> m;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineno;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    if (!m) {
      m = read_header(line, lineno);
      continue;
    }
    LineReader probe(line, lineno);
    if (probe.word() != "gen") probe.fail("expected 'gen'", 0);
    m = read_gen(*m, line, lineno);
  }
  if (!m) throw ParseError("missing 'model' header", 1, lineno == 0 ? 1 : lineno);
  return *m;
}

std::string format_model(const Model& m) {
  std::ostringstream os;
  if (m.is_hamel()) {
    os << "model hamel\n";
  } else {
    os << "model plain orders=" << m.order_count() << "\n";
  }
  for (GenId g = 0; g < m.size(); ++g) {
    const GeneratorRecord& rec = m.record(g);
    os << "gen " << rec.name << " = ";
    if (const auto* f = std::get_if<FreeGen>(&rec.kind)) {
      os << "free";
      for (std::size_t i = 0; i < f->cuts.size(); ++i) os << " cut" << i << "=" << format_cut(m, f->cuts[i]);
    } else if (const auto* v = std::get_if<ValueGen>(&rec.kind)) {
      os << "value cut0=" << format_cut(m, v->cut0);
    } else {
      const auto& b = std::get<BallGen>(rec.kind);
      os << "ball alpha=" << format_vector(m, b.acut.alpha) << " pivot=" << format_vector(m, b.acut.pivot)
         << " weak=" << (b.acut.weak ? "true" : "false") << " cut0=" << format_cut(m, b.cut0);
    }
    os << "\n";
  }
  return os.str();
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

void save_model(const std::filesystem::path& path, const Model& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << format_model(m);
  if (!out) throw Error("cannot write " + path.string());
}

}  // namespace hamel
