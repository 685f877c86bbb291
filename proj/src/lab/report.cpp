#include "hamel/lab/report.hpp"

#include <cmath>
#include <sstream>

#include "hamel/presentation.hpp"

namespace hamel::lab {

const std::string* Report::find_stat(std::string_view key) const {
  for (const auto& [k, v] : stats)
    if (k == key) return &v;
  return nullptr;
}

namespace {

std::string render(const Report& r, bool timed) {
  std::ostringstream out;
  out << "suite=" << r.suite << " trials=" << r.trials << " failures=" << r.failures.size() << " elapsed_ms=";
  if (timed) {
    out << static_cast<long long>(std::llround(r.elapsed_ms));
  } else {
    out << '-';
  }
  out << " retries=" << r.retries;
  for (const auto& [k, v] : r.stats) out << ' ' << k << '=' << v;
  out << '\n';
  for (const auto& f : r.failures)
    out << "fail: " << f.inputs << " expected=" << f.expected << " actual=" << f.actual << '\n';
  return out.str();
}

}  // namespace

std::string render_machine(const Report& r) { return render(r, true); }
std::string render_machine_untimed(const Report& r) { return render(r, false); }

std::string render_human(const Report& r) {
  std::ostringstream out;
  out << r.suite << ": " << r.trials << " trials, " << r.failures.size() << " failures, "
      << static_cast<long long>(std::llround(r.elapsed_ms)) << " ms";
  if (r.retries) out << ", " << r.retries << " retries";
  out << '\n';
  for (const auto& [k, v] : r.stats) out << "  " << k << ": " << v << '\n';
  for (const auto& f : r.failures) {
    out << "  FAIL " << f.inputs << '\n';
    out << "    expected: " << f.expected << '\n';
    out << "    actual:   " << f.actual << '\n';
  }
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string inline_model(const Model& m) {
  std::string text = format_model(m);
  while (!text.empty() && text.back() == '\n') text.pop_back();
  std::string out;
  for (char c : text) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  return out;
}

Model model_from_inline(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ';') {
      out += '\n';
      if (i + 1 < text.size() && text[i + 1] == ' ') ++i;
    } else {
      out += text[i];
    }
  }
  return parse_model(out);
}

}  // namespace hamel::lab
