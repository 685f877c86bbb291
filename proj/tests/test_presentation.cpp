#include <doctest.h>

#include "hamel/presentation.hpp"
#include "support.hpp"

using namespace hamel;
using test::M1;

namespace {

const char* kM1 = R"(# standard example
model hamel
gen h1 = value cut0=(<= 0)
gen h2 = value cut0=(<= h1)
gen t = ball alpha=h1 pivot=0 weak=true cut0=(<= h2)
)";

std::size_t error_line(std::string_view text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("vector expressions") {
  M1 w;
  const Model& m = w.model;
  CHECK(parse_vector(m, "3/2*h1 + -1*t") == Scalar(3, 2) * w.h1 - w.t);
  CHECK(parse_vector(m, "h1 - 3*h2") == w.h1 - Scalar(3) * w.h2);
  CHECK(parse_vector(m, "2*(h1 - h2) + h2") == Scalar(2) * w.h1 - w.h2);
  CHECK(parse_vector(m, "0").is_zero());
  CHECK(parse_vector(m, "-h1") == -w.h1);
  CHECK(parse_vector(m, "h1 - h1").is_zero());
  CHECK(parse_point(m, "inf").is_infinite());
  CHECK(parse_bound(m, "-inf").kind() == Bound::Kind::MinusInfinity);
  CHECK(parse_bound(m, "+inf").kind() == Bound::Kind::PlusInfinity);
  CHECK(format_vector(m, Scalar(3, 2) * w.h1 - w.t) == "3/2*h1 - t");
  CHECK(format_vector(m, -w.h2 + Scalar(5) * w.t) == "-h2 + 5*t");
  CHECK(format_vector(m, m.zero()) == "0");
}

TEST_CASE("vector expression errors carry a column") {
  M1 w;
  auto column = [&](std::string_view s) -> std::size_t {
    try {
      parse_vector(w.model, s);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(column("h1 + zz") == 6);
  CHECK(column("h1 + 3") == 6);
  CHECK(column("h1 +") == 5);
  CHECK(column("h1 $ h2") == 4);
  CHECK(column("1/0*h1") == 3);
  CHECK(column("") == 1);
}

TEST_CASE("model file round trip") {
  Model m = parse_model(kM1);
  M1 w;
  CHECK(m.size() == 3);
  CHECK(valuate(m, Point(parse_vector(m, "h2 + 5*t"))) == Point(m.gen(0)));
  CHECK(sign(m, parse_vector(m, "h1 - t"), 1) > 0);
  const std::string text = format_model(m);
  CHECK(text ==
        "model hamel\n"
        "gen h1 = value cut0=(<= 0)\n"
        "gen h2 = value cut0=(<= h1)\n"
        "gen t = ball alpha=h1 pivot=0 weak=true cut0=(<= h2)\n");
  CHECK(format_model(parse_model(text)) == text);
  CHECK(format_model(w.model) == text);

  Model p = parse_model("model plain orders=3\ngen a = free cut0=(all) cut1=(none) cut2=(all)\n"
                        "gen b = free cut0=(< a) cut1=(<= 2*a) cut2=(none)\n");
  CHECK(p.order_count() == 3);
  CHECK(format_model(parse_model(format_model(p))) == format_model(p));
  CHECK(sign(p, p.gen(1), 1) < 0);
}

TEST_CASE("random towers survive a round trip") {
  test::Rng r(3);
  for (int i = 0; i < 100; ++i) {
    Model m = r.coin() ? test::random_hamel(r, static_cast<int>(r.below(10)))
                       : test::random_plain(r, 1 + static_cast<int>(r.below(3)), static_cast<int>(r.below(8)));
    Model back = parse_model(format_model(m));
    CHECK(format_model(back) == format_model(m));
    for (int s = 0; s < 10; ++s) {
      Vector x = test::random_vector(r, m);
      Vector y = back.vector(x.entries());
      for (int o = 0; o < m.order_count(); ++o) CHECK(sign(m, x, o) == sign(back, y, o));
    }
  }
}

TEST_CASE("model file errors") {
  CHECK(error_line("model hamel\ngen a = value cut0=(<= b)\n") == 2);            // forward reference
  CHECK(error_line("model plain orders=2\ngen a = value cut0=(all)\n") == 2);    // mode violation
  CHECK(error_line("model hamel\ngen a = free cut0=(all) cut1=(all)\n") == 2);   // mode violation
  CHECK(error_line("model hamel\ngen a = value cut0=(all)\ngen a = value cut0=(all)\n") == 3);
  CHECK(error_line("model hamel\n\ngen a = value cut0=(<< 0)\n") == 3);
  CHECK(error_line("model hamel\ngen a = value cut0=(all)\ngen b = ball alpha=a pivot=0 weak=maybe cut0=(all)\n") ==
        3);
  CHECK(error_line("model hamel\ngen a = value cut0=(all)\ngen b = ball alpha=2*a cut0=(all)\n") == 3);
  CHECK(error_line("model plain orders=2\ngen a = free cut0=(all)\n") == 2);
  CHECK(error_line("model plain orders=0\n") == 1);
  CHECK(error_line("gen a = value cut0=(all)\n") == 1);
  CHECK(error_line("") == 1);
  CHECK(error_line("model hamel\ngen inf = value cut0=(all)\n") == 2);
}
