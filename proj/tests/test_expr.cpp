#include <doctest.h>

#include "weylcomb/expr.hpp"

using namespace weylcomb;

TEST_CASE("precedence and juxtaposition") {
  CHECK(parse_expression("y*x - 2*x*y", "xy").to_string() == "((y * x) - ((2 * x) * y))");
  CHECK(parse_expression("y^2*x^2", "xy").to_string() == "((y)^2 * (x)^2)");
  CHECK(parse_expression("-x^2 + y x", "xy").to_string() == "((-(x)^2) + (y * x))");
  CHECK(parse_expression("3/4 x", "x").to_string() == "(3/4 * x)");
  CHECK(parse_expression("2(x+1)^3", "x").to_string() == "(2 * ((x + 1))^3)");
  CHECK(parse_expression("hbar x", "xy", {"hbar"}).to_string() == "(hbar * x)");
}

TEST_CASE("syntax errors carry offsets") {
  auto offset_of = [](const std::string& text) -> long {
    try {
      parse_expression(text, "xy");
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("y*(x") == 3);
  CHECK(offset_of("x + z") == 4);
  CHECK(offset_of("x ^ y") == 4);
  CHECK(offset_of("x $ y") == 2);
  CHECK(offset_of("(x))") == 3);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("x y") == -1);
}

TEST_CASE("typed parsers") {
  const Ring F5 = Ring::prime_field(5);
  CHECK(parse_poly("h^2 + 1", 'h', F5) == Poly{F5(1), F5(0), F5(1)});
  CHECK(parse_poly("(x-1)(x+1)", 'x', Ring::rationals()) == Poly{-1, 0, 1});
  CHECK_THROWS_AS(parse_poly("y", 'x', Ring::rationals()), ParseError);
  CHECK(parse_ore("y^2*x^2", OreAlgebraSpec::weyl()).to_string() == "x^2*y^2 + 4*x*y + 2");
  const QghaSpec spec(F5, F5(2), Poly{1, 0, 1}, Poly{0, 1});
  CHECK(parse_qgha("y x - 2 x y", spec).to_string() == "h");
  CHECK(parse_bipoly("hbar*x + y^2").to_string() == "hbar*x + y^2");
}

TEST_CASE("printing then parsing is a fixed point") {
  const auto W = OreAlgebraSpec::weyl();
  for (const char* text : {"y^3 x^2", "(x + y)^3", "x y - 1/2 y x", "3"}) {
    const OreElement e = parse_ore(text, W);
    const std::string once = e.to_string();
    CHECK(parse_ore(once, W).to_string() == once);
  }
  const QghaSpec spec(Ring::rationals(), 2, Poly{1, 0, 1}, Poly{0, 1});
  for (const char* text : {"y^2 x h", "(x + y + h)^2"}) {
    const std::string once = parse_qgha(text, spec).to_string();
    CHECK(parse_qgha(once, spec).to_string() == once);
  }
  const std::string poly = parse_poly("(x - 2)^3", 'x', Ring::rationals()).to_string();
  CHECK(parse_poly(poly, 'x', Ring::rationals()).to_string() == poly);
}
