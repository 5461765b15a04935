#include <random>

#include "doctest.h"
#include "nzeta/support.hpp"

using namespace nzeta;

namespace {

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (auto x : xs) p.emplace_back(x);
  return p;
}

std::vector<Point> points_of(std::string_view text, std::string_view vars) {
  return parse_polynomial(text, VariableMap::parse(vars)).points();
}

}  // namespace

TEST_CASE("parse_polynomial on worked examples") {
  CHECK(points_of("x^3 - x*y", "x,y") == std::vector<Point>{pt({1, 1}), pt({3, 0})});
  CHECK(points_of("y", "x,y") == std::vector<Point>{pt({0, 1})});
  CHECK(points_of("x*y*z + x^7 + y^6 + z^5", "x,y,z") ==
        std::vector<Point>{pt({0, 0, 5}), pt({0, 6, 0}), pt({1, 1, 1}), pt({7, 0, 0})});
}

TEST_CASE("parse_polynomial grammar details") {
  CHECK(points_of("2*x + 3*y", "x,y") == points_of("x - 5*y", "x,y"));
  CHECK(points_of("  y*x   +x^2 ", "x,y") == points_of("x^2+x*y", "x,y"));
  CHECK(points_of("x*x*y^0", "x,y") == std::vector<Point>{pt({2, 0})});
  CHECK(points_of("-x + 2*x + y", "x,y") == std::vector<Point>{pt({0, 1}), pt({1, 0})});
  CHECK(points_of("x - -y", "x,y") == std::vector<Point>{pt({0, 1}), pt({1, 0})});
  CHECK(points_of("x_1^10*x2", "x_1,x2") == std::vector<Point>{pt({10, 1})});
  // arbitrary-precision coefficients cancel exactly
  CHECK(points_of("123456789012345678901234567890*x - 123456789012345678901234567890*x + y", "x,y") ==
        std::vector<Point>{pt({0, 1})});
}

TEST_CASE("parse_polynomial errors") {
  auto vars = VariableMap::parse("x,y");
  CHECK_THROWS_AS(parse_polynomial("x*y - x*y", vars), SupportError);
  CHECK_THROWS_AS(parse_polynomial("1 + x", vars), SupportError);
  CHECK_THROWS_AS(parse_polynomial("x^0 + y", vars), SupportError);
  CHECK_THROWS_AS(parse_polynomial("x + z", vars), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^-1", vars), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^1.5", vars), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", vars), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2x", vars), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x*2", vars), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", vars), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x y", vars), ParseError);

  try {
    parse_polynomial("x + y + w", vars);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("VariableMap validation") {
  CHECK(VariableMap::parse("x, y ,z").names() == std::vector<std::string>{"x", "y", "z"});
  CHECK_THROWS(VariableMap::parse("x,x"));
  CHECK_THROWS(VariableMap::parse("x,1y"));
  CHECK_THROWS(VariableMap::parse("x,,y"));
  CHECK(collect_variables({"x0^2 + x1^3", "x0"}).names() == std::vector<std::string>{"x0", "x1"});
}

TEST_CASE("render and re-parse reproduces the support") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(0, 6), npts(1, 8);
  auto vars = VariableMap::parse("a,b,c");
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Point> pts;
    for (int i = npts(rng); i > 0; --i) {
      Point p{e(rng), e(rng), e(rng)};
      if (!is_zero(p)) pts.push_back(p);
    }
    if (pts.empty()) continue;
    GermSupport s(3, pts);
    CHECK(parse_polynomial(render_support(s, vars), vars) == s);
  }
}
