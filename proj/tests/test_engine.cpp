#include <random>

#include "doctest.h"
#include "nzeta/engine.hpp"
#include "oracles.hpp"

using namespace nzeta;
using Z = ZetaFactorization;

namespace {

NewtonDiagram diagram(std::string_view text, std::string_view vars) {
  return NewtonDiagram(parse_polynomial(text, VariableMap::parse(vars)));
}

NewtonPair example1() { return NewtonPair(diagram("x^3 - x*y", "x,y"), diagram("y", "x,y")); }

NewtonPair example2() {
  return NewtonPair(diagram("x*y*z + x^7 + y^6 + z^5", "x,y,z"), diagram("x^4 + y^4 + z^4", "x,y,z"));
}

Z f(std::int64_t m, std::int64_t e = 1) { return Z::cyclotomic_factor(m, e); }

}  // namespace

TEST_CASE("zeta_subset") {
  CoordinateSubset xy({0, 1}, 2);
  CHECK(zeta_subset(example1(), xy, Side::Zero) == f(1));
  CHECK(zeta_subset(example1(), xy, Side::Infinity) == Z::one());
  CHECK(zeta_subset(example1(), CoordinateSubset({0}, 2), Side::Zero) == Z::one());

  CHECK(zeta_subset(example2(), CoordinateSubset({1, 2}, 3), Side::Zero) == f(10) * f(1, 4));
  CHECK(zeta_subset(example2(), CoordinateSubset({1, 2}, 3), Side::Infinity) == Z::one());
}

TEST_CASE("zeta_level") {
  for (auto side : {Side::Zero, Side::Infinity}) CHECK(zeta_level(example1(), 1, side) == Z::one());
  auto p = example2();
  CHECK(zeta_level(p, 1, Side::Zero) == f(3) * f(2) * f(1));
  CHECK(zeta_level(p, 2, Side::Zero) == f(10) * f(15) * f(18) * f(1, 8) * f(2, 4));
  CHECK(zeta_level(p, 3, Side::Zero) == zeta_level(p, 2, Side::Zero));
  CHECK(zeta_level(p, 1, Side::Infinity) == Z::one());
  CHECK(zeta_level(p, 2, Side::Infinity) == Z::one());
  CHECK(zeta_level(p, 3, Side::Infinity) == f(1, 16));
  CHECK_THROWS(zeta_level(p, 0, Side::Zero));
  CHECK_THROWS(zeta_level(p, 4, Side::Zero));
}

TEST_CASE("zeta_newton_pair on the worked examples") {
  auto z1 = zeta_newton_pair(example1());
  CHECK(z1.zeta0 == f(1, -1));
  CHECK(z1.zeta_inf == Z::one());

  auto z2 = zeta_newton_pair(example2());
  CHECK(z2.zeta0 == f(1) * f(2) * f(3));
  CHECK(z2.zeta_inf == f(1, 16));

  NewtonPair trivial(diagram("x", "x,y"), diagram("y", "x,y"));
  CHECK(zeta_newton_pair(trivial) == ZetaPair{});
}

TEST_CASE("trace records every subset and the stated multiplicities") {
  auto t = trace_newton_pair(example2());
  CHECK(t.subsets.size() == 7);
  CHECK(t.result == zeta_newton_pair(example2()));
  const auto& full = t.subsets.back();
  CHECK(full.subset.size() == 3);
  bool saw_inf = false;
  for (const auto& row : full.rows) {
    if (row.covector.a == Point{1, 1, 1}) {
      saw_inf = true;
      CHECK(row.multiplicity == 16);
      CHECK(row.side == Side::Infinity);
    }
  }
  CHECK(saw_inf);
}

TEST_CASE("zeta_power_denominator") {
  auto g = diagram("x0^2 + x1^3", "x0,x1");
  auto z = zeta_power_denominator(g, 1, 0);
  CHECK(z.zeta0 == f(1) * f(3, -1));
  CHECK(z.zeta_inf == Z::one());
  CHECK(z == zeta_newton_pair(power_denominator_pair(g, 1, 0)));

  auto z9 = zeta_power_denominator(g, 9, 0);
  CHECK(z9.zeta_inf.multiplicity(7) == 1);
  CHECK(z9 == zeta_newton_pair(power_denominator_pair(g, 9, 0)));

  auto pure = diagram("x0^4", "x0,x1");
  CHECK(zeta_power_denominator(pure, 4, 0) == ZetaPair{});
  CHECK(zeta_newton_pair(power_denominator_pair(pure, 4, 0)) == ZetaPair{});

  CHECK_THROWS(zeta_power_denominator(g, 0, 0));
  CHECK_THROWS(zeta_power_denominator(g, 1, 2));
}

TEST_CASE("zeta_acampo") {
  CHECK(zeta_acampo({}, Side::Zero) == Z::one());
  std::vector<ResolutionStratum> one{{2, 1, 3}};
  CHECK(zeta_acampo(one, Side::Zero) == f(1, 3));
  CHECK(zeta_acampo(one, Side::Infinity) == Z::one());
  std::vector<ResolutionStratum> two{{1, 4, -2}, {3, 3, 7}};
  CHECK(zeta_acampo(two, Side::Infinity) == f(3, -2));
  CHECK(zeta_acampo(two, Side::Zero) == Z::one());
  std::vector<ResolutionStratum> bad{{-1, 0, 1}};
  CHECK_THROWS(zeta_acampo(bad, Side::Zero));
}

TEST_CASE("zeta_partial_resolution") {
  std::vector<LocalZetaStratum> one{{f(1, 2), Z::one(), -1}};
  CHECK(zeta_partial_resolution(one).zeta0 == f(1, -2));
  std::vector<LocalZetaStratum> trivial{{Z::one(), Z::one(), 5}, {Z::one(), Z::one(), -3}};
  CHECK(zeta_partial_resolution(trivial) == ZetaPair{});
}

TEST_CASE("checked_multiplicity") {
  CHECK(checked_multiplicity(Rational(1, 2), 3) == 1);
  CHECK(checked_multiplicity(Rational(8), 3) == 16);
  CHECK_THROWS_AS(checked_multiplicity(Rational(1, 3), 3), IntegralityError);
  CHECK_THROWS_AS(checked_multiplicity(Rational(-1), 1), IntegralityError);
}

TEST_CASE("route equality, swap symmetry and permutation equivariance on random diagrams") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t dim = 2 + static_cast<std::size_t>(iter % 2);
    auto pts = oracle::random_support(rng, dim, 7, 8);
    NewtonDiagram g(GermSupport(dim, pts));
    const Integer d = deg(rng);
    auto pair = power_denominator_pair(g, d, 0);
    auto direct = zeta_power_denominator(g, d, 0);
    auto general = zeta_newton_pair(pair);
    CHECK(direct == general);
    CHECK(zeta_newton_pair(pair.swapped()) == general.swapped());

    // reverse the coordinates of both supports
    auto reversed = [&](const NewtonDiagram& nd) {
      std::vector<Point> r;
      for (auto p : nd.points()) {
        std::reverse(p.begin(), p.end());
        r.push_back(p);
      }
      return NewtonDiagram(GermSupport(dim, r));
    };
    NewtonPair permuted(reversed(pair.gamma1()), reversed(pair.gamma2()));
    CHECK(zeta_newton_pair(permuted) == general);
    CHECK(zeta_power_denominator(reversed(g), d, dim - 1) == direct);
  }
}
