#include "doctest.h"

#include <stdexcept>

#include "covforge/mpoly.hpp"

using namespace covforge;

TEST_CASE("variable table") {
  CHECK(kNumVars == 41);
  CHECK(var_name(Var::y10) == "y10");
  CHECK(var_from_name("al2") == Var::al2);
  CHECK_FALSE(var_from_name("y4").has_value());
  CHECK(yvar(7) == Var::y7);
  CHECK_THROWS(yvar(5));
}

TEST_CASE("binomial expansion and grlex printing") {
  const Poly x = pvar(Var::x1), y = pvar(Var::x2);
  CHECK((x + y).pow(2).to_string() == "x1^2 + 2*x1*x2 + x2^2");
  CHECK((x - y) * (x + y) == x * x - y * y);
  CHECK((x + y).pow(3).size() == 4);
}

TEST_CASE("parse and print round trip") {
  const Poly p = parse_poly("3/2*x1^2*r1 - i*s0 + (1+zeta)*y12 - 7");
  CHECK(parse_poly(p.to_string()) == p);
  CHECK(p.degree() == 3);
  CHECK(p.degree_in(Var::x1) == 2);
  CHECK(p.constant_term() == Cyc(-7));
  CHECK_THROWS_AS(parse_poly("x1 +* x2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("q7"), std::invalid_argument);
}

TEST_CASE("derivative, substitution and evaluation") {
  const Poly p = parse_poly("x1^3*x2 + 5*x2");
  CHECK(p.diff(Var::x1) == parse_poly("3*x1^2*x2"));
  CHECK(p.substitute({{Var::x1, parse_poly("x2 + 1")}}) == parse_poly("(x2+1)^3*x2 + 5*x2"));
  CHECK(p.evaluate({{Var::x1, Cyc(2)}, {Var::x2, Cyc::imag_unit()}}) == Cyc(0, 0, 13, 0));
  CHECK_THROWS_AS(p.evaluate({{Var::x1, Cyc(2)}}), std::invalid_argument);
}

TEST_CASE("reduction modulo a quadratic relation") {
  const Poly rel = parse_poly("25*r1^2 - 900");
  const Poly a = pvar(Var::a);
  CHECK(a.pow(3).reduce_quadratic(Var::a, rel) == a * rel);
  CHECK(a.pow(4).reduce_quadratic(Var::a, rel) == rel * rel);
  CHECK_THROWS_AS(a.reduce_quadratic(Var::a, a), std::invalid_argument);
}

TEST_CASE("rational coefficient views") {
  const Poly p = parse_poly("1/3*x1 - 2");
  CHECK(to_cyc(to_rational(p)) == p);
  CHECK_THROWS(to_rational(parse_poly("i*x1")));
  CHECK(p.coefficient_of(Var::x1, 1) == Poly(Cyc(make_rat(1, 3))));
}
