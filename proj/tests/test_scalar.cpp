#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "covforge/scalar.hpp"

using namespace covforge;

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rat("6/-4") == make_rat(-3, 2));
  CHECK(parse_rat("-10") == Rat(-10));
  CHECK(to_string(make_rat(4, 6)) == "2/3");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("zeta is a primitive eighth root of unity") {
  const Cyc z = Cyc::zeta();
  CHECK(z * Cyc::zeta(3) == Cyc(-1));
  CHECK(Cyc::zeta(8) == Cyc(1));
  CHECK(Cyc::zeta(-1) == -Cyc::zeta(3));
  CHECK(Cyc::imag_unit() * Cyc::imag_unit() == Cyc(-1));
  CHECK(Cyc::sqrt2() * Cyc::sqrt2() == Cyc(2));
  CHECK(z.conj() == Cyc::zeta(7));
}

TEST_CASE("inverse of 1 + zeta") {
  // (1 + z)(1 - z + z^2 - z^3) = 1 - z^4 = 2.
  const Cyc expected(make_rat(1, 2), make_rat(-1, 2), make_rat(1, 2), make_rat(-1, 2));
  CHECK((Cyc(1) + Cyc::zeta()).inv() == expected);
  CHECK(Cyc::zeta().inv() == -Cyc::zeta(3));
  CHECK_THROWS_AS(Cyc().inv(), std::domain_error);
}

TEST_CASE("complex embedding") {
  const auto z = Cyc::zeta().to_complex();
  CHECK(std::abs(z - std::polar(1.0, M_PI / 4)) < 1e-15);
  const Cyc a(make_rat(1, 3), Rat(2), make_rat(-5, 7), Rat(1));
  const Cyc b(Rat(-4), make_rat(1, 2), Rat(0), make_rat(3, 11));
  CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-12);
  CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-14);
}

TEST_CASE("field predicates") {
  CHECK(Cyc(make_rat(3, 4)).is_rational());
  CHECK(Cyc::imag_unit().is_gaussian());
  CHECK_FALSE(Cyc::zeta().is_gaussian());
  CHECK(Cyc(1).is_one());
  CHECK(Cyc(0).is_zero());
}
