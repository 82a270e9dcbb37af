#include "doctest.h"

#include <set>
#include <stdexcept>

#include "covforge/calibrate.hpp"
#include "covforge/papermodel.hpp"

using namespace covforge;
using namespace covforge::model;

TEST_CASE("basis forms have the right degrees and are independent") {
  REQUIRE(octic_basis().size() == 9);
  REQUIRE(quartic_basis().size() == 5);
  for (const auto& f : octic_basis()) CHECK(f.degree() == 8);
  for (const auto& f : quartic_basis()) CHECK(f.degree() == 4);
  CHECK(octic_coordinate_map().rank() == 9);
  CHECK(quartic_coordinate_map().rank() == 5);
}

TEST_CASE("the printed e5 is not an octic") {
  const auto printed = printed_basis_forms();
  REQUIRE(printed.size() == kDim);
  CHECK_FALSE(printed[4].has_value());
  CHECK(printed[0].has_value());
}

TEST_CASE("vectors round-trip through forms") {
  const auto v = parse_vector("5*e7 + e9 - i*a0 + 2*a3");
  const auto f = to_forms(v);
  CHECK(from_forms(f.f8, f.f0, f.f4) == v);
  CHECK(parse_vector(vector_to_string(v)) == v);
  CHECK_THROWS(parse_vector("e10"));
}

TEST_CASE("N(H) has order 24 and H order 4") {
  const auto group = enumerate_group({generator(Generator::tau), generator(Generator::sigma)});
  CHECK(group.size() == 24);
  CHECK(klein_subgroup().size() == 4);
  const GroupElt w = generator(Generator::omega);
  CHECK((w * w).is_identity_mod_scalars());
}

TEST_CASE("kappa permutes the three coordinate lines") {
  for (auto g : kGenerators) {
    const auto k = kappa(g);
    CHECK(std::set<int>(k.begin(), k.end()) == std::set<int>{1, 2, 3});
  }
}

TEST_CASE("pi at x0") {
  const ChartImage img = pi_chart(point_x0());
  for (const auto& r : img.r) CHECK(r.is_zero());
  CHECK(img.y == projective_canonical(pi_x0_expected()));
  CHECK(img.y.front() == Cyc(1));
  CHECK_THROWS_AS(pi_chart(point_one()), std::domain_error);
}

TEST_CASE("strata from support") {
  CHECK(stratum_from_support(false, false, false) == Stratum::L0);
  CHECK(stratum_from_support(true, false, false) == Stratum::L1);
  CHECK(stratum_from_support(false, true, true) == Stratum::Lt1);
  CHECK(stratum_from_support(true, true, true) == Stratum::Lzero);
}

TEST_CASE("erratum ledger entries are well formed") {
  std::set<std::string> ids;
  for (const auto& e : errata()) {
    CHECK_FALSE(e.reason.empty());
    CHECK(e.printed != e.corrected);
    CHECK(ids.insert(e.id).second);
  }
  CHECK(errata_for(System::delta_expansion).size() == 23);
}

TEST_CASE("calibration picks one convention and the scalars 1/2, 1, 1/2") {
  const Calibration& cal = calibrate();
  REQUIRE(cal.matching_conventions.size() == 1);
  CHECK(cal.matching_conventions.front() == ActionConvention::InverseSubstitution);
  CHECK(cal.scalars.s6 == make_rat(1, 2));
  CHECK(cal.scalars.s4 == Rat(1));
  CHECK(cal.scalars.s2 == make_rat(1, 2));
}

TEST_CASE("the expansion vanishes at 5e7 + e9 and at a0") {
  const auto q = corrected_equations(System::delta_expansion);
  std::map<Var, Cyc> at;
  const auto& vars = coordinate_vars();
  for (const auto& point : {point_octic_fixed(), point_one()}) {
    for (std::size_t k = 0; k < kDim; ++k) at[vars[k]] = point[k];
    at[Var::eps] = Cyc(1);
    for (const auto& p : q) CHECK(p.evaluate(at).is_zero());
  }
}
