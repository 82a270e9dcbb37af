#include "doctest.h"

#include <algorithm>

#include "covforge/numcheck.hpp"
#include "covforge/numsolve.hpp"

using namespace covforge;
using namespace covforge::num;

TEST_CASE("the tracker finds the roots of z^2 - 1") {
  const NumSystem sys({parse_poly("x1^2 - 1")}, {Var::x1});
  const AffineMap id{CMat::Identity(1, 1), CVec::Zero(1)};
  const TrackReport rep = track(sys, id, TrackOptions{});
  REQUIRE(rep.accepted == 2);
  std::vector<double> re;
  for (const auto& e : rep.endpoints) {
    CHECK(std::abs(e.x(0).imag()) < 1e-10);
    re.push_back(e.x(0).real());
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(re[1] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("projective solve of two conics") {
  // x^2 = y^2 and x y = z^2 meet in four points of P^2.
  const NumSystem sys({parse_poly("x1^2 - x2^2"), parse_poly("x1*x2 - x3^2")}, {Var::x1, Var::x2, Var::x3});
  const auto sol = solve_projective(sys, NumConfig{}, 7);
  CHECK(sol.points.size() == 4);
  for (const auto& p : sol.points) CHECK(sys.residual(p.x) < 1e-10);
}

TEST_CASE("numeric helpers") {
  CMat m(2, 2);
  m << 1.0, 2.0, 2.0, 4.0;
  CHECK(numeric_rank(m, 1e-8) == 1);
  CHECK(smallest_singular_value(m) < 1e-12);
  CVec a(2), b(2);
  a << cplx(1, 0), cplx(2, 0);
  b << cplx(0, 3), cplx(0, 6);
  CHECK(projective_distance(a, b) < 1e-14);
}

TEST_CASE("six-fold score of a generic octic is large") {
  std::array<cplx, 9> generic{};
  for (std::size_t k = 0; k < 9; ++k) generic[k] = cplx(1.0 + k, 0.5 * k);
  CHECK(six_fold_score(generic, 1) > 1e-4);
}

TEST_CASE("six-fold score vanishes on -(e1 + 10 e4) + 10 e7 + e8") {
  std::array<cplx, 9> x{};
  x[0] = -1.0;
  x[3] = -10.0;
  x[6] = 10.0;
  x[7] = 1.0;
  CHECK(six_fold_score(x, 1) < 1e-10);
}

TEST_CASE("stratum partition at the default sample point") {
  const auto part = count_stratum_points(default_sample_r(), NumConfig{});
  CHECK(part.summary() == "4+12+16=32");
  CHECK(part.count(model::Stratum::Lzero, true) == 12);
  CHECK(part.count(model::Stratum::Lzero, false) == 4);
  CHECK(part.h_orbit);
}
