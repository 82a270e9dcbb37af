#include "doctest.h"

#include "covforge/exlinalg.hpp"
#include "covforge/mpoly.hpp"

using namespace covforge;

TEST_CASE("rank and kernel over Q") {
  const QMatrix m = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(m.rank() == 2);
  const auto k = m.kernel();
  REQUIRE(k.size() == 1);
  CHECK(m.apply(k.front()) == std::vector<Rat>(3, Rat(0)));
  CHECK(QMatrix::identity(4).rank() == 4);
}

TEST_CASE("rank over Q(zeta) sees the field") {
  // [[1, i], [i, -1]] has rank 1 over Q(i).
  const CMatrix m = CMatrix::from_rows({{Cyc(1), Cyc::imag_unit()}, {Cyc::imag_unit(), Cyc(-1)}}, 2);
  CHECK(m.rank() == 1);
  const CMatrix r2 = CMatrix::from_rows({{Cyc(1), Cyc::sqrt2()}, {Cyc::sqrt2(), Cyc(1)}}, 2);
  CHECK(r2.rank() == 2);
}

TEST_CASE("subspaces") {
  using S = Subspace<Rat>;
  const S a(3, {{Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)}});
  const S b(3, {{Rat(0), Rat(1), Rat(0)}, {Rat(2), Rat(0), Rat(0)}});
  const S c(3, {{Rat(0), Rat(0), Rat(5)}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(S(3, {{Rat(3), Rat(-1), Rat(0)}})));
  CHECK(a.intersection(c).dim() == 0);
  CHECK(is_direct_sum<Rat>({a, c}));
  CHECK_FALSE(is_direct_sum<Rat>({a, b}));
}

TEST_CASE("fixed subspace of a permutation") {
  const QMatrix cycle = QMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, 3);
  const auto fix = fixed_subspace<Rat>({cycle});
  CHECK(fix.dim() == 1);
}

TEST_CASE("Jacobian rank at an exact point") {
  // Cusp y^2 = x^3 is singular at the origin only.
  const std::vector<Poly> sys = {parse_poly("x2^2 - x1^3")};
  const std::vector<Var> vars = {Var::x1, Var::x2};
  CHECK(jacobian_at(sys, vars, {{Var::x1, Cyc(0)}, {Var::x2, Cyc(0)}}).rank() == 0);
  CHECK(jacobian_at(sys, vars, {{Var::x1, Cyc(1)}, {Var::x2, Cyc(1)}}).rank() == 1);
}
