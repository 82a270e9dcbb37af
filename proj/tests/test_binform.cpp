#include "doctest.h"

#include <stdexcept>

#include "covforge/binform.hpp"

using namespace covforge;

using F = BinaryForm<Cyc>;

TEST_CASE("transvectants of monomials") {
  CHECK(transvectant_classical(F::monomial(4, 0), F::monomial(4, 4), 2) == F::monomial(4, 2));
  // (1/576) * d^4 z1^4 * d^4 z2^4 = 24 * 24 / 576.
  CHECK(transvectant_classical(F::monomial(4, 0), F::monomial(4, 4), 4) == F::monomial(0, 0));
  CHECK(transvectant_classical(F::monomial(4, 0), F::monomial(4, 4), 0) == F::monomial(8, 4));
  CHECK_THROWS_AS(transvectant_classical(F::monomial(4, 0), F::monomial(4, 4), 5), std::out_of_range);
}

TEST_CASE("odd transvectants are alternating") {
  const F f(4, {Cyc(1), Cyc(2), Cyc(0), Cyc::imag_unit(), Cyc(-3)});
  const F g(4, {Cyc(0), Cyc(1), Cyc::zeta(), Cyc(5), Cyc(1)});
  CHECK(transvectant_classical(f, f, 1).is_zero());
  CHECK(transvectant_classical(f, f, 3).is_zero());
  CHECK(transvectant_classical(f, g, 1) == -transvectant_classical(g, f, 1));
  CHECK(transvectant_classical(f, g, 2) == transvectant_classical(g, f, 2));
}

TEST_CASE("substitution action") {
  const F f(2, {Cyc(1), Cyc(0), Cyc(0)});  // z1^2
  const GroupElt swap(0, 1, -1, 0);
  CHECK(act(GroupElt::identity(), f) == f);
  // (z1, z2) -> (z2, -z1) or its inverse; z1^2 goes to z2^2 either way.
  CHECK(act(swap, f) == F::monomial(2, 2));
  const GroupElt u(1, 1, 0, 1);
  CHECK(act(u, act(u.inverse(), f)) == f);
  CHECK_THROWS_AS(act(GroupElt(1, 1, 1, 1), f), std::domain_error);
}

TEST_CASE("group elements modulo scalars") {
  const GroupElt g(1, 2, 3, 4);
  CHECK(g.scaled(Cyc::zeta()).equal_mod_scalars(g));
  CHECK((g * g.inverse()).is_identity_mod_scalars());
  CHECK(g.det() == Cyc(-2));
}

TEST_CASE("root multiplicities") {
  const F f = F::monomial(8, 2);  // z1^6 z2^2
  CHECK(root_multiplicity(f, Cyc(0), Cyc(1)) == 6);
  CHECK(root_multiplicity(f, Cyc(1), Cyc(0)) == 2);
  CHECK(root_multiplicity(f, Cyc(1), Cyc(1)) == 0);
  CHECK(max_root_multiplicity(f) == 6);
  const F g(2, {Cyc(1), Cyc(0), Cyc(1)});  // z1^2 + z2^2
  CHECK(has_distinct_roots(g));
  CHECK_FALSE(has_distinct_roots(g * g));
}

TEST_CASE("delta is bilinear in the summands") {
  const Lambda<Cyc> lam{Cyc(1), Cyc(6), Cyc(1), Cyc(6)};
  const F f8 = F::monomial(8, 4), f4 = F::monomial(4, 2);
  const TransvectantScalars s{make_rat(1, 2), Rat(1), make_rat(1, 2)};
  const F once = delta(lam, f8, Cyc(3), f4, s);
  const F twice = delta(lam, f8.scaled(Cyc(2)), Cyc(6), f4.scaled(Cyc(2)), s);
  CHECK(twice == once.scaled(Cyc(4)));
  CHECK_THROWS_AS(delta(lam, f4, Cyc(1), f4, s), std::invalid_argument);
}
