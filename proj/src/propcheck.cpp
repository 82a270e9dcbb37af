// Seeded randomized property suites over exact arithmetic.
#include <cmath>
#include <random>

#include "covforge/binform.hpp"
#include "covforge/calibrate.hpp"
#include "covforge/symcheck.hpp"

namespace covforge::sym {
namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rat rational() {
    Rat q(integer(-20, 20), integer(1, 9));
    q.canonicalize();
    return q;
  }

  Cyc cyc() { return {rational(), rational(), rational(), rational()}; }
  Cyc gaussian() { return {rational(), 0, rational(), 0}; }
  Cyc nonzero_cyc() {
    for (;;)
      if (Cyc c = cyc(); !c.is_zero()) return c;
  }

  // Up to `terms` monomials of degree <= 3 in x1, x2, x3, a.
  Poly poly(int terms = 4) {
    static constexpr std::array<Var, 4> vars = {Var::x1, Var::x2, Var::x3, Var::a};
    Poly p;
    for (int k = integer(0, terms); k > 0; --k) {
      Exponents e{};
      for (int d = integer(0, 3); d > 0; --d) ++e[index(vars[static_cast<std::size_t>(integer(0, 3))])];
      p.add_term(e, integer(0, 3) == 0 ? cyc() : Cyc(rational()));
    }
    return p;
  }

  BinaryForm<Cyc> form(int degree) {
    BinaryForm<Cyc> f(degree);
    for (int k = 0; k <= degree; ++k) f.coeff(k) = integer(0, 2) == 0 ? Cyc(0) : gaussian();
    return f;
  }

  // A determinant-one matrix over Q(i) as a product of unipotents.
  GroupElt special_linear() {
    GroupElt g = GroupElt::identity();
    for (int k = integer(1, 3); k > 0; --k) {
      const Cyc b = gaussian(), c = gaussian();
      g = g * GroupElt(1, b, 0, 1) * GroupElt(1, 0, c, 1);
    }
    return g;
  }

 private:
  std::mt19937_64 rng_;
};

double distance(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace

CheckResult check_field_axioms(std::uint64_t seed, int samples) {
  CheckLog log;
  Sampler s(seed);
  std::size_t ring = 0, inverse = 0, conj = 0, embed = 0, norm = 0;
  for (int n = 0; n < samples; ++n) {
    const Cyc a = s.cyc(), b = s.cyc(), c = s.cyc(), z = s.nonzero_cyc();
    if (a * (b + c) != a * b + a * c || (a * b) * c != a * (b * c) || a * b != b * a || a + (-a) != Cyc(0)) ++ring;
    if (z * z.inv() != Cyc(1) || (a / z) * z != a) ++inverse;
    if ((a * b).conj() != a.conj() * b.conj() || (a + b).conj() != a.conj() + b.conj() || a.conj().conj() != a) ++conj;
    if (distance((a * b).to_complex(), a.to_complex() * b.to_complex()) > 1e-12 ||
        distance(z.inv().to_complex(), 1.0 / z.to_complex()) > 1e-12 ||
        distance(a.conj().to_complex(), std::conj(a.to_complex())) > 1e-12)
      ++embed;
    const Cyc g = s.gaussian();
    const Cyc gn = g * g.conj();
    if (!gn.is_rational() || sgn(gn[0]) < 0 || (gn[0] == 0) != g.is_zero()) ++norm;
  }
  const std::string of = " on " + std::to_string(samples) + " samples";
  log.residual(ring, "commutative ring axioms" + of);
  log.residual(inverse, "z * z^-1 = 1 and (a / z) z = a" + of);
  log.residual(conj, "conjugation is an involutive field automorphism" + of);
  log.residual(embed, "the complex embedding is a homomorphism to within 1e-12" + of);
  log.residual(norm, "the norm g conj(g) of a Gaussian rational is a nonnegative rational" + of);

  const Cyc zeta = Cyc::zeta();
  log.expect(zeta * Cyc::zeta(3) == Cyc(-1), "zeta * zeta^3 = -1");
  log.expect(Cyc::sqrt2() * Cyc::sqrt2() == Cyc(2) && Cyc::sqrt2() == zeta - Cyc::zeta(3), "(zeta - zeta^3)^2 = 2");
  log.expect(Cyc::imag_unit() * Cyc::imag_unit() == Cyc(-1), "i^2 = -1");
  log.expect(zeta.inv() == -Cyc::zeta(3), "1 / zeta = -zeta^3");
  const Rat h = make_rat(1, 2);
  log.expect((Cyc(1) + zeta).inv() == Cyc(h, -h, h, -h), "1 / (1 + zeta) = (1 - zeta + zeta^2 - zeta^3) / 2");
  bool threw = false;
  try {
    (void)Cyc(0).inv();
  } catch (const std::domain_error&) {
    threw = true;
  }
  log.expect(threw, "inverting 0 raises a domain error");
  return log.finish("property/field_axioms", "exact arithmetic in Q(zeta8)");
}

CheckResult check_polynomial_identities(std::uint64_t seed, int samples) {
  CheckLog log;
  Sampler s(seed);
  const Poly relation = parse_poly("25*r1^2 - 900");
  std::size_t ring = 0, subst = 0, eval = 0, leibniz = 0, reduce = 0, text = 0;
  for (int n = 0; n < samples; ++n) {
    const Poly p = s.poly(), q = s.poly(), r = s.poly();
    if (p * (q + r) != p * q + p * r || (p * q) * r != p * (q * r) || p * q != q * p || p - p != Poly()) ++ring;

    const std::map<Var, Poly> bind = {{Var::x1, s.poly(2)}, {Var::x2, pvar(Var::x3) + Poly(s.cyc())}};
    if ((p * q).substitute(bind) != p.substitute(bind) * q.substitute(bind) ||
        (p + q).substitute(bind) != p.substitute(bind) + q.substitute(bind))
      ++subst;

    const std::map<Var, Cyc> at = {{Var::x1, s.cyc()}, {Var::x2, s.cyc()}, {Var::x3, s.cyc()}, {Var::a, s.cyc()}};
    if ((p * q).evaluate(at) != p.evaluate(at) * q.evaluate(at)) ++eval;

    if ((p * q).diff(Var::x1) != p.diff(Var::x1) * q + p * q.diff(Var::x1)) ++leibniz;

    const Poly rp = p.reduce_quadratic(Var::a, relation), rq = q.reduce_quadratic(Var::a, relation);
    if (rp.degree_in(Var::a) > 1 || (p * q).reduce_quadratic(Var::a, relation) != (rp * rq).reduce_quadratic(Var::a, relation))
      ++reduce;

    if (parse_poly(p.to_string()) != p) ++text;
  }
  const std::string of = " on " + std::to_string(samples) + " samples";
  log.residual(ring, "commutative ring axioms" + of);
  log.residual(subst, "substitution is a ring homomorphism" + of);
  log.residual(eval, "evaluation is multiplicative" + of);
  log.residual(leibniz, "d/dx1 obeys the Leibniz rule" + of);
  log.residual(reduce, "reduction modulo a^2 = 25 r1^2 - 900 is multiplicative and leaves degree <= 1 in a" + of);
  log.residual(text, "printing and parsing round-trip" + of);

  log.expect(parse_poly("a^3").reduce_quadratic(Var::a, Poly(2)) == parse_poly("2*a"), "a^3 = 2a modulo a^2 = 2");
  log.expect((pvar(Var::a) * pvar(Var::a) - relation).reduce_quadratic(Var::a, relation).is_zero(),
             "a^2 - (25 r1^2 - 900) reduces to 0");
  log.expect(parse_poly("(x1 + x2)^2") == parse_poly("x1^2 + 2*x1*x2 + x2^2"), "(x1 + x2)^2 expands");
  bool threw = false;
  try {
    (void)parse_poly("x1 +* 2");
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  log.expect(threw, "malformed input raises invalid_argument");
  return log.finish("property/polynomial_identities", "polynomial arithmetic, substitution and quadratic reduction");
}

CheckResult check_transvectant_symmetry(std::uint64_t seed, int samples) {
  CheckLog log;
  Sampler s(seed);
  std::size_t swapped = 0, alternating = 0;
  for (int n = 0; n < samples; ++n) {
    const int m = s.integer(1, 8), d = s.integer(1, 8), i = s.integer(0, std::min(m, d));
    const BinaryForm<Cyc> f = s.form(m), g = s.form(d);
    const BinaryForm<Cyc> fg = transvectant_classical(f, g, i);
    if (transvectant_classical(g, f, i) != (i % 2 == 0 ? fg : -fg)) ++swapped;
    const int j = 2 * s.integer(0, (m - 1) / 2) + 1;
    if (j <= m && !transvectant_classical(f, f, j).is_zero()) ++alternating;
  }
  const std::string of = " on " + std::to_string(samples) + " samples";
  log.residual(swapped, "psi_i(g, f) = (-1)^i psi_i(f, g)" + of);
  log.residual(alternating, "psi_i(f, f) = 0 for odd i" + of);
  const BinaryForm<Cyc> f = s.form(8), g = s.form(4);
  log.expect(transvectant_classical(f, g, 0) == f * g, "psi_0(f, g) = f g");
  const auto z14 = form_from_poly(parse_poly("z1^4"), 4), z24 = form_from_poly(parse_poly("z2^4"), 4);
  log.expect(transvectant_classical(z14, z24, 2) == form_from_poly(parse_poly("z1^2*z2^2"), 4),
             "psi_2(z1^4, z2^4) = z1^2 z2^2");
  bool threw = false;
  try {
    (void)transvectant_classical(z14, z24, 5);
  } catch (const std::out_of_range&) {
    threw = true;
  }
  log.expect(threw, "psi_5 of two quartics raises out_of_range");
  return log.finish("property/transvectant_symmetry", "symmetry of the transvectants");
}

CheckResult check_transvectant_equivariance(std::uint64_t seed, int samples) {
  CheckLog log;
  Sampler s(seed);
  const auto& scalars = model::calibrate().scalars;
  const Lambda<Cyc> lambda{1, 6, 1, 6};
  std::size_t trans = 0, hom = 0, del = 0;
  for (int n = 0; n < samples; ++n) {
    const GroupElt g = s.special_linear(), h = s.special_linear();
    const int m = s.integer(1, 8), d = s.integer(1, 8), i = s.integer(0, std::min(m, d));
    const BinaryForm<Cyc> f = s.form(m), k = s.form(d);
    if (transvectant_classical(act(g, f), act(g, k), i) != act(g, transvectant_classical(f, k, i))) ++trans;
    if (act(g * h, f) != act(g, act(h, f))) ++hom;
    if (n % 10 == 0) {
      const BinaryForm<Cyc> f8 = s.form(8), f4 = s.form(4);
      const Cyc f0 = s.gaussian();
      if (delta(lambda, act(g, f8), f0, act(g, f4), scalars) != act(g, delta(lambda, f8, f0, f4, scalars))) ++del;
    }
  }
  const std::string of = " on " + std::to_string(samples) + " samples";
  log.residual(trans, "psi_i(g f, g h) = g psi_i(f, h) for random g in SL2(Q(i))" + of);
  log.residual(hom, "(g h) f = g (h f)" + of);
  log.residual(del, "delta(g v) = g delta(v) on random points, eps = 1");
  return log.finish("property/transvectant_equivariance", "SL2-equivariance of transvectants and delta");
}

}  // namespace covforge::sym
