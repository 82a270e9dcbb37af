#include "covforge/symcheck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "covforge/calibrate.hpp"
#include "covforge/exlinalg.hpp"
#include "covforge/papermodel.hpp"

namespace covforge::sym {
namespace {

using namespace model;
using Space = Subspace<Cyc>;

std::string str(std::size_t n) { return std::to_string(n); }

Vec15<Poly> lift(const Vec15<Cyc>& v) { return {v.begin(), v.end()}; }

Vec15<Cyc> lower(const Vec15<Poly>& v) {
  Vec15<Cyc> out;
  for (const auto& p : v) {
    if (!p.is_constant()) throw std::logic_error("lower: coordinate still symbolic: " + p.to_string());
    out.push_back(p.constant_term());
  }
  return out;
}

std::size_t terms(const std::vector<Poly>& ps) {
  std::size_t n = 0;
  for (const auto& p : ps) n += p.size();
  return n;
}

std::size_t difference_terms(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return std::max(a.size(), b.size());
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += (a[i] - b[i]).size();
  return n;
}

std::vector<Poly> delta_of(const Vec15<Poly>& v) {
  return delta_coordinates(standard_lambda(), v, calibrate().scalars);
}

std::map<Var, Poly> coordinates_of(const Vec15<Poly>& v) {
  std::map<Var, Poly> out;
  for (std::size_t k = 0; k < kDim; ++k) out.emplace(coordinate_vars()[k], v[k]);
  return out;
}

std::vector<Poly> substitute_all(const std::vector<Poly>& system, const std::map<Var, Poly>& bind) {
  std::vector<Poly> out;
  for (const auto& p : system) out.push_back(p.substitute(bind));
  return out;
}

CMatrix action(Generator g) { return induced_action(generator(g)); }

Space span(const std::vector<std::string>& names) {
  std::vector<Vec15<Cyc>> vs;
  for (const auto& n : names) vs.push_back(parse_vector(n));
  return Space(kDim, vs);
}

// Every printed coefficient that differs from the computed one must be a
// ledger entry for that system, and every ledger entry must be such a difference.
void ledger_accounts(CheckLog& log, const std::string& what, const std::vector<Erratum>& ledger,
                     const std::vector<CoefficientDiff>& diffs) {
  std::size_t matched = 0;
  for (const auto& d : diffs) {
    const bool listed = std::any_of(ledger.begin(), ledger.end(), [&](const Erratum& e) {
      return e.equation == d.equation && parse_poly(e.monomial) == parse_poly(d.monomial) &&
             parse_poly(e.printed).constant_term() == d.printed && parse_poly(e.corrected).constant_term() == d.computed;
    });
    if (listed) {
      ++matched;
    } else {
      log.expect(false, "unlisted difference in equation " + std::to_string(d.equation) + " at " + d.monomial +
                            ": printed " + d.printed.to_string() + ", computed " + d.computed.to_string());
    }
  }
  log.expect(matched == diffs.size() && ledger.size() == diffs.size(),
             str(diffs.size()) + " printed coefficients of " + what + " differ from the computation; " +
                 str(ledger.size()) + " erratum entries account for them");
}

// Coefficient of a monomial, as text.
std::string coefficient(const Poly& p, const std::string& monomial) {
  return p.coeff(parse_poly(monomial).terms().begin()->first).to_string();
}

// Permutations of {1,2,3} as image lists.
using Perm = std::array<int, 3>;
Perm compose(const Perm& a, const Perm& b) {  // a after b
  return {a[static_cast<std::size_t>(b[0] - 1)], a[static_cast<std::size_t>(b[1] - 1)],
          a[static_cast<std::size_t>(b[2] - 1)]};
}

int element_order(const GroupElt& g) {
  GroupElt p = g;
  for (int k = 1; k <= 48; ++k) {
    if (p.is_identity_mod_scalars()) return k;
    p = p * g;
  }
  return 0;
}

std::map<int, int> symmetric_group_histogram() {
  std::array<int, 4> p = {0, 1, 2, 3};
  std::map<int, int> hist;
  do {
    std::array<int, 4> q = p;
    int k = 1;
    while (q != std::array<int, 4>{0, 1, 2, 3}) {
      std::array<int, 4> next{};
      for (std::size_t j = 0; j < 4; ++j) next[j] = p[static_cast<std::size_t>(q[j])];
      q = next;
      ++k;
    }
    ++hist[k];
  } while (std::next_permutation(p.begin(), p.end()));
  return hist;
}

std::string histogram_string(const std::map<int, int>& h) {
  std::string s = "{";
  for (const auto& [k, v] : h) s += (s.size() > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(v);
  return s + "}";
}

}  // namespace

// ---------------------------------------------------------------------------

CheckResult check_basis() {
  CheckLog log;
  std::vector<std::vector<Cyc>> c8, c4;
  for (const auto& f : octic_basis()) c8.push_back(f.coeffs());
  for (const auto& f : quartic_basis()) c4.push_back(f.coeffs());
  const std::size_t rank = CMatrix::from_columns(c8, 9).rank() + CMatrix::from_columns(c4, 5).rank() + 1;
  log.expect(rank == kDim, "e1..e9, a0, a1..a5 are linearly independent: rank " + str(rank));
  log.expect(octic_basis()[8] == form_from_poly(parse_poly("70*z1^4*z2^4"), 8), "e9 = 70 z1^4 z2^4");
  log.expect(quartic_basis()[1] == form_from_poly(parse_poly("6*z1^2*z2^2"), 4), "a2 = 6 z1^2 z2^2");

  std::size_t round_trip = 0;
  for (std::size_t k = 0; k < kDim; ++k) {
    const Forms<Cyc> f = to_forms(basis_vector(k));
    if (from_forms(f.f8, f.f0, f.f4) != basis_vector(k)) ++round_trip;
  }
  log.residual(round_trip, "coordinates of each basis vector survive the round trip through binary forms");

  const auto printed = printed_basis_forms();
  log.expect(!printed[4].has_value(), "the printed e5 contains z1^8 z2, which is not of degree 8");
  log.expect(octic_basis()[4] == form_from_poly(parse_poly("8*(z1^7*z2 - 7*z1^5*z2^3 + 7*z1^3*z2^5 - z1*z2^7)"), 8),
             "e5 is read as 8(z1^7 z2 - 7 z1^5 z2^3 + 7 z1^3 z2^5 - z1 z2^7)");
  std::size_t verbatim = 0;
  for (std::size_t k = 0; k < 9; ++k)
    if (k != 4 && printed[k] && *printed[k] == octic_basis()[k]) ++verbatim;
  for (std::size_t k = 10; k < kDim; ++k)
    if (printed[k] && *printed[k] == quartic_basis()[k - 10]) ++verbatim;
  log.expect(verbatim == 13, "the other 13 non-constant basis forms are used exactly as printed: " + str(verbatim));

  const Vec15<Cyc> v = point_octic_fixed();
  Vec15<Cyc> expected(kDim, Cyc(0));
  expected[xi(7)] = 5;
  expected[xi(9)] = 1;
  log.expect(v == expected, "5e7 + e9 has coordinates x7 = 5, x9 = 1: " + vector_to_string(v));
  return log.finish("symbolic/basis", "basis of V(8) + V(0) + V(4) and the coordinate map");
}

CheckResult check_calibration() {
  CheckLog log;
  const Calibration& cal = calibrate();
  for (const auto& c : cal.conventions) {
    std::string where;
    for (const auto& m : c.first_mismatches) where += (where.empty() ? " (" : ", ") + m;
    if (!where.empty()) where += ")";
    log.note(std::string(convention_name(c.convention)) + ": " + std::to_string(c.mismatched_rows) +
             " of 60 action rows differ" + where);
  }
  log.expect(cal.matching_conventions.size() == 1 &&
                 cal.matching_conventions.front() == ActionConvention::InverseSubstitution,
             "exactly one action convention reproduces the action table: f -> f o g^-1");
  for (const auto& v : cal.votes)
    log.note(v.block + " scale " + v.chosen.to_string() + " (" + std::to_string(v.votes_for) + " of " +
             std::to_string(v.votes_total) + " printed coefficients agree, " +
             (v.exact_on_corrected ? "exact on the corrected system" : "NOT exact on the corrected system") + ")");
  log.expect(cal.scalars_unique, "the transvectant scalars are unique: s6 = " + cal.scalars.s6.get_str() +
                                     ", s4 = " + cal.scalars.s4.get_str() + ", s2 = " + cal.scalars.s2.get_str());

  // s4 from the x7 s1 coefficient of Q1 alone: one linear equation in s4.
  const Poly b4 = delta_blocks().b4[0];
  const Cyc unit = b4.coeff(parse_poly("x7*s1").terms().begin()->first);
  log.expect(!unit.is_zero() && Cyc(1) / unit == Cyc(cal.scalars.s4),
             "solving [x7 s1]Q1 = 1 for s4 gives " + (unit.is_zero() ? std::string("no solution") : (Cyc(1) / unit).to_string()));
  const auto computed = delta_system(cal.scalars);
  log.expect(coefficient(computed[0], "x7*x8") == "6", "[x7 x8]Q1 = 6 with s6 = " + cal.scalars.s6.get_str());
  log.expect(coefficient(computed[1], "eps*s1^2") == "1" &&
                 coefficient(printed_equations(System::delta_expansion)[1], "eps*s1^2") == "2",
             "[eps s1^2]Q2 is printed as 2 and computes to 1 with s2 = " + cal.scalars.s2.get_str() +
                 " (erratum ledger)");
  log.expect(cal.ledger_missing.empty() && cal.ledger_unexplained.empty(),
             str(cal.printed_diffs.size()) + " printed coefficients differ; all are erratum entries");
  log.residual(cal.corrected_residual_terms, "calibrated expansion against the corrected Q1..Q5");
  log.within("calibration", cal.millis, 30000.0);
  return log.finish("symbolic/calibration", "implicit conventions fixed by the printed expansion and action table");
}

CheckResult check_delta_expansion() {
  CheckLog log;
  const auto computed = delta_system(calibrate().scalars);
  const auto corrected = corrected_equations(System::delta_expansion);
  log.residual(difference_terms(computed, corrected), "delta_(1,6eps,1,6) in basis coordinates against Q1..Q5");
  log.expect(coefficient(computed[0], "x8*s2") == "6", "[x8 s2]Q1 = 6");
  log.expect(coefficient(computed[2], "x2*x3") == "624", "[x2 x3]q3 = 624");
  const auto q = corrected_q();
  std::map<Var, Poly> no_s;
  for (int j = 0; j <= 5; ++j) no_s.emplace(svar(j), Poly());
  log.residual(difference_terms(substitute_all(computed, no_s), q), "the s-free part of Q1..Q5 against q1..q5");
  ledger_accounts(log, "Q1..Q5", errata_for(System::delta_expansion), coefficient_diffs(printed_equations(System::delta_expansion), computed));
  return log.finish("symbolic/delta_expansion", "coordinate expansion Q1..Q5 of delta");
}

CheckResult check_fixed_locus() {
  CheckLog log;
  const auto computed = delta_system(calibrate().scalars);
  std::map<Var, Poly> cut{{Var::s3, Poly()}, {Var::s4, Poly()}, {Var::s5, Poly()}};
  const auto restricted = substitute_all(computed, cut);
  log.residual(difference_terms(restricted, corrected_equations(System::fixed_locus)),
               "Q1..Q5 with s3 = s4 = s5 = 0 against the stored fixed-locus equations");
  const auto q = corrected_q();
  log.expect(restricted[3] - q[3] == parse_poly("2*x5*s1 + 6*x2*s1 - 6*x5*s2 + 6*x2*s2"),
             "Q4 restricts to q4 + 2x5s1 + 6x2s1 - 6x5s2 + 6x2s2");
  log.expect(restricted.size() == 5, "five equations plus the three vanishing s3, s4, s5");
  // The fixed-locus equations are printed as q_k(x) plus s-terms: the q-part
  // carries the q1..q5 entries of the expansion ledger, the s-terms their own.
  std::vector<Erratum> q_ledger;
  for (const auto& e : errata_for(System::delta_expansion))
    if (!parse_poly(e.monomial).involves(Var::eps) && e.monomial.find('s') == std::string::npos) q_ledger.push_back(e);
  ledger_accounts(log, "q1..q5", q_ledger, coefficient_diffs(printed_q(), q));
  std::vector<Poly> printed_rest, computed_rest;
  const auto printed = printed_equations(System::fixed_locus);
  const auto pq = printed_q();
  for (std::size_t k = 0; k < 5; ++k) {
    printed_rest.push_back(printed[k] - pq[k]);
    computed_rest.push_back(restricted[k] - q[k]);
  }
  ledger_accounts(log, "the s-terms of the fixed-locus equations", errata_for(System::fixed_locus),
                  coefficient_diffs(printed_rest, computed_rest));
  return log.finish("symbolic/fixed_locus", "equations of the H-fixed part of the zero fibre");
}

CheckResult check_action_table() {
  CheckLog log;
  for (Generator g : kGenerators) {
    const CMatrix computed = action(g);
    const CMatrix printed = printed_action(g);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        if (computed(i, j) != printed(i, j)) ++bad;
    log.residual(bad, std::string(generator_name(g)) + ": 15 basis images against the printed table");
  }
  const auto fixed = action(Generator::sigma).apply(point_octic_fixed());
  log.expect(fixed == point_octic_fixed(), "sigma fixes 5e7 + e9: " + vector_to_string(fixed));
  log.expect(action(Generator::rho).apply(parse_vector("a4")) == parse_vector("-a4"), "rho(a4) = -a4");
  log.expect(action(Generator::tau).apply(parse_vector("e7")) == parse_vector("e7"), "tau(e7) = e7");
  log.expect(action(Generator::tau).apply(parse_vector("a1")) == parse_vector("-a1"), "tau(a1) = -a1");
  const CMatrix w = action(Generator::omega);
  log.expect(w * w == CMatrix::identity(kDim), "omega^2 acts as the identity");
  std::size_t corrected_e5 = 0;
  const auto printed_forms = printed_basis_forms();
  for (Generator g : kGenerators) {
    const BinaryForm<Cyc> img = act(generator(g), octic_basis()[4]);
    const auto coords = apply_exact(octic_coordinate_map(), img.coeffs());
    const CMatrix table = printed_action(g);
    for (std::size_t i = 0; i < 9; ++i)
      if (coords[i] != table(i, xi(5))) ++corrected_e5;
  }
  log.residual(corrected_e5, "image of the corrected e5 under all four generators");
  return log.finish("symbolic/action_table", "action of omega, rho, tau, sigma on the basis");
}

CheckResult check_group_structure() {
  CheckLog log;
  const auto group = enumerate_group({generator(Generator::tau), generator(Generator::sigma)});
  log.expect(group.size() == 24, "<tau, sigma> has " + str(group.size()) + " elements modulo scalars");
  std::vector<GroupElt> keys;
  for (const auto& m : group) keys.push_back(m.g.canonical());
  const auto find = [&](const GroupElt& g) -> std::size_t {
    const auto it = std::find(keys.begin(), keys.end(), g.canonical());
    return it == keys.end() ? keys.size() : static_cast<std::size_t>(it - keys.begin());
  };

  std::map<int, int> hist;
  for (const auto& m : group) ++hist[element_order(m.g)];
  const auto s4 = symmetric_group_histogram();
  log.expect(hist == s4, "element orders " + histogram_string(hist) + " match S4 " + histogram_string(s4));

  const auto h = klein_subgroup();
  bool inside = true, closed = true, normal = true;
  for (const auto& a : h) {
    inside = inside && find(a) < keys.size();
    for (const auto& b : h)
      closed = closed && std::any_of(h.begin(), h.end(), [&](const GroupElt& c) { return (a * b).equal_mod_scalars(c); });
    for (const auto& m : group) {
      const GroupElt conj = m.g * a * m.g.inverse();
      normal = normal && std::any_of(h.begin(), h.end(), [&](const GroupElt& c) { return conj.equal_mod_scalars(c); });
    }
  }
  log.expect(h.size() == 4 && inside && closed, "H = {e, omega, rho, omega rho} is a subgroup of order 4");
  log.expect(normal, "H is normal in <tau, sigma>");

  const auto in_h = [&](const GroupElt& g) {
    return std::any_of(h.begin(), h.end(), [&](const GroupElt& c) { return g.equal_mod_scalars(c); });
  };
  std::vector<std::size_t> coset(group.size(), 0);
  std::size_t cosets = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    coset[i] = cosets;
    for (std::size_t j = 0; j < i; ++j)
      if (in_h(group[j].g.inverse() * group[i].g)) {
        coset[i] = coset[j];
        break;
      }
    if (coset[i] == cosets) ++cosets;
  }
  bool abelian = true;
  for (const auto& a : group)
    for (const auto& b : group) abelian = abelian && in_h((a.g * b.g).inverse() * (b.g * a.g));
  log.expect(cosets == 6 && !abelian, "the quotient by H has order " + str(cosets) + (abelian ? " and is abelian" : " and is nonabelian"));

  // kappa along the word of each element, then the homomorphism property on all pairs.
  const std::array<Perm, 2> gen_perm = {kappa(Generator::tau), kappa(Generator::sigma)};
  std::vector<Perm> kap;
  for (const auto& m : group) {
    Perm p = {1, 2, 3};
    std::istringstream words(m.word == "e" ? "" : m.word);
    for (std::string w; words >> w;) p = compose(p, gen_perm[static_cast<std::size_t>(w[1] - '1')]);
    kap.push_back(p);
  }
  bool hom = true;
  std::size_t kernel = 0;
  std::vector<Perm> image;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (kap[i] == Perm{1, 2, 3}) {
      ++kernel;
      hom = hom && in_h(group[i].g);
    }
    if (std::find(image.begin(), image.end(), kap[i]) == image.end()) image.push_back(kap[i]);
    for (std::size_t j = 0; j < group.size(); ++j) {
      const std::size_t k = find(group[i].g * group[j].g);
      hom = hom && k < group.size() && kap[k] == compose(kap[i], kap[j]);
    }
  }
  log.expect(hom && kernel == 4 && image.size() == 6, "kappa is a homomorphism onto S3 with kernel H");
  log.expect(kappa(Generator::sigma) == Perm{2, 3, 1}, "kappa(sigma) sends 1 -> 2, 2 -> 3, 3 -> 1");
  log.expect(8 * 7 * 6 / static_cast<int>(group.size()) == 14, "8 * 7 * 6 / |N(H)| = 14");
  return log.finish("symbolic/group_structure", "N(H) = <tau, sigma> is S4 and N(H)/H is S3");
}

CheckResult check_invariant_subspaces() {
  CheckLog log;
  const Space fix_h = fixed_subspace<Cyc>({action(Generator::omega), action(Generator::rho)});
  log.expect(fix_h.dim() == 6 && fix_h == span({"e7", "e8", "e9", "a0", "a1", "a2"}),
             "fixed space of H is <e7, e8, e9, a0, a1, a2>, dimension " + str(fix_h.dim()));
  const Space fix_n = fixed_subspace<Cyc>({action(Generator::tau), action(Generator::sigma)});
  log.expect(fix_n.dim() == 2 && fix_n == span({"5*e7 + e9", "a0"}),
             "fixed space of N(H) is <5e7 + e9, a0>, dimension " + str(fix_n.dim()));
  const Space v4 = span({"a1", "a2", "a3", "a4", "a5"});
  log.expect(fix_n.intersection(v4).dim() == 0, "V(4) has no nonzero N(H)-fixed vector");

  std::vector<Space> parts;
  std::size_t total = 0;
  bool invariant = true;
  for (const auto& summand : module_summands()) {
    parts.emplace_back(kDim, summand);
    total += parts.back().dim();
    for (Generator g : kGenerators) invariant = invariant && parts.back().is_invariant_under(action(g));
  }
  log.expect(invariant, "each of the 7 summands is invariant under omega, rho, tau, sigma");
  log.expect(is_direct_sum(parts) && total == kDim, "the 7 summands form a direct sum of dimension " + str(total));

  const Space fix_s = fixed_subspace<Cyc>({action(Generator::sigma)});
  const Space v8 = span({"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9"});
  const Space fix_s8 = fix_s.intersection(v8);
  log.expect(fix_s8 == Space(kDim, sigma_fixed_octics()),
             "sigma-fixed octics are <5e7 + e9, 8e4 - i e5 - e6, 4e1 - i e2 + e3>, dimension " + str(fix_s8.dim()));
  const auto s = apply_exact(quartic_coordinate_map(), sigma_fixed_quartic().coeffs());
  Vec15<Cyc> quartic(kDim, Cyc(0));
  for (int j = 1; j <= 5; ++j) quartic[si(j)] = s[static_cast<std::size_t>(j - 1)];
  const Space fix_s4 = fix_s.intersection(v4);
  log.expect(fix_s4.dim() == 1 && fix_s4.contains(quartic),
             "sigma-fixed quartics are spanned by 2(z1^4 - z2^4) + 4(z1^3z2 + z1z2^3) + 4i(z1^3z2 - z1z2^3)");
  return log.finish("symbolic/invariant_subspaces", "fixed spaces of H, N(H), sigma and the N(H)-module decomposition");
}

CheckResult check_equivariance() {
  CheckLog log;
  const auto corrected = corrected_equations(System::delta_expansion);
  const auto printed = printed_equations(System::delta_expansion);
  for (Generator g : kGenerators) {
    log.residual(equivariance_residual(corrected, printed_action(g)),
                 std::string("delta(g v) = g delta(v) for g = ") + std::string(generator_name(g)));
    log.note(std::string("the printed expansion leaves ") + str(equivariance_residual(printed, printed_action(g))) +
             " residual terms under " + std::string(generator_name(g)));
  }
  Vec15<Poly> plane = lift(point_one());
  for (auto& c : plane) c = c * pvar(Var::al1);
  const auto fixed = lift(point_octic_fixed());
  for (std::size_t k = 0; k < kDim; ++k) plane[k] += fixed[k] * pvar(Var::al2);
  log.residual(terms(delta_of(plane)), "delta vanishes on the plane al1 a0 + al2 (5e7 + e9)");
  log.residual(terms(delta_of(lift(point_one()))), "delta(a0) = 0");
  log.residual(terms(delta_of(lift(point_octic_fixed()))), "delta(5e7 + e9) = 0");
  log.residual(terms(delta_of(lift(point_x0()))), "delta(x0) = 0");
  return log.finish("symbolic/equivariance", "delta commutes with N(H) and vanishes on <a0, 5e7 + e9>");
}

CheckResult check_tangent_spaces() {
  CheckLog log;
  const auto system = corrected_equations(System::delta_expansion);
  const std::vector<Var> vars(coordinate_vars().begin(), coordinate_vars().end());
  std::map<Var, Cyc> at_one, at_zero;
  for (std::size_t k = 0; k < kDim; ++k) {
    at_one[vars[k]] = point_one()[k];
    at_zero[vars[k]] = Cyc(0);
  }
  const JacobianRank one = jacobian_rank(system, vars, at_one);
  const Space kernel(kDim, one.kernel);
  const Space v8v0 = span({"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9", "a0"});
  log.expect(one.rank == 5, "Jacobian rank at the point 1 is " + str(one.rank));
  log.expect(kernel == v8v0, "tangent space at 1 is V(8) + V(0), dimension " + str(kernel.dim()));
  log.expect(jacobian_rank(system, vars, at_zero).rank == 0, "Jacobian rank at 0 is 0");

  const auto fixed = corrected_equations(System::fixed_locus);
  const auto fvars = fixed_locus_vars();
  std::map<Var, Cyc> at_fixed;
  const auto p = point_octic_fixed();
  for (Var v : fvars) at_fixed[v] = p[static_cast<std::size_t>(index(v))];
  const JacobianRank fr = jacobian_rank(fixed, fvars, at_fixed);
  log.expect(fr.rank == 5 && fr.kernel.size() == 7,
             "fixed-locus Jacobian at 5e7 + e9 in 12 unknowns: rank " + str(fr.rank) + ", tangent dimension " +
                 str(fr.kernel.size()));
  return log.finish("symbolic/tangent_spaces", "regularity of the point 1 and of 5e7 + e9");
}

CheckResult check_sigma_fixed_plane() {
  CheckLog log;
  const auto basis = sigma_fixed_octics();
  Vec15<Poly> v(kDim, Poly());
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < kDim; ++k) v[k] += pvar(alvar(static_cast<int>(j) + 1)) * Poly(basis[j][k]);
  const Forms<Poly> f = to_forms(v);
  const BinaryForm<Poly> d = delta(standard_lambda(), f.f8, f.f0, f.f4, calibrate().scalars);
  const Poly q = printed_alpha_quadric();
  const BinaryForm<Cyc> quartic = sigma_fixed_quartic();
  std::size_t residual = 0;
  for (int k = 0; k <= 4; ++k) residual += (d.coeff(k) - q * Poly(quartic.coeff(k))).size();
  log.residual(residual, "delta(al1(5e7+e9) + al2(8e4-ie5-e6) + al3(4e1-ie2+e3)) = q(al) * quartic, "
                         "q = 24(5 al1 al3 + i al2^2 - 13 i al3^2)");
  const Cyc i = Cyc::imag_unit();
  log.expect(q.evaluate({{Var::al1, Cyc(13) * i}, {Var::al2, Cyc(0)}, {Var::al3, Cyc(5)}}).is_zero(), "q(13i, 0, 5) = 0");
  log.expect(q.evaluate({{Var::al1, Cyc(1)}, {Var::al2, Cyc(0)}, {Var::al3, Cyc(0)}}).is_zero(), "q(1, 0, 0) = 0");

  const ChartImage img = pi_chart(point_x0());
  const auto expected = projective_canonical(pi_x0_expected());
  log.expect(img.r == std::array<Cyc, 3>{0, 0, 0} && img.y == expected,
             "pi(x0) = ((0,0,0), (-5/4:20:-20:65:0:13:0:0:0))");
  std::size_t moved = 0;
  for (const auto& h : klein_subgroup()) {
    const ChartImage hi = pi_chart(induced_action(h).apply(point_x0()));
    if (hi.r != img.r || hi.y != img.y) ++moved;
  }
  log.residual(moved, "pi(h x0) = pi(x0) for the four elements of H");
  return log.finish("symbolic/sigma_fixed_plane", "delta on the sigma-fixed octics and the point x0");
}

CheckResult check_pi_chart() {
  CheckLog log;
  Vec15<Poly> v = symbolic_point();
  for (int j = 3; j <= 5; ++j) v[si(j)] = Poly();
  const auto y0 = pi_chart_cleared(v);
  const auto x = [&](const Vec15<Poly>& w, int i) { return w[xi(i)]; };
  // r_k * x1 x2 x3 as a polynomial.
  std::vector<Poly> r0;
  for (int k = 1; k <= 3; ++k) {
    Poly p = x(v, k + 3);
    for (int j = 1; j <= 3; ++j)
      if (j != k) p *= x(v, j);
    r0.push_back(p);
  }
  const Poly denom = x(v, 1) * x(v, 2) * x(v, 3);
  for (Generator g : kGenerators) {
    const Vec15<Poly> gv = apply_exact(action(g), v);
    const auto y1 = pi_chart_cleared(gv);
    const auto ay0 = apply_exact(chart_action(g), y0);
    std::size_t p = 0;
    while (p < y1.size() && (y1[p].size() == 0 || ay0[p].size() == 0)) ++p;
    std::size_t res = p == y1.size() ? 1 : 0;
    for (std::size_t j = 0; j < y1.size() && res == 0; ++j) res += (y1[j] * ay0[p] - ay0[j] * y1[p]).size();
    const auto ar0 = apply_exact(r_action(g), r0);
    for (int k = 1; k <= 3; ++k)
      res += (x(gv, k + 3) * denom - x(gv, k) * ar0[static_cast<std::size_t>(k - 1)]).size();
    log.residual(res, "pi(g v) = g pi(v) on R x P^8 for g = " + std::string(generator_name(g)));
  }
  const ChartImage unit = pi_chart(parse_vector("e1 + e2 + e3"));
  log.expect(unit.r == std::array<Cyc, 3>{0, 0, 0} && unit.y == std::vector<Cyc>{1, 1, 1, 0, 0, 0, 0, 0, 0},
             "pi(e1 + e2 + e3) = ((0,0,0), (1:1:1:0:0:0:0:0:0))");
  bool refused = false;
  try {
    pi_chart(point_one());
  } catch (const std::domain_error&) {
    refused = true;
  }
  log.expect(refused, "pi is undefined at a0, where x1 x2 x3 = 0");
  return log.finish("symbolic/pi_chart", "the chart map pi is N(H)-equivariant and constant on H-orbits");
}

CheckResult check_chart_equations() {
  CheckLog log;
  const Poly w1 = pvar(Var::w1), w2 = pvar(Var::w2), w3 = pvar(Var::w3);
  // x1 = w2 w3, x2 = w1 w3, x3 = w1 w2 makes y1, y2, y3 the squares w1^2, w2^2, w3^2.
  const std::map<Var, Poly> torus = {
      {Var::x1, w2 * w3}, {Var::x2, w1 * w3}, {Var::x3, w1 * w2}, {Var::x4, pvar(Var::r1) * w2 * w3},
      {Var::x5, pvar(Var::r2) * w1 * w3}, {Var::x6, pvar(Var::r3) * w1 * w2}, {Var::x7, pvar(Var::y7)},
      {Var::x8, pvar(Var::y8)}, {Var::x9, pvar(Var::y9)}, {Var::s0, pvar(Var::y10)}, {Var::s1, pvar(Var::y11)},
      {Var::s2, pvar(Var::y12)}};
  const std::map<Var, Poly> squares = {{Var::y1, w1 * w1}, {Var::y2, w2 * w2}, {Var::y3, w3 * w3}};
  const auto fixed = corrected_equations(System::fixed_locus);
  const auto chart = corrected_equations(System::chart_equations);
  std::vector<Poly> derived;
  for (std::size_t k = 0; k < 5; ++k) {
    const Poly lhs = fixed[k].substitute(torus);
    const Poly rhs = chart[k].substitute(squares) * chart_equation_factor(static_cast<int>(k) + 1).substitute(torus);
    log.residual((lhs - rhs).size(), "chart equation " + std::to_string(k + 1) + " from the fixed-locus equation on L(r)");
  }
  log.expect(chart[2].coefficient_of(Var::y1, 1) == parse_poly("48*r2*r3 - 336*r2 - 336*r3 + 624"),
             "the third chart equation has coefficient 48r2r3 - 336r2 - 336r3 + 624 on y1");
  ledger_accounts(log, "the chart equations", errata_for(System::chart_equations),
                  coefficient_diffs(printed_equations(System::chart_equations), chart));

  std::map<Var, Poly> section;
  const auto up = u_prime();
  for (std::size_t k = 0; k < 9; ++k) section[chart_vars()[k]] = Poly(up[k]);
  log.residual(terms(substitute_all(chart, section)), "u'(r) = (0:0:0:0:0:0:1:0:0) solves the chart equations for all r");

  std::map<Var, Poly> line{{Var::r1, Poly()}, {Var::r2, Poly()}, {Var::r3, Poly()}};
  const auto upp = u_double_prime_zero();
  for (std::size_t k = 0; k < 9; ++k) line[chart_vars()[k]] = Poly(upp[k]) + Poly(up[k]) * pvar(Var::t);
  log.residual(terms(substitute_all(chart, line)), "the line u''(0) + t u' lies in the fibre over r = 0");
  return log.finish("symbolic/chart_equations", "equations of the image of pi in R x P^8");
}

CheckResult check_projection_centres() {
  CheckLog log;
  std::vector<std::vector<Cyc>> centre = {u_prime(), u_double_prime_zero()};
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<Cyc> e(9, Cyc(0));
    e[k] = 1;
    centre.push_back(e);
  }
  const Space n0(9, centre);
  log.expect(n0.dim() == 5, "N(0) = <u', u''(0), e_y1, e_y2, e_y3> has projective dimension " + std::to_string(n0.dim() - 1));
  const Space n(9, CMatrix::from_rows(subspace_n_equations(), 9).kernel());
  log.expect(n == Space(9, subspace_n_basis()) && n.dim() == 4,
             "N = {y1 = y2 = y3 = y7 + 7y9 = y10 = 0} has projective dimension " + std::to_string(n.dim() - 1));
  log.expect(n0.intersection(n).dim() == 0, "N(0) and N do not meet in P^8");
  log.expect(n0.sum(n).dim() == 9, "N(0) + N spans the chart space, so projection from N(0) onto N is defined");
  const auto upp = u_double_prime_zero();
  log.expect(upp[6].is_zero() && upp[7].is_zero() && upp[8].is_zero(), "u''(0) has y10 = y11 = y12 = 0");
  return log.finish("symbolic/projection_centres", "the subspaces N(0) and N of P^8");
}

CheckResult check_strata() {
  CheckLog log;
  const auto q = corrected_q();
  const auto q_at = [&](const Vec15<Poly>& v) { return substitute_all(q, coordinates_of(v)); };
  const Poly relation = parse_poly("25*r1^2 - 900");

  std::size_t bad = 0;
  bool in_l0 = true, outside_x1 = true;
  for (const auto& p : points_l0()) {
    bad += terms(q_at(lift(p)));
    in_l0 = in_l0 && in_stratum(Stratum::L0, {0, 0, 0}, p);
    outside_x1 = outside_x1 && max_root_multiplicity(to_forms(p).f8) < 6;
  }
  log.residual(bad, "q1..q5 vanish at 5e7 +- e9 and 15e7 +- 5e8 - e9");
  log.expect(in_l0 && outside_x1, "the four points lie in L0 and have no root of multiplicity >= 6");
  log.expect(has_distinct_roots(to_forms(point_octic_fixed()).f8), "5e7 + e9 has distinct roots");

  for (int sign : {1, -1}) {
    std::size_t fam = 0;
    for (const auto& p : q_at(l1_family(sign))) fam += p.reduce_quadratic(Var::a, relation).size();
    log.residual(fam, std::string("L1 family ") + (sign > 0 ? "+" : "-") + "(a e1 + r1 a e4) + (90 - 5r1^2)e7 - 5r1 e8 + 6e9 modulo a^2 = 25(r1^2 - 36)");
    log.residual(terms(q_at(l1_x1_point(sign))),
                 std::string("L1 point ") + (sign > 0 ? "+" : "-") + "(e1 + r1 e4) + r1 e7 + e8 for all r1");
    const BinaryForm<Poly> f = to_forms(l1_x1_point(sign)).f8;
    const int m = sign < 0 ? root_multiplicity(f, Cyc(1), Cyc(0)) : root_multiplicity(f, Cyc(0), Cyc(1));
    log.expect(m == 6, std::string("its octic has a root of multiplicity ") + std::to_string(m) + " at " +
                           (sign < 0 ? "(1:0)" : "(0:1)") + " for all r1");
  }
  const BinaryForm<Poly> minus = to_forms(l1_x1_point(-1)).f8;
  bool shape = true;
  for (int k = 0; k <= 8; ++k) {
    const Poly want = k == 6 ? Poly(56) : k == 8 ? parse_poly("2*r1") : Poly();
    shape = shape && minus.coeff(k) == want;
  }
  log.expect(shape, "-e1 - r1 e4 + r1 e7 + e8 = z2^6 (2 r1 z2^2 + 56 z1^2)");

  const std::map<Var, Poly> at10{{Var::r1, Poly(10)}, {Var::a, Poly(40)}};
  std::vector<Vec15<Cyc>> l1;
  for (int sign : {1, -1}) {
    Vec15<Poly> fam = l1_family(sign), x1p = l1_x1_point(sign);
    for (auto& c : fam) c = c.substitute(at10);
    for (auto& c : x1p) c = c.substitute(at10);
    l1.push_back(lower(fam));
    l1.push_back(lower(x1p));
  }
  log.expect(l1[0] == parse_vector("40*e1 + 400*e4 - 410*e7 - 50*e8 + 6*e9"),
             "r1 = 10, a = 40 gives 40e1 + 400e4 - 410e7 - 50e8 + 6e9");
  const std::array<Cyc, 3> sample{10, Cyc(make_rat(1, 2)), Cyc(make_rat(1, 3))};
  std::size_t inst = 0;
  bool strata = true;
  std::vector<std::vector<Cyc>> canon;
  int x1_count = 0;
  for (const auto& p : l1) {
    inst += terms(q_at(lift(p)));
    strata = strata && in_stratum(Stratum::L1, sample, p);
    canon.push_back(projective_canonical(p));
    if (max_root_multiplicity(to_forms(p).f8) >= 6) ++x1_count;
  }
  std::sort(canon.begin(), canon.end(), [](const auto& a, const auto& b) { return vector_to_string(a) < vector_to_string(b); });
  const bool distinct = std::adjacent_find(canon.begin(), canon.end()) == canon.end();
  log.residual(inst, "the four L1 points at r = (10, 1/2, 1/3) solve q1..q5 exactly");
  log.expect(strata && distinct && x1_count == 2,
             "they are distinct points of L1(r), two with a six-fold root and two without");

  // g L_j(r) = L_kappa(g)(j)(g r) on the generic point of each L_j.
  std::size_t moved = 0;
  for (Generator g : {Generator::tau, Generator::sigma}) {
    const auto gr = apply_exact(r_action(g), std::vector<Poly>{pvar(Var::r1), pvar(Var::r2), pvar(Var::r3)});
    for (int j = 1; j <= 3; ++j) {
      Vec15<Poly> v(kDim, Poly());
      v[xi(j)] = pvar(xvar(j));
      v[xi(j + 3)] = pvar(rvar(j)) * pvar(xvar(j));
      for (int k = 7; k <= 9; ++k) v[xi(k)] = pvar(xvar(k));
      const Vec15<Poly> gv = apply_exact(action(g), v);
      const int target = kappa(g)[static_cast<std::size_t>(j - 1)];
      for (int k = 1; k <= 3; ++k) {
        if (k != target) moved += gv[xi(k)].size() + gv[xi(k + 3)].size();
        moved += (gv[xi(k + 3)] - gr[static_cast<std::size_t>(k - 1)] * gv[xi(k)]).size();
      }
      if (gv[xi(target)].size() == 0) ++moved;
    }
  }
  log.residual(moved, "g L_j(r) = L_kappa(g)(j)(g r) for g = tau, sigma and j = 1, 2, 3");

  const std::size_t order = enumerate_group({generator(Generator::tau), generator(Generator::sigma)}).size();
  log.expect(8 * 7 * 6 / static_cast<int>(order) == 14 && 18 + 14 == 32 && (1 << 5) == 32,
             "degree bookkeeping: 8*7*6/" + str(order) + " = 14 and 18 + 14 = 32 = 2^5");
  return log.finish("symbolic/strata", "exact points of the strata L0 and L1 and their symmetry");
}

CheckResult check_scaling_identity() {
  CheckLog log;
  const Poly m0 = pvar(Var::mu0), m4 = pvar(Var::mu4), m8 = pvar(Var::mu8), e = pvar(Var::eps), t = pvar(Var::t);
  const Forms<Poly> f = to_forms(symbolic_point());
  const auto& s = calibrate().scalars;
  const Lambda<Poly> scaled{m0 * m4, Poly(6) * e * m4 * m4, m4 * m8, Poly(6) * m8 * m8};
  const auto lhs = delta(scaled, f.f8, f.f0, f.f4, s);
  const auto rhs = delta(standard_lambda(), f.f8.scaled(m8), f.f0 * m0, f.f4.scaled(m4), s);
  std::size_t res = 0;
  for (int k = 0; k <= 4; ++k) res += (lhs.coeff(k) - rhs.coeff(k)).size();
  log.residual(res, "delta_(mu0 mu4, 6 eps mu4^2, mu4 mu8, 6 mu8^2)(f8 + f0 + f4) = delta_(1,6eps,1,6)(mu8 f8 + mu0 f0 + mu4 f4)");
  const auto base = delta(standard_lambda(), f.f8, f.f0, f.f4, s);
  const auto grown = delta(standard_lambda(), f.f8.scaled(t), f.f0 * t, f.f4.scaled(t), s);
  std::size_t hom = 0;
  for (int k = 0; k <= 4; ++k) hom += (grown.coeff(k) - base.coeff(k) * t * t).size();
  log.residual(hom, "delta(t v) = t^2 delta(v)");
  return log.finish("symbolic/scaling_identity", "rescaling the summands rescales lambda");
}

}  // namespace covforge::sym
