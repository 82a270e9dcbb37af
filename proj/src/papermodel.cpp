#include "covforge/papermodel.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <regex>

namespace covforge::model {
namespace {

const std::vector<std::string> kPrintedBasis = {
    "28*(z1^6*z2^2 - z1^2*z2^6)",
    "56*(z1^7*z2 + z1^5*z2^3 - z1^3*z2^5 - z1*z2^7)",
    "56*(z1^7*z2 - z1^5*z2^3 - z1^3*z2^5 + z1*z2^7)",
    "z1^8 - z2^8",
    "8*(z1^8*z2 - 7*z1^5*z2^3 + 7*z1^3*z2^5 - z1*z2^7)",
    "8*(z1^7*z2 + 7*z1^5*z2^3 + 7*z1^3*z2^5 + z1*z2^7)",
    "z1^8 + z2^8",
    "28*(z1^6*z2^2 + z1^2*z2^6)",
    "70*z1^4*z2^4",
    "1",
    "z1^4 + z2^4",
    "6*z1^2*z2^2",
    "z1^4 - z2^4",
    "4*(z1^3*z2 - z1*z2^3)",
    "4*(z1^3*z2 + z1*z2^3)",
};

const std::vector<std::string> kBasisNames = {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8",
                                              "e9", "a0", "a1", "a2", "a3", "a4", "a5"};

const std::map<Generator, std::vector<std::string>> kActionText = {
    {Generator::omega,
     {"-x1", "x2", "-x3", "-x4", "x5", "-x6", "x7", "x8", "x9", "s0", "s1", "s2", "-s3", "s4", "-s5"}},
    {Generator::rho,
     {"x1", "-x2", "-x3", "x4", "-x5", "-x6", "x7", "x8", "x9", "s0", "s1", "s2", "s3", "-s4", "-s5"}},
    {Generator::tau,
     {"-x1", "-i*x3", "-i*x2", "x4", "-i*x6", "-i*x5", "x7", "-x8", "x9", "s0", "-s1", "s2", "-s3", "i*s5",
      "i*s4"}},
    {Generator::sigma,
     {"4*x3", "-i/4*x1", "i*x2", "-8*x6", "-i/8*x4", "-i*x5", "1/8*x7 + 7/2*x8 + 35/8*x9",
      "-1/8*x7 - 1/2*x8 + 5/8*x9", "1/8*x7 - 1/2*x8 + 3/8*x9", "s0", "-1/2*s1 - 3/2*s2", "1/2*s1 - 1/2*s2",
      "2*s5", "i/2*s3", "-i*s4"}},
};

const std::map<Generator, std::vector<std::string>> kChartActionText = {
    {Generator::omega, {"y1", "y2", "y3", "y7", "y8", "y9", "y10", "y11", "y12"}},
    {Generator::rho, {"y1", "y2", "y3", "y7", "y8", "y9", "y10", "y11", "y12"}},
    {Generator::tau, {"y1", "-y3", "-y2", "y7", "-y8", "y9", "y10", "-y11", "y12"}},
    {Generator::sigma,
     {"1/16*y3", "-16*y1", "-y2", "1/8*y7 + 7/2*y8 + 35/8*y9", "-1/8*y7 - 1/2*y8 + 5/8*y9",
      "1/8*y7 - 1/2*y8 + 3/8*y9", "y10", "-1/2*y11 - 3/2*y12", "1/2*y11 - 1/2*y12"}},
};

const std::map<Generator, std::vector<std::string>> kRActionText = {
    {Generator::omega, {"r1", "r2", "r3"}},
    {Generator::rho, {"r1", "r2", "r3"}},
    {Generator::tau, {"-r1", "r3", "r2"}},
    {Generator::sigma, {"-2*r3", "r1/2", "-r2"}},
};

const std::vector<std::string> kPrintedQ = {
    "6*x7*x8 + 90*x8*x9 - 6*x4*x1 - 192*x5^2 - 96*x5*x2 - 192*x6^2 - 96*x6*x3 + 384*x2^2 + 384*x3^2",
    "2*x7^2 - 16*x8^2 - 50*x9^2 - 2*x4^2 - 64*x5^2 + 96*x5*x2 + 64*x6^2 - 96*x6*x3 + 16*x1^2 + 128*x2^2"
    " - 128*x3^2",
    "-6*x7*x1 + 6*x8*x4 + 90*x9*x1 + 48*x5*x6 - 336*x5*x3 - 336*x6*x2 + 624*x2*x3",
    "-3*x7*x5 - 21*x7*x2 + 12*x8*x5 - 132*x8*x2 + 15*x9*x5 - 15*x9*x2 + 3*x4*x6 + 21*x4*x3 + 42*x6*x1"
    " + 78*x1*x3",
    "3*x7*x6 + 21*x7*x3 + 12*x8*x6 - 132*x8*x3 - 15*x9*x6 + 15*x9*x3 - 3*x4*x5 - 21*x4*x2 + 42*x5*x1"
    " + 78*x1*x2",
};

// Q_k - q_k as printed.
const std::vector<std::string> kPrintedQRest = {
    "x7*s1 + x9*s1 + 6*x8*s2 - x4*s3 + 8*x5*s4 + 24*x2*s4 - 8*x6*s5 - 24*x3*s5"
    " + eps*(6*s1*s2 - 12*s4^2 - 12*s5^2) + s0*s1",
    "2*x8*s1 + 6*x9*s2 - 2*x1*s3 - 8*x5*s4 - 8*x2*s4 - 8*x6*s5 + 8*x3*s5"
    " + eps*(2*s1^2 - 6*s2^2 - 2*s3^2 - 4*s4^2 + 4*s5^2) + s0*s2",
    "x4*s1 + 6*x1*s2 - x7*s3 + x9*s3 + 32*x3*s4 - 32*x2*s5 + eps*(6*s2*s3 - 12*s4*s5) + s0*s3",
    "2*x5*s1 + 6*x2*s1 - 6*x5*s2 + 6*x2*s2 - 8*x3*s3 + 4*x8*s4 - 4*x9*s4 - 4*x1*s5"
    " + eps*(-3*s1*s4 - 3*s2*s4 + 3*s3*s5) + s0*s4",
    "2*x6*s1 + 6*x3*s1 + 6*x2*s2 - 6*x3*s2 - 8*x2*s3 + 4*x1*s4 - 4*x8*s5 - 4*x9*s5"
    " + eps*(3*s1*s5 - 3*s2*s5 - 3*s3*s4) + s0*s5",
};

// The s-dependent parts of the fixed-locus equations as printed.
const std::vector<std::string> kPrintedFixedRest = {
    "x7*s1 + x9*s1 + 6*x8*s2 + eps*6*s1*s2 + s0*s1",
    "2*x8*s1 + 6*x9*s2 + eps*(2*s1^2 - 6*s2^2) + s0*s2",
    "x4*s1 + 6*x1*s2",
    "2*x5*s1 + 6*x2*s1 - 6*x5*s2 + 6*x2*s2",
    "2*x6*s1 + 6*x3*s1 + 6*x6*s2 - 6*x3*s2",
};

const std::vector<std::string> kPrintedChart = {
    "6*y7*y8 + 90*y8*y9 + (-192*r3^2 - 96*r3 + 384)*y1*y2 + (-192*r2^2 - 96*r2 + 384)*y1*y3"
    " + (-6*r1)*y2*y3 + y7*y10 + y9*y11 + 6*y8*y12 + 6*eps*y11*y12 + y10*y11",
    "2*y7^2 - 16*y8^2 - 50*y9^2 + (64*r3^2 - 96*r3 - 128)*y1*y2 + (-64*r2^2 + 96*r2 + 128)*y1*y3"
    " + (-2*r1^2 + 16)*y2*y3 + 2*y8*y11 + 6*y9*y12 + eps*(2*y11^2 - 6*y12^2) + y10*y12",
    "(48*r2*r3 - 336*r2 - 336*r3 + 624)*y1 - 6*y7 + 6*r1*y8 + 90*y9 + r1*y11 + 6*y12",
    "(3*r1*r3 + 21*r1 + 42*r3 + 78)*y2 + (-3*r2 - 21)*y7 + (12*r2 - 132)*y8 + (15*r2 - 15)*y9"
    " + (2*r2 + 6)*y11 + (-6*r2 + 6)*y12",
    "(-3*r1*r2 - 21*r1 + 42*r2 + 78)*y3 + (3*r1 + 21)*y7 + (12*r3 - 132)*y8 + (-15*r3 + 15)*y9"
    " + (2*r3 + 6)*y11 + (6*r3 - 6)*y12",
};

const std::string kSquares =
    "square monomials are printed at twice the value of the equivariant expansion; the corrected value "
    "is the calibrated expansion and makes the system commute with the printed action table";
const std::string kEpsSquares =
    "eps*s_j^2 coefficients are printed at twice the calibrated expansion, like the other squares";

std::vector<Erratum> build_errata() {
  std::vector<Erratum> out;
  auto add = [&](std::string location, int eq, std::string mono, std::string printed, std::string corrected,
                 std::string reason) {
    const std::string id = location + "/" + std::to_string(eq) + "/" + mono;
    out.push_back({id, std::move(location), eq, std::move(mono), std::move(printed), std::move(corrected),
                   std::move(reason)});
  };
  out.push_back({"basis/e5", "basis", 0, "e5", kPrintedBasis[4],
                 "8*(z1^7*z2 - 7*z1^5*z2^3 + 7*z1^3*z2^5 - z1*z2^7)",
                 "first monomial has degree 9 in an octic; z1^7*z2 is the only reading that keeps e5 "
                 "homogeneous, and with it the action table and the expansion hold"});
  out.push_back({"proof/e0", "proof", 0, "5e7 + e0", "5e7 + e0", "5e7 + e9",
                 "there is no e0; the plane in the argument is <a0, 5e7 + e9>"});

  const std::string d = "delta_expansion";
  add(d, 1, "x2^2", "384", "192", kSquares);
  add(d, 1, "x3^2", "384", "192", kSquares);
  add(d, 1, "x5^2", "-192", "-96", kSquares);
  add(d, 1, "x6^2", "-192", "-96", kSquares);
  add(d, 1, "eps*s4^2", "-12", "-6", kEpsSquares);
  add(d, 1, "eps*s5^2", "-12", "-6", kEpsSquares);
  add(d, 2, "x1^2", "16", "8", kSquares);
  add(d, 2, "x2^2", "128", "64", kSquares);
  add(d, 2, "x3^2", "-128", "-64", kSquares);
  add(d, 2, "x4^2", "-2", "-1", kSquares);
  add(d, 2, "x5^2", "-64", "-32", kSquares);
  add(d, 2, "x6^2", "64", "32", kSquares);
  add(d, 2, "x7^2", "2", "1", kSquares);
  add(d, 2, "x8^2", "-16", "-8", kSquares);
  add(d, 2, "x9^2", "-50", "-25", kSquares);
  add(d, 2, "eps*s1^2", "2", "1", kEpsSquares);
  add(d, 2, "eps*s2^2", "-6", "-3", kEpsSquares);
  add(d, 2, "eps*s3^2", "-2", "-1", kEpsSquares);
  add(d, 2, "eps*s4^2", "-4", "-2", kEpsSquares);
  add(d, 2, "eps*s5^2", "4", "2", kEpsSquares);
  add(d, 2, "x2*s4", "-8", "8",
      "sign error: the omega/rho/tau/sigma images of the s4 terms force +8, matching the +24*x2*s4 pattern "
      "of the first equation");
  add(d, 5, "x2*s2", "6", "0",
      "index typo: the fixed-locus system prints this term as 6*x6*s2, which is the calibrated value");
  add(d, 5, "x6*s2", "0", "6", "index typo, see the companion entry for x2*s2");

  const std::string f = "fixed_locus";
  add(f, 2, "eps*s1^2", "2", "1", kEpsSquares);
  add(f, 2, "eps*s2^2", "-6", "-3", kEpsSquares);

  const std::string c = "chart_equations";
  const std::string inherited = "inherited from the doubled square coefficients of q1, q2 under x_j^2 -> y-products";
  add(c, 1, "r3^2*y1*y2", "-192", "-96", inherited);
  add(c, 1, "y1*y2", "384", "192", inherited);
  add(c, 1, "r2^2*y1*y3", "-192", "-96", inherited);
  add(c, 1, "y1*y3", "384", "192", inherited);
  add(c, 1, "y7*y10", "1", "0", "the term x7*s1 of the first fixed-locus equation becomes y7*y11, not y7*y10");
  add(c, 1, "y7*y11", "0", "1", "companion of the y7*y10 entry");
  add(c, 2, "y7^2", "2", "1", inherited);
  add(c, 2, "y8^2", "-16", "-8", inherited);
  add(c, 2, "y9^2", "-50", "-25", inherited);
  add(c, 2, "r3^2*y1*y2", "64", "32", inherited);
  add(c, 2, "y1*y2", "-128", "-64", inherited);
  add(c, 2, "r2^2*y1*y3", "-64", "-32", inherited);
  add(c, 2, "y1*y3", "128", "64", inherited);
  add(c, 2, "r1^2*y2*y3", "-2", "-1", inherited);
  add(c, 2, "y2*y3", "16", "8", inherited);
  add(c, 2, "eps*y11^2", "2", "1", inherited);
  add(c, 2, "eps*y12^2", "-6", "-3", inherited);
  add(c, 5, "r1*y7", "3", "0",
      "index typo: the fifth equation comes from q5 with x6 = r3*x3, so the y7 coefficient is 3*r3 + 21");
  add(c, 5, "r3*y7", "0", "3", "companion of the r1*y7 entry");
  return out;
}

Exponents monomial_exponents(const std::string& text) {
  const Poly p = parse_poly(text);
  if (p.size() != 1 || !p.terms().begin()->second.is_one())
    throw std::logic_error("erratum monomial '" + text + "' is not a monic monomial");
  return p.terms().begin()->first;
}

Poly apply_errata(Poly p, System s, int equation) {
  for (const auto& e : errata()) {
    if (e.location != system_name(s) || e.equation != equation) continue;
    const Exponents m = monomial_exponents(e.monomial);
    const Cyc printed = parse_poly(e.printed).constant_term();
    const Cyc corrected = parse_poly(e.corrected).constant_term();
    if (p.coeff(m) != printed)
      throw std::logic_error("erratum " + e.id + ": transcription holds " + p.coeff(m).to_string() +
                             ", ledger says printed " + printed.to_string());
    p.add_term(m, corrected - printed);
  }
  return p;
}

CMatrix linear_rows(const std::vector<std::string>& texts, const std::vector<Var>& vars) {
  CMatrix m(texts.size(), vars.size());
  for (std::size_t j = 0; j < texts.size(); ++j) {
    const Poly p = parse_poly(texts[j]);
    if (p.degree() > 1 || !p.constant_term().is_zero())
      throw std::logic_error("action entry '" + texts[j] + "' is not a linear form");
    Poly rest = p;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const Poly c = p.coefficient_of(vars[k], 1);
      m(j, k) = c.constant_term();
      rest -= c * Poly::var(vars[k]);
    }
    if (!rest.is_zero()) throw std::logic_error("action entry '" + texts[j] + "' uses foreign variables");
  }
  return m;
}

std::string basis_names_to_coords(std::string_view text) {
  static const std::regex e_re("\\be([1-9])\\b");
  static const std::regex a_re("\\ba([0-5])\\b");
  std::string s(text);
  s = std::regex_replace(s, e_re, "x$1");
  s = std::regex_replace(s, a_re, "s$1");
  return s;
}

CMatrix coordinate_map_for(const std::vector<BinaryForm<Cyc>>& basis, int degree) {
  const std::size_t n = static_cast<std::size_t>(degree) + 1;
  std::vector<std::vector<Cyc>> cols;
  for (const auto& f : basis) cols.push_back(f.coeffs());
  return CMatrix::from_columns(cols, n).inverse();
}

}  // namespace

const std::array<Var, kDim>& coordinate_vars() {
  static const std::array<Var, kDim> v = {Var::x1, Var::x2, Var::x3, Var::x4, Var::x5,
                                          Var::x6, Var::x7, Var::x8, Var::x9, Var::s0,
                                          Var::s1, Var::s2, Var::s3, Var::s4, Var::s5};
  return v;
}

Vec15<Poly> symbolic_point() {
  Vec15<Poly> v;
  for (Var x : coordinate_vars()) v.push_back(Poly::var(x));
  return v;
}

Vec15<Cyc> basis_vector(std::size_t k) {
  Vec15<Cyc> v(kDim, Cyc(0));
  v.at(k) = Cyc(1);
  return v;
}

Vec15<Cyc> parse_vector(std::string_view text) {
  const Poly p = parse_poly(basis_names_to_coords(text));
  if (p.degree() > 1 || !p.constant_term().is_zero())
    throw std::invalid_argument("parse_vector: '" + std::string(text) + "' is not a linear combination");
  Vec15<Cyc> v(kDim, Cyc(0));
  Poly rest = p;
  for (std::size_t k = 0; k < kDim; ++k) {
    const Poly c = p.coefficient_of(coordinate_vars()[k], 1);
    v[k] = c.constant_term();
    rest -= c * Poly::var(coordinate_vars()[k]);
  }
  if (!rest.is_zero()) throw std::invalid_argument("parse_vector: unknown names in '" + std::string(text) + "'");
  return v;
}

std::string vector_to_string(const Vec15<Cyc>& v) {
  Poly p;
  for (std::size_t k = 0; k < kDim; ++k) p += Poly::var(coordinate_vars()[k]).scaled(v[k]);
  std::string s = p.to_string();
  static const std::regex x_re("\\bx([1-9])\\b");
  static const std::regex s_re("\\bs([0-5])\\b");
  s = std::regex_replace(s, x_re, "e$1");
  return std::regex_replace(s, s_re, "a$1");
}

const std::vector<std::string>& printed_basis_text() { return kPrintedBasis; }

std::vector<std::optional<BinaryForm<Cyc>>> printed_basis_forms() {
  std::vector<std::optional<BinaryForm<Cyc>>> out;
  for (std::size_t k = 0; k < kDim; ++k) {
    const int degree = k < 9 ? 8 : (k == 9 ? 0 : 4);
    try {
      out.emplace_back(form_from_poly(parse_poly(kPrintedBasis[k]), degree));
    } catch (const std::invalid_argument&) {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

const std::vector<BinaryForm<Cyc>>& octic_basis() {
  static const std::vector<BinaryForm<Cyc>> basis = [] {
    std::vector<BinaryForm<Cyc>> b;
    for (std::size_t k = 0; k < 9; ++k) {
      std::string text = kPrintedBasis[k];
      for (const auto& e : errata())
        if (e.location == "basis" && e.monomial == kBasisNames[k]) text = e.corrected;
      b.push_back(form_from_poly(parse_poly(text), 8));
    }
    return b;
  }();
  return basis;
}

const std::vector<BinaryForm<Cyc>>& quartic_basis() {
  static const std::vector<BinaryForm<Cyc>> basis = [] {
    std::vector<BinaryForm<Cyc>> b;
    for (std::size_t k = 10; k < kDim; ++k) b.push_back(form_from_poly(parse_poly(kPrintedBasis[k]), 4));
    return b;
  }();
  return basis;
}

const CMatrix& octic_coordinate_map() {
  static const CMatrix m = coordinate_map_for(octic_basis(), 8);
  return m;
}

const CMatrix& quartic_coordinate_map() {
  static const CMatrix m = coordinate_map_for(quartic_basis(), 4);
  return m;
}

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::omega: return "omega";
    case Generator::rho: return "rho";
    case Generator::tau: return "tau";
    case Generator::sigma: return "sigma";
  }
  return "?";
}

GroupElt generator(Generator g) {
  const Cyc i = Cyc::imag_unit();
  switch (g) {
    case Generator::omega: return {0, 1, -1, 0};
    case Generator::rho: return {-i, 0, 0, i};
    case Generator::tau: return {Cyc::zeta(-1), 0, 0, Cyc::zeta(1)};
    case Generator::sigma: {
      const Cyc h = Cyc::sqrt2().inv();
      return {Cyc::zeta(3) * h, Cyc::zeta(7) * h, Cyc::zeta(5) * h, Cyc::zeta(5) * h};
    }
  }
  throw std::invalid_argument("unknown generator");
}

std::vector<GroupMember> enumerate_group(const std::vector<GroupElt>& gens, std::size_t limit) {
  std::vector<GroupMember> out{{GroupElt::identity(), "e"}};
  std::vector<GroupElt> keys{GroupElt::identity().canonical()};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const GroupElt h = out[k].g * gens[j];
      const GroupElt key = h.canonical();
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
      if (out.size() >= limit) throw std::runtime_error("enumerate_group: more than " + std::to_string(limit) + " elements");
      const std::string w = (out[k].word == "e" ? "" : out[k].word + " ") + "g" + std::to_string(j + 1);
      out.push_back({h, w});
      keys.push_back(key);
      queue.push_back(out.size() - 1);
    }
  }
  return out;
}

std::vector<GroupElt> klein_subgroup() {
  const GroupElt w = generator(Generator::omega);
  const GroupElt r = generator(Generator::rho);
  return {GroupElt::identity(), w, r, w * r};
}

const std::vector<std::string>& printed_action_text(Generator g) { return kActionText.at(g); }

CMatrix printed_action(Generator g) {
  const auto& cv = coordinate_vars();
  return linear_rows(kActionText.at(g), std::vector<Var>(cv.begin(), cv.end()));
}

CMatrix induced_action(const GroupElt& g, ActionConvention conv) {
  CMatrix m(kDim, kDim);
  for (std::size_t k = 0; k < kDim; ++k) {
    const Forms<Cyc> f = to_forms(basis_vector(k));
    const Vec15<Cyc> img = from_forms(act(g, f.f8, conv), f.f0, act(g, f.f4, conv));
    for (std::size_t j = 0; j < kDim; ++j) m(j, k) = img[j];
  }
  return m;
}

CMatrix r_action(Generator g) { return linear_rows(kRActionText.at(g), {Var::r1, Var::r2, Var::r3}); }

const std::vector<std::string>& printed_chart_action_text(Generator g) { return kChartActionText.at(g); }

CMatrix chart_action(Generator g) {
  const auto& cv = chart_vars();
  return linear_rows(kChartActionText.at(g), std::vector<Var>(cv.begin(), cv.end()));
}

std::array<int, 3> kappa(Generator g) {
  switch (g) {
    case Generator::tau: return {1, 3, 2};
    case Generator::sigma: return {2, 3, 1};
    default: return {1, 2, 3};
  }
}

std::string_view system_name(System s) {
  switch (s) {
    case System::delta_expansion: return "delta_expansion";
    case System::fixed_locus: return "fixed_locus";
    case System::chart_equations: return "chart_equations";
  }
  return "?";
}

const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> e = build_errata();
  return e;
}

std::vector<Erratum> errata_for(System s) {
  std::vector<Erratum> out;
  for (const auto& e : errata())
    if (e.location == system_name(s)) out.push_back(e);
  return out;
}

std::vector<Poly> printed_q() {
  std::vector<Poly> out;
  for (const auto& t : kPrintedQ) out.push_back(parse_poly(t));
  return out;
}

std::vector<Poly> corrected_q() {
  std::map<Var, Poly> zero_s;
  for (int j = 0; j <= 5; ++j) zero_s.emplace(svar(j), Poly());
  std::vector<Poly> out;
  for (const auto& p : corrected_equations(System::delta_expansion)) out.push_back(p.substitute(zero_s));
  return out;
}

std::vector<Poly> printed_equations(System s) {
  std::vector<Poly> out;
  switch (s) {
    case System::delta_expansion:
      for (std::size_t k = 0; k < 5; ++k) out.push_back(parse_poly(kPrintedQ[k]) + parse_poly(kPrintedQRest[k]));
      break;
    case System::fixed_locus:
      for (std::size_t k = 0; k < 5; ++k) out.push_back(parse_poly(kPrintedQ[k]) + parse_poly(kPrintedFixedRest[k]));
      break;
    case System::chart_equations:
      for (const auto& t : kPrintedChart) out.push_back(parse_poly(t));
      break;
  }
  return out;
}

std::vector<Poly> corrected_equations(System s) {
  if (s == System::fixed_locus) {
    const auto q = corrected_q();
    std::vector<Poly> out;
    for (std::size_t k = 0; k < 5; ++k)
      out.push_back(apply_errata(q[k] + parse_poly(kPrintedFixedRest[k]), s, static_cast<int>(k) + 1));
    return out;
  }
  auto out = printed_equations(s);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = apply_errata(out[k], s, static_cast<int>(k) + 1);
  return out;
}

Poly printed_alpha_quadric() { return parse_poly("24*(5*al1*al3 + i*al2^2 - 13*i*al3^2)"); }

BinaryForm<Cyc> sigma_fixed_quartic() {
  return form_from_poly(parse_poly("2*(z1^4 - z2^4) + 4*(z1^3*z2 + z1*z2^3) + 4*i*(z1^3*z2 - z1*z2^3)"), 4);
}

std::vector<Var> fixed_locus_vars() {
  return {Var::x1, Var::x2, Var::x3, Var::x4, Var::x5, Var::x6, Var::x7, Var::x8, Var::x9, Var::s0, Var::s1, Var::s2};
}

const std::array<Var, 9>& chart_vars() {
  static const std::array<Var, 9> v = {Var::y1, Var::y2, Var::y3, Var::y7, Var::y8, Var::y9, Var::y10, Var::y11, Var::y12};
  return v;
}

Poly chart_equation_factor(int k) {
  switch (k) {
    case 1:
    case 2: return Poly(1);
    case 3: return Poly::var(Var::x1);
    case 4: return Poly::var(Var::x2);
    case 5: return Poly::var(Var::x3);
  }
  throw std::out_of_range("chart equation index");
}

Vec15<Cyc> point_one() { return parse_vector("a0"); }
Vec15<Cyc> point_octic_fixed() { return parse_vector("5*e7 + e9"); }
Vec15<Cyc> point_x0() { return parse_vector("13*i*(5*e7 + e9) + 5*(4*e1 - i*e2 + e3)"); }

std::vector<Vec15<Cyc>> points_l0() {
  return {parse_vector("5*e7 + e9"), parse_vector("5*e7 - e9"), parse_vector("15*e7 + 5*e8 - e9"),
          parse_vector("15*e7 - 5*e8 - e9")};
}

Vec15<Poly> l1_family(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("l1_family: sign must be +-1");
  Vec15<Poly> v(kDim, Poly());
  const Poly a = Poly::var(Var::a).scaled(Cyc(sign));
  const Poly r1 = Poly::var(Var::r1);
  v[xi(1)] = a;
  v[xi(4)] = r1 * a;
  v[xi(7)] = Poly(90) - r1 * r1 * Poly(5);
  v[xi(8)] = r1.scaled(Cyc(-5));
  v[xi(9)] = Poly(6);
  return v;
}

Vec15<Poly> l1_x1_point(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("l1_x1_point: sign must be +-1");
  Vec15<Poly> v(kDim, Poly());
  const Poly r1 = Poly::var(Var::r1);
  v[xi(1)] = Poly(sign);
  v[xi(4)] = r1.scaled(Cyc(sign));
  v[xi(7)] = r1;
  v[xi(8)] = Poly(1);
  return v;
}

Poly l1_family_relation() { return parse_poly("a^2 - 25*(r1^2 - 36)"); }

std::vector<std::vector<Vec15<Cyc>>> module_summands() {
  const std::vector<std::vector<std::string>> texts = {
      {"e1", "e2", "e3"}, {"e4", "e5", "e6"}, {"e8", "7*e7 - e9"}, {"5*e7 + e9"},
      {"a0"},             {"a1", "a2"},       {"a3", "a4", "a5"}};
  std::vector<std::vector<Vec15<Cyc>>> out;
  for (const auto& part : texts) {
    std::vector<Vec15<Cyc>> vs;
    for (const auto& t : part) vs.push_back(parse_vector(t));
    out.push_back(std::move(vs));
  }
  return out;
}

std::vector<Vec15<Cyc>> sigma_fixed_octics() {
  return {parse_vector("5*e7 + e9"), parse_vector("8*e4 - i*e5 - e6"), parse_vector("4*e1 - i*e2 + e3")};
}

std::vector<Cyc> u_prime() { return {0, 0, 0, 0, 0, 0, 1, 0, 0}; }

std::vector<Cyc> u_double_prime_zero() { return {Cyc(make_rat(-5, 4)), 20, -20, 65, 0, 13, 0, 0, 0}; }

std::vector<Cyc> pi_x0_expected() { return u_double_prime_zero(); }

std::vector<std::vector<Cyc>> subspace_n_equations() {
  return {{1, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 1, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 1, 0, 7, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 1, 0, 0}};
}

std::vector<std::vector<Cyc>> subspace_n_basis() {
  return {{0, 0, 0, -7, 0, 1, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 1}};
}

std::vector<Cyc> projective_canonical(std::vector<Cyc> v) {
  for (const auto& c : v) {
    if (c.is_zero()) continue;
    const Cyc inv = c.inv();
    for (auto& d : v) d *= inv;
    return v;
  }
  throw std::invalid_argument("projective_canonical: zero vector is not a point");
}

ChartImage pi_chart(const Vec15<Cyc>& v) {
  if (v.size() != kDim) throw std::invalid_argument("pi_chart: expected 15 coordinates");
  for (int j = 3; j <= 5; ++j)
    if (!v[si(j)].is_zero()) throw std::domain_error("pi_chart: s3, s4, s5 must vanish");
  const Cyc& x1 = v[xi(1)];
  const Cyc& x2 = v[xi(2)];
  const Cyc& x3 = v[xi(3)];
  if (x1.is_zero() || x2.is_zero() || x3.is_zero()) throw std::domain_error("pi_chart: x1 x2 x3 must be nonzero");
  ChartImage out;
  out.r = {v[xi(4)] / x1, v[xi(5)] / x2, v[xi(6)] / x3};
  out.y = projective_canonical(
      {x2 * x3 / x1, x3 * x1 / x2, x1 * x2 / x3, v[xi(7)], v[xi(8)], v[xi(9)], v[si(0)], v[si(1)], v[si(2)]});
  return out;
}

std::vector<Poly> pi_chart_cleared(const Vec15<Poly>& v) {
  const Poly& x1 = v[xi(1)];
  const Poly& x2 = v[xi(2)];
  const Poly& x3 = v[xi(3)];
  const Poly m = x1 * x2 * x3;
  return {x2 * x2 * x3 * x3, x3 * x3 * x1 * x1, x1 * x1 * x2 * x2, m * v[xi(7)], m * v[xi(8)],
          m * v[xi(9)],      m * v[si(0)],      m * v[si(1)],      m * v[si(2)]};
}

std::string_view stratum_name(Stratum s) {
  switch (s) {
    case Stratum::L0: return "L0";
    case Stratum::L1: return "L1";
    case Stratum::L2: return "L2";
    case Stratum::L3: return "L3";
    case Stratum::Lt1: return "Lt1";
    case Stratum::Lt2: return "Lt2";
    case Stratum::Lt3: return "Lt3";
    case Stratum::Lzero: return "Lzero";
  }
  return "?";
}

Stratum stratum_from_support(bool n1, bool n2, bool n3) {
  const int code = (n1 ? 1 : 0) | (n2 ? 2 : 0) | (n3 ? 4 : 0);
  switch (code) {
    case 0: return Stratum::L0;
    case 1: return Stratum::L1;
    case 2: return Stratum::L2;
    case 4: return Stratum::L3;
    case 6: return Stratum::Lt1;
    case 5: return Stratum::Lt2;
    case 3: return Stratum::Lt3;
    default: return Stratum::Lzero;
  }
}

bool in_l(const std::array<Cyc, 3>& r, const Vec15<Cyc>& v) {
  for (int j = 1; j <= 3; ++j)
    if (v[xi(j + 3)] != r[static_cast<std::size_t>(j - 1)] * v[xi(j)]) return false;
  return true;
}

bool in_stratum(Stratum s, const std::array<Cyc, 3>& r, const Vec15<Cyc>& v) {
  if (s == Stratum::L0) {
    for (int j = 1; j <= 6; ++j)
      if (!v[xi(j)].is_zero()) return false;
    return true;
  }
  if (!in_l(r, v)) return false;
  return stratum_from_support(!v[xi(1)].is_zero(), !v[xi(2)].is_zero(), !v[xi(3)].is_zero()) == s;
}

std::vector<Poly> l_equations() {
  return {parse_poly("x4 - r1*x1"), parse_poly("x5 - r2*x2"), parse_poly("x6 - r3*x3")};
}

std::vector<Poly> r0_inequations() {
  return {parse_poly("48*r2*r3 - 336*r2 - 336*r3 + 624"), parse_poly("3*r1*r3 + 21*r1 + 42*r3 + 78"),
          parse_poly("-3*r1*r2 - 21*r1 + 42*r2 + 78")};
}

}  // namespace covforge::model
