// The constants of the construction, transcribed once: the basis of
// V(8) + V(0) + V(4), the group generators and their printed action tables,
// the printed equation systems together with the erratum ledger, the chart
// map to R x P^8, distinguished points, and the strata of L(r).
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covforge/binform.hpp"
#include "covforge/exlinalg.hpp"
#include "covforge/mpoly.hpp"
#include "covforge/scalar.hpp"

namespace covforge::model {

// ---------------------------------------------------------------------------
// Coordinates (x1..x9, s0..s5) on V(8) + V(0) + V(4).

inline constexpr std::size_t kDim = 15;
template <class K>
using Vec15 = std::vector<K>;

constexpr std::size_t xi(int i) { return static_cast<std::size_t>(i - 1); }
constexpr std::size_t si(int i) { return static_cast<std::size_t>(9 + i); }

/// x1..x9, s0..s5 in coordinate order.
const std::array<Var, kDim>& coordinate_vars();
/// The generic point whose coordinates are the indeterminates themselves.
Vec15<Poly> symbolic_point();
Vec15<Cyc> basis_vector(std::size_t k);
/// Parses "5*e7 + e9 - i*a0" style combinations of the named basis vectors.
Vec15<Cyc> parse_vector(std::string_view text);
std::string vector_to_string(const Vec15<Cyc>& v);

/// e1..e9 (degree 8) and a1..a5 (degree 4); a0 is the constant 1.
const std::vector<BinaryForm<Cyc>>& octic_basis();
const std::vector<BinaryForm<Cyc>>& quartic_basis();
/// The basis texts as printed, before the ledger is applied.
const std::vector<std::string>& printed_basis_text();
/// The forms obtained from the printed texts; e5 fails to parse as an octic,
/// so its slot holds nullopt.
std::vector<std::optional<BinaryForm<Cyc>>> printed_basis_forms();

/// Maps form coefficients to basis coordinates.
const CMatrix& octic_coordinate_map();
const CMatrix& quartic_coordinate_map();

template <class K>
std::vector<K> apply_exact(const CMatrix& m, const std::vector<K>& v) {
  std::vector<K> out(m.rows(), K(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero() || covforge::is_zero(v[j])) continue;
      out[i] += v[j] * from_cyc<K>(m(i, j));
    }
  return out;
}

template <class K>
struct Forms {
  BinaryForm<K> f8;
  K f0;
  BinaryForm<K> f4;
};

template <class K>
Forms<K> to_forms(const Vec15<K>& v) {
  if (v.size() != kDim) throw std::invalid_argument("to_forms: expected 15 coordinates");
  Forms<K> out{BinaryForm<K>(8), v[si(0)], BinaryForm<K>(4)};
  const auto& e = octic_basis();
  const auto& a = quartic_basis();
  for (int i = 1; i <= 9; ++i) {
    if (covforge::is_zero(v[xi(i)])) continue;
    for (int k = 0; k <= 8; ++k)
      if (!e[static_cast<std::size_t>(i - 1)].coeff(k).is_zero())
        out.f8.coeff(k) += v[xi(i)] * from_cyc<K>(e[static_cast<std::size_t>(i - 1)].coeff(k));
  }
  for (int j = 1; j <= 5; ++j) {
    if (covforge::is_zero(v[si(j)])) continue;
    for (int k = 0; k <= 4; ++k)
      if (!a[static_cast<std::size_t>(j - 1)].coeff(k).is_zero())
        out.f4.coeff(k) += v[si(j)] * from_cyc<K>(a[static_cast<std::size_t>(j - 1)].coeff(k));
  }
  return out;
}

template <class K>
Vec15<K> from_forms(const BinaryForm<K>& f8, const K& f0, const BinaryForm<K>& f4) {
  const auto x = apply_exact(octic_coordinate_map(), f8.coeffs());
  const auto s = apply_exact(quartic_coordinate_map(), f4.coeffs());
  Vec15<K> v(x.begin(), x.end());
  v.push_back(f0);
  v.insert(v.end(), s.begin(), s.end());
  return v;
}

// ---------------------------------------------------------------------------
// The group N(H) = <tau, sigma> and H = {e, omega, rho, omega rho}.

enum class Generator { omega, rho, tau, sigma };
inline constexpr std::array<Generator, 4> kGenerators = {Generator::omega, Generator::rho, Generator::tau,
                                                         Generator::sigma};
std::string_view generator_name(Generator g);
/// Determinant-one representative.
GroupElt generator(Generator g);

/// Each element once, as a determinant-one representative, with the word in
/// tau and sigma that produced it.
struct GroupMember {
  GroupElt g;
  std::string word;
};
std::vector<GroupMember> enumerate_group(const std::vector<GroupElt>& gens, std::size_t limit = 1000);
std::vector<GroupElt> klein_subgroup();

/// The rows of the action table as printed: entry j is the new coordinate j.
const std::vector<std::string>& printed_action_text(Generator g);
CMatrix printed_action(Generator g);
/// The 15x15 matrix of the substitution action of g in the basis.
CMatrix induced_action(const GroupElt& g, ActionConvention conv = ActionConvention::InverseSubstitution);

/// Actions on R and on P^8 (chart coordinates y1,y2,y3,y7,...,y12); H acts trivially.
CMatrix r_action(Generator g);
CMatrix chart_action(Generator g);
const std::vector<std::string>& printed_chart_action_text(Generator g);
/// kappa(g) as images of 1, 2, 3.
std::array<int, 3> kappa(Generator g);

// ---------------------------------------------------------------------------
// Equation systems and the erratum ledger.

enum class System {
  delta_expansion,    // Q1..Q5 for lambda = (1, 6 eps, 1, 6)
  fixed_locus,        // the five equations with s3 = s4 = s5 = 0
  chart_equations,    // the five equations on R x P^8
};
std::string_view system_name(System s);

struct Erratum {
  std::string id;
  std::string location;   // system name, "basis" or "proof"
  int equation = 0;       // 1-based, 0 when not an equation entry
  std::string monomial;   // monomial whose coefficient changes, or the item name
  std::string printed;
  std::string corrected;
  std::string reason;
};
const std::vector<Erratum>& errata();
std::vector<Erratum> errata_for(System s);

std::vector<Poly> printed_equations(System s);
std::vector<Poly> corrected_equations(System s);
/// q1..q5, the s-free parts of Q1..Q5.
std::vector<Poly> printed_q();
std::vector<Poly> corrected_q();
/// The printed form of the quadric factor q(alpha) and the sigma-fixed quartic.
Poly printed_alpha_quadric();
BinaryForm<Cyc> sigma_fixed_quartic();

/// Variables of the fixed-locus system: x1..x9, s0, s1, s2.
std::vector<Var> fixed_locus_vars();
/// Chart coordinates in printed order y1,y2,y3,y7,...,y12.
const std::array<Var, 9>& chart_vars();
/// The monomial factor relating chart equation k to the substituted fixed-locus equation.
Poly chart_equation_factor(int k);

// ---------------------------------------------------------------------------
// Distinguished points.

Vec15<Cyc> point_one();             // a0
Vec15<Cyc> point_octic_fixed();     // 5 e7 + e9
Vec15<Cyc> point_x0();              // 13i(5e7 + e9) + 5(4e1 - i e2 + e3)
std::vector<Vec15<Cyc>> points_l0();  // 5e7 +- e9, 15e7 +- 5e8 - e9
/// The two L1 families in Q[r1, a] with a^2 = 25(r1^2 - 36); sign = +-1.
Vec15<Poly> l1_family(int sign);
/// The two X1 points of L1(r): the 6-fold root sits at (1:0) for sign = -1 and at (0:1) for sign = +1.
Vec15<Poly> l1_x1_point(int sign);
Poly l1_family_relation();  // a^2 - 25(r1^2 - 36)
/// The seven summands of V(8) + V(0) + V(4) as an N(H)-module.
std::vector<std::vector<Vec15<Cyc>>> module_summands();
/// A spanning set of the octics fixed by sigma.
std::vector<Vec15<Cyc>> sigma_fixed_octics();
std::vector<Cyc> u_prime();
std::vector<Cyc> u_double_prime_zero();
/// Expected pi(x0): r = 0 and this chart point.
std::vector<Cyc> pi_x0_expected();
/// N = {y1 = y2 = y3 = y7 + 7 y9 = y10 = 0}: its defining forms and a basis.
std::vector<std::vector<Cyc>> subspace_n_equations();
std::vector<std::vector<Cyc>> subspace_n_basis();

// ---------------------------------------------------------------------------
// The chart map pi : PM' -> R x P^8'.

struct ChartImage {
  std::array<Cyc, 3> r;
  std::vector<Cyc> y;  // canonical projective representative
};
/// Throws std::domain_error outside M' (s3 = s4 = s5 = 0, x1 x2 x3 != 0).
ChartImage pi_chart(const Vec15<Cyc>& v);
/// Polynomial representative of the P^8 part (pi scaled by x1 x2 x3).
std::vector<Poly> pi_chart_cleared(const Vec15<Poly>& v);

/// Scales the first nonzero coordinate to 1.
std::vector<Cyc> projective_canonical(std::vector<Cyc> v);

// ---------------------------------------------------------------------------
// Strata of L(r).

enum class Stratum { L0, L1, L2, L3, Lt1, Lt2, Lt3, Lzero };
inline constexpr std::array<Stratum, 8> kStrata = {Stratum::L0,  Stratum::L1,  Stratum::L2,  Stratum::L3,
                                                   Stratum::Lt1, Stratum::Lt2, Stratum::Lt3, Stratum::Lzero};
std::string_view stratum_name(Stratum s);
/// Stratum of a point of L(r) from which of x1, x2, x3 vanish.
Stratum stratum_from_support(bool x1_nonzero, bool x2_nonzero, bool x3_nonzero);
/// Exact membership: the defining equations and inequations.
bool in_stratum(Stratum s, const std::array<Cyc, 3>& r, const Vec15<Cyc>& v);
bool in_l(const std::array<Cyc, 3>& r, const Vec15<Cyc>& v);
/// The polynomials x4 - r1 x1, x5 - r2 x2, x6 - r3 x3.
std::vector<Poly> l_equations();
/// The three inequations cutting out R^0 (the linear coefficients of the chart equations).
std::vector<Poly> r0_inequations();

}  // namespace covforge::model
