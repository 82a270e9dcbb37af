// Binary forms, classical transvectants, the PSL2 substitution action and the
// quadratic equivariant map delta_lambda : V(8) + V(0) + V(4) -> V(4).
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "covforge/mpoly.hpp"
#include "covforge/scalar.hpp"

namespace covforge {

template <class K>
K from_cyc(const Cyc& c) {
  if constexpr (std::is_same_v<K, Rat>) {
    if (!c.is_rational()) throw std::invalid_argument("from_cyc: value " + c.to_string() + " is not rational");
    return c[0];
  } else if constexpr (std::is_same_v<K, Cyc>) {
    return c;
  } else {
    return K(c);
  }
}

template <class K>
K from_rat(const Rat& q) {
  return from_cyc<K>(Cyc(q));
}

/// Element of V(d): coefficient k multiplies z1^(d-k) z2^k.
template <class K>
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(0) {}
  explicit BinaryForm(int degree) : degree_(degree), c_(static_cast<std::size_t>(degree) + 1, K(0)) {
    if (degree < 0) throw std::invalid_argument("negative form degree");
  }
  BinaryForm(int degree, std::vector<K> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1)
      throw std::invalid_argument("coefficient count does not match form degree");
  }

  /// z1^(d-k) z2^k.
  static BinaryForm monomial(int degree, int k, const K& c = K(1)) {
    BinaryForm f(degree);
    f.c_.at(static_cast<std::size_t>(k)) = c;
    return f;
  }

  int degree() const { return degree_; }
  const K& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
  K& coeff(int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<K>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!covforge::is_zero(c)) return false;
    return true;
  }

  BinaryForm& operator+=(const BinaryForm& o) {
    check_same_degree(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  BinaryForm& operator-=(const BinaryForm& o) {
    check_same_degree(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  BinaryForm operator-() const {
    BinaryForm r(degree_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
    return r;
  }

  BinaryForm scaled(const K& s) const {
    BinaryForm r(degree_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] * s;
    return r;
  }

  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
    BinaryForm r(f.degree_ + g.degree_);
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
      if (covforge::is_zero(f.c_[i])) continue;
      for (std::size_t j = 0; j < g.c_.size(); ++j) {
        if (covforge::is_zero(g.c_[j])) continue;
        r.c_[i + j] += f.c_[i] * g.c_[j];
      }
    }
    return r;
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
  }

  /// d^a/dz1^a d^b/dz2^b.
  BinaryForm derivative(int a, int b) const {
    if (a < 0 || b < 0) throw std::invalid_argument("negative derivative order");
    if (a + b > degree_) return BinaryForm(0);
    BinaryForm r(degree_ - a - b);
    for (int k = b; k <= degree_ - a; ++k) {
      const int p1 = degree_ - k;
      const long f = falling(p1, a) * falling(k, b);
      r.c_[static_cast<std::size_t>(k - b)] = c_[static_cast<std::size_t>(k)] * from_rat<K>(Rat(f));
    }
    return r;
  }

  /// f(u, v) for a point of the projective line over Q(zeta8).
  K evaluate(const Cyc& u, const Cyc& v) const {
    K acc(0);
    for (int k = 0; k <= degree_; ++k) {
      const auto& c = c_[static_cast<std::size_t>(k)];
      if (covforge::is_zero(c)) continue;
      Cyc m(1);
      for (int j = 0; j < degree_ - k; ++j) m *= u;
      for (int j = 0; j < k; ++j) m *= v;
      if (m.is_zero()) continue;
      acc += c * from_cyc<K>(m);
    }
    return acc;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using L = decltype(f(std::declval<const K&>()));
    std::vector<L> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return BinaryForm<L>(degree_, std::move(out));
  }

  std::string to_string() const {
    std::string out;
    for (int k = 0; k <= degree_; ++k) {
      const auto& c = c_[static_cast<std::size_t>(k)];
      if (covforge::is_zero(c)) continue;
      if (!out.empty()) out += " + ";
      out += "(" + covforge::to_string(c) + ")";
      if (degree_ - k > 0) out += "*z1^" + std::to_string(degree_ - k);
      if (k > 0) out += "*z2^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static long falling(int n, int k) {
    long r = 1;
    for (int j = 0; j < k; ++j) r *= (n - j);
    return r;
  }
  void check_same_degree(const BinaryForm& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("form degree mismatch");
  }

  int degree_;
  std::vector<K> c_;
};

/// Converts a homogeneous polynomial in z1, z2 (no other variables) to a form.
BinaryForm<Cyc> form_from_poly(const Poly& p, int degree);
Poly form_to_poly(const BinaryForm<Cyc>& f);

template <class K>
BinaryForm<Cyc> to_cyc_form(const BinaryForm<K>& f) {
  return f.map_coeffs([](const K& c) { return Cyc(c); });
}
template <class K>
BinaryForm<Poly> to_poly_form(const BinaryForm<K>& f) {
  return f.map_coeffs([](const K& c) { return Poly(Cyc(c)); });
}

long binomial(int n, int k);
long factorial(int n);

/// Classical Omega-process transvectant
///   ((m-i)!(n-i)!/(m!n!)) sum_k (-1)^k C(i,k) d^i f/dz1^(i-k) dz2^k * d^i g/dz1^k dz2^(i-k).
template <class K>
BinaryForm<K> transvectant_classical(const BinaryForm<K>& f, const BinaryForm<K>& g, int i) {
  const int m = f.degree();
  const int n = g.degree();
  if (i < 0 || i > std::min(m, n)) throw std::out_of_range("transvectant index out of range");
  BinaryForm<K> acc(m + n - 2 * i);
  for (int k = 0; k <= i; ++k) {
    BinaryForm<K> term = f.derivative(i - k, k) * g.derivative(k, i - k);
    const long c = binomial(i, k) * ((k % 2 == 0) ? 1 : -1);
    acc += term.scaled(from_rat<K>(Rat(c)));
  }
  Rat pref(factorial(m - i) * factorial(n - i), factorial(m) * factorial(n));
  pref.canonicalize();
  return acc.scaled(from_rat<K>(pref));
}

/// 2x2 matrix over Q(zeta8) with nonzero determinant, compared modulo scalars.
class GroupElt {
 public:
  GroupElt(Cyc a, Cyc b, Cyc c, Cyc d);
  static GroupElt identity() { return {1, 0, 0, 1}; }

  const Cyc& operator()(int r, int c) const { return m_[static_cast<std::size_t>(2 * r + c)]; }
  Cyc det() const;
  GroupElt inverse() const;
  GroupElt transpose() const { return {m_[0], m_[2], m_[1], m_[3]}; }
  GroupElt scaled(const Cyc& s) const { return {m_[0] * s, m_[1] * s, m_[2] * s, m_[3] * s}; }
  /// Representative whose first nonzero entry is 1.
  GroupElt canonical() const;
  bool equal_mod_scalars(const GroupElt& o) const;
  bool is_identity_mod_scalars() const { return equal_mod_scalars(identity()); }

  friend GroupElt operator*(const GroupElt& a, const GroupElt& b);
  friend bool operator==(const GroupElt& a, const GroupElt& b) { return a.m_ == b.m_; }
  std::string to_string() const;

 private:
  std::array<Cyc, 4> m_;
};

/// How a matrix acts on forms by substitution of the variables.
enum class ActionConvention {
  InverseSubstitution,    // f -> f o g^{-1}
  DirectSubstitution,     // f -> f o g
  TransposeSubstitution,  // f -> f o g^T
};
std::string_view convention_name(ActionConvention c);
inline constexpr std::array<ActionConvention, 3> kAllConventions = {
    ActionConvention::InverseSubstitution, ActionConvention::DirectSubstitution,
    ActionConvention::TransposeSubstitution};

/// The substitution matrix m used by act(): f(z) -> f(m z).
GroupElt substitution_matrix(const GroupElt& g, ActionConvention conv);

template <class K>
BinaryForm<K> act(const GroupElt& g, const BinaryForm<K>& f,
                  ActionConvention conv = ActionConvention::InverseSubstitution) {
  static_assert(!std::is_same_v<K, Rat>, "act() needs Q(zeta8) coefficients; convert with to_cyc_form");
  if (g.det().is_zero()) throw std::domain_error("act: singular matrix");
  const GroupElt m = substitution_matrix(g, conv);
  const int d = f.degree();
  // Powers of the linear forms m00 z1 + m01 z2 and m10 z1 + m11 z2.
  std::vector<BinaryForm<Cyc>> p1{BinaryForm<Cyc>(0, {Cyc(1)})};
  std::vector<BinaryForm<Cyc>> p2{BinaryForm<Cyc>(0, {Cyc(1)})};
  const BinaryForm<Cyc> l1(1, {m(0, 0), m(0, 1)});
  const BinaryForm<Cyc> l2(1, {m(1, 0), m(1, 1)});
  for (int j = 1; j <= d; ++j) {
    p1.push_back(p1.back() * l1);
    p2.push_back(p2.back() * l2);
  }
  BinaryForm<K> r(d);
  for (int k = 0; k <= d; ++k) {
    const K& c = f.coeff(k);
    if (covforge::is_zero(c)) continue;
    const BinaryForm<Cyc> basis = p1[static_cast<std::size_t>(d - k)] * p2[static_cast<std::size_t>(k)];
    for (int j = 0; j <= d; ++j) {
      const Cyc& b = basis.coeff(j);
      if (b.is_zero()) continue;
      r.coeff(j) += c * from_cyc<K>(b);
    }
  }
  return r;
}

template <class K>
struct Lambda {
  K l0, l2, l4, l6;
};

/// Per-index scale factors relating the transvectant in delta to the
/// classical one: psi_i = s_i * psi_i^cl.
struct TransvectantScalars {
  Rat s6 = 1, s4 = 1, s2 = 1;
};

/// lambda6 psi6(f8,f8) + lambda4 psi4(f8,f4) + lambda2 psi2(f4,f4) + lambda0 f4 f0.
template <class K>
BinaryForm<K> delta(const Lambda<K>& lambda, const BinaryForm<K>& f8, const K& f0, const BinaryForm<K>& f4,
                    const TransvectantScalars& s) {
  if (f8.degree() != 8 || f4.degree() != 4) throw std::invalid_argument("delta: expected forms of degree 8 and 4");
  BinaryForm<K> r = transvectant_classical(f8, f8, 6).scaled(lambda.l6 * from_rat<K>(s.s6));
  r += transvectant_classical(f8, f4, 4).scaled(lambda.l4 * from_rat<K>(s.s4));
  r += transvectant_classical(f4, f4, 2).scaled(lambda.l2 * from_rat<K>(s.s2));
  r += f4.scaled(lambda.l0 * f0);
  return r;
}

/// Multiplicity of the point (u:v) as a root of f: the least m such that some
/// m-th order partial derivative is nonzero at (u, v). Works over polynomial
/// coefficients, where it is the multiplicity for generic parameter values.
template <class K>
int root_multiplicity(const BinaryForm<K>& f, const Cyc& u, const Cyc& v) {
  if (f.is_zero()) throw std::invalid_argument("root_multiplicity: zero form");
  if (u.is_zero() && v.is_zero()) throw std::invalid_argument("root_multiplicity: (0:0) is not a point");
  for (int m = 0; m <= f.degree(); ++m) {
    for (int j = 0; j <= m; ++j) {
      if (!covforge::is_zero(f.derivative(m - j, j).evaluate(u, v))) return m;
    }
  }
  return f.degree();
}

/// Largest root multiplicity over the algebraic closure (exact, field coefficients).
int max_root_multiplicity(const BinaryForm<Cyc>& f);
int max_root_multiplicity(const BinaryForm<Rat>& f);
bool has_distinct_roots(const BinaryForm<Cyc>& f);
bool has_distinct_roots(const BinaryForm<Rat>& f);

}  // namespace covforge
