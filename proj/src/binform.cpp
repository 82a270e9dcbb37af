#include "covforge/binform.hpp"

namespace covforge {
namespace {

// Dense univariate polynomials over a field, lowest degree first.
template <class K>
using UPoly = std::vector<K>;

template <class K>
void trim(UPoly<K>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class K>
UPoly<K> uderiv(const UPoly<K>& p) {
  UPoly<K> r;
  for (std::size_t k = 1; k < p.size(); ++k) r.push_back(p[k] * K(static_cast<long>(k)));
  trim(r);
  return r;
}

template <class K>
UPoly<K> urem(UPoly<K> a, const UPoly<K>& b) {
  trim(a);
  const K lead_inv = field_inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    const K f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

template <class K>
UPoly<K> ugcd(UPoly<K> a, UPoly<K> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly<K> r = urem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <class K>
int max_mult_impl(const BinaryForm<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("max_root_multiplicity: zero form");
  const int d = f.degree();
  // Dehomogenize at z2 = 1: g(w) = sum_k c_k w^(d-k).
  UPoly<K> g(static_cast<std::size_t>(d) + 1, K(0));
  for (int k = 0; k <= d; ++k) g[static_cast<std::size_t>(d - k)] = f.coeff(k);
  trim(g);
  // Root (1:0) has multiplicity d - deg g.
  int best = d - (static_cast<int>(g.size()) - 1);
  // A root of multiplicity m is a common root of g, g', ..., g^(m-1).
  UPoly<K> common = g;
  UPoly<K> der = g;
  int m = 1;
  while (common.size() > 1) {
    best = std::max(best, m);
    der = uderiv(der);
    if (der.empty()) break;
    common = ugcd(common, der);
    ++m;
  }
  return best;
}

}  // namespace

BinaryForm<Cyc> form_from_poly(const Poly& p, int degree) {
  BinaryForm<Cyc> f(degree);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t k = 0; k < kNumVars; ++k) {
      if (e[k] != 0 && k != index(Var::z1) && k != index(Var::z2))
        throw std::invalid_argument("form_from_poly: variable other than z1, z2 in " + p.to_string());
    }
    const int a = e[index(Var::z1)];
    const int b = e[index(Var::z2)];
    if (a + b != degree)
      throw std::invalid_argument("form_from_poly: monomial " + monomial_string(e) + " is not of degree " +
                                  std::to_string(degree));
    f.coeff(b) += c;
  }
  return f;
}

Poly form_to_poly(const BinaryForm<Cyc>& f) {
  Poly p;
  for (int k = 0; k <= f.degree(); ++k) {
    Exponents e{};
    e[index(Var::z1)] = static_cast<std::uint8_t>(f.degree() - k);
    e[index(Var::z2)] = static_cast<std::uint8_t>(k);
    p.add_term(e, f.coeff(k));
  }
  return p;
}

long factorial(int n) {
  long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

GroupElt::GroupElt(Cyc a, Cyc b, Cyc c, Cyc d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (det().is_zero()) throw std::domain_error("GroupElt: singular matrix");
}

Cyc GroupElt::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

GroupElt GroupElt::inverse() const {
  const Cyc di = det().inv();
  return {m_[3] * di, -m_[1] * di, -m_[2] * di, m_[0] * di};
}

GroupElt GroupElt::canonical() const {
  for (const auto& e : m_) {
    if (!e.is_zero()) return scaled(e.inv());
  }
  throw std::logic_error("GroupElt: zero matrix");
}

bool GroupElt::equal_mod_scalars(const GroupElt& o) const { return canonical() == o.canonical(); }

GroupElt operator*(const GroupElt& a, const GroupElt& b) {
  return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2], a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
          a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2], a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
}

std::string GroupElt::to_string() const {
  return "[[" + m_[0].to_string() + ", " + m_[1].to_string() + "], [" + m_[2].to_string() + ", " +
         m_[3].to_string() + "]]";
}

std::string_view convention_name(ActionConvention c) {
  switch (c) {
    case ActionConvention::InverseSubstitution: return "f -> f o g^-1";
    case ActionConvention::DirectSubstitution: return "f -> f o g";
    case ActionConvention::TransposeSubstitution: return "f -> f o g^T";
  }
  return "?";
}

GroupElt substitution_matrix(const GroupElt& g, ActionConvention conv) {
  switch (conv) {
    case ActionConvention::InverseSubstitution: return g.inverse();
    case ActionConvention::DirectSubstitution: return g;
    case ActionConvention::TransposeSubstitution: return g.transpose();
  }
  throw std::invalid_argument("unknown action convention");
}

int max_root_multiplicity(const BinaryForm<Cyc>& f) { return max_mult_impl(f); }
int max_root_multiplicity(const BinaryForm<Rat>& f) { return max_mult_impl(f); }
bool has_distinct_roots(const BinaryForm<Cyc>& f) { return max_mult_impl(f) <= 1; }
bool has_distinct_roots(const BinaryForm<Rat>& f) { return max_mult_impl(f) <= 1; }

}  // namespace covforge
