// Sparse multivariate polynomials over Rat or Cyc with a fixed global variable table.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covforge/scalar.hpp"

namespace covforge {

// The global variable order. Indices into exponent vectors follow this order,
// which is also the lexicographic tie-break used for canonical printing.
enum class Var : std::uint8_t {
  x1, x2, x3, x4, x5, x6, x7, x8, x9,
  s0, s1, s2, s3, s4, s5,
  eps,
  r1, r2, r3,
  y1, y2, y3, y7, y8, y9, y10, y11, y12,
  al1, al2, al3,
  mu0, mu4, mu8,
  a, t, w1, w2, w3, z1, z2,
};
inline constexpr std::size_t kNumVars = static_cast<std::size_t>(Var::z2) + 1;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);
constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

/// x_i for i in 1..9.
Var xvar(int i);
/// s_i for i in 0..5.
Var svar(int i);
/// r_i for i in 1..3.
Var rvar(int i);
/// y_i for the chart labels 1,2,3,7,...,12 (4..6 do not exist).
Var yvar(int i);
/// alpha_i for i in 1..3.
Var alvar(int i);

using Exponents = std::array<std::uint8_t, kNumVars>;

/// Descending graded-lexicographic order: higher total degree first, then the
/// larger exponent in the earliest variable.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0;
    unsigned db = 0;
    for (std::size_t k = 0; k < kNumVars; ++k) {
      da += a[k];
      db += b[k];
    }
    if (da != db) return da > db;
    for (std::size_t k = 0; k < kNumVars; ++k) {
      if (a[k] != b[k]) return a[k] > b[k];
    }
    return false;
  }
};

unsigned total_degree(const Exponents& e);
std::string monomial_string(const Exponents& e);

inline void add_to(Rat& acc, const Rat& v) { acc += v; }
inline void add_to(Cyc& acc, const Cyc& v) { acc += v; }

template <class K>
class MPoly {
 public:
  using Terms = std::map<Exponents, K, GrlexGreater>;

  MPoly() = default;
  MPoly(const K& c) { add_term(Exponents{}, c); }  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(K(c)) {}                   // NOLINT(google-explicit-constructor)

  static MPoly var(Var v) {
    Exponents e{};
    e[index(v)] = 1;
    return monomial(e, K(1));
  }
  static MPoly monomial(const Exponents& e, const K& c) {
    MPoly p;
    p.add_term(e, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  K coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }
  K constant_term() const { return coeff(Exponents{}); }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, static_cast<int>(total_degree(e)));
    return d;
  }
  int degree_in(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[index(v)]);
    return d;
  }
  bool involves(Var v) const { return degree_in(v) > 0; }

  void add_term(const Exponents& e, const K& c) {
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      add_to(it->second, c);
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MPoly& operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
  }
  MPoly operator-() const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t k = 0; k < kNumVars; ++k) {
          const unsigned s = static_cast<unsigned>(ea[k]) + eb[k];
          if (s > 255) throw std::overflow_error("exponent overflow in MPoly product");
          e[k] = static_cast<std::uint8_t>(s);
        }
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly scaled(const K& k) const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
  }

  MPoly pow(unsigned n) const {
    MPoly r(K(1));
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  MPoly diff(Var v) const {
    MPoly r;
    const std::size_t i = index(v);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents f = e;
      f[i] -= 1;
      r.add_term(f, c * K(static_cast<long>(e[i])));
    }
    return r;
  }

  /// Replaces each bound variable by its image; unbound variables stay.
  MPoly substitute(const std::map<Var, MPoly>& bindings) const {
    std::map<std::pair<std::size_t, unsigned>, MPoly> power_cache;
    auto power = [&](std::size_t var_idx, unsigned n) -> const MPoly& {
      auto key = std::make_pair(var_idx, n);
      auto it = power_cache.find(key);
      if (it != power_cache.end()) return it->second;
      const MPoly& base = bindings.at(static_cast<Var>(var_idx));
      return power_cache.emplace(key, base.pow(n)).first->second;
    };
    MPoly r;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      MPoly term;
      bool first = true;
      for (std::size_t k = 0; k < kNumVars; ++k) {
        if (e[k] == 0 || !bindings.count(static_cast<Var>(k))) continue;
        rest[k] = 0;
        const MPoly& pk = power(k, e[k]);
        term = first ? pk : term * pk;
        first = false;
      }
      if (first) {
        r.add_term(e, c);
        continue;
      }
      r += term * monomial(rest, c);
    }
    return r;
  }

  /// Full evaluation; every variable that occurs must be bound.
  K evaluate(const std::map<Var, K>& point) const {
    K acc(0);
    for (const auto& [e, c] : terms_) {
      K term = c;
      for (std::size_t k = 0; k < kNumVars; ++k) {
        if (e[k] == 0) continue;
        auto it = point.find(static_cast<Var>(k));
        if (it == point.end())
          throw std::invalid_argument("evaluate: unbound variable " + std::string(var_name(static_cast<Var>(k))));
        for (unsigned n = 0; n < e[k]; ++n) term = term * it->second;
      }
      add_to(acc, term);
    }
    return acc;
  }

  /// Reduces modulo (v^2 - replacement); the result has degree <= 1 in v.
  MPoly reduce_quadratic(Var v, const MPoly& replacement) const {
    if (replacement.involves(v)) throw std::invalid_argument("reduce_quadratic: replacement involves the reduced variable");
    const std::size_t i = index(v);
    MPoly r;
    std::vector<MPoly> rpow{MPoly(K(1))};
    for (const auto& [e, c] : terms_) {
      const unsigned q = e[i] / 2;
      while (rpow.size() <= q) rpow.push_back(rpow.back() * replacement);
      Exponents f = e;
      f[i] = static_cast<std::uint8_t>(e[i] % 2);
      if (q == 0) {
        r.add_term(f, c);
      } else {
        r += rpow[q] * monomial(f, c);
      }
    }
    return r;
  }

  /// Coefficient of v^n viewed as a polynomial in v over the other variables.
  MPoly coefficient_of(Var v, unsigned n) const {
    MPoly r;
    const std::size_t i = index(v);
    for (const auto& [e, c] : terms_) {
      if (e[i] != n) continue;
      Exponents f = e;
      f[i] = 0;
      r.add_term(f, c);
    }
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using L = decltype(f(std::declval<const K&>()));
    MPoly<L> r;
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string cs = covforge::to_string(c);
      const std::string mono = monomial_string(e);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      if (mono.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += mono;
      } else {
        out += cs + "*" + mono;
      }
    }
    return out;
  }

 private:
  static bool is_zero_scalar(const K& c) { return covforge::is_zero(c); }
  Terms terms_;
};

using Poly = MPoly<Cyc>;
using QPoly = MPoly<Rat>;

template <class K>
std::string to_string(const MPoly<K>& p) {
  return p.to_string();
}
template <class K>
bool is_zero(const MPoly<K>& p) {
  return p.is_zero();
}

/// Parses the textual notation used in reports and transcriptions:
/// integers, '/', '*', '^', '+', '-', parentheses, variable names from the
/// table, 'i' (= zeta^2), 'zeta', and 'eps'. Throws std::invalid_argument.
Poly parse_poly(std::string_view text);

/// Converts to rational coefficients; throws if a coefficient is not rational.
QPoly to_rational(const Poly& p);
Poly to_cyc(const QPoly& p);

inline Poly pvar(Var v) { return Poly::var(v); }

}  // namespace covforge
