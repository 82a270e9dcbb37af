// Exact scalars: arbitrary-precision rationals and the cyclotomic field Q(zeta_8).
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace covforge {

/// Arbitrary-precision rational. GMP keeps results of arithmetic canonical;
/// values built from a numerator/denominator pair go through make_rat().
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
/// Parses "p", "-p/q". Throws std::invalid_argument on malformed input or q == 0.
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& q);
/// Bit-size heuristic used for pivot selection: bits(num) + bits(den).
std::size_t bit_size(const Rat& q);

/// Element of Q(zeta) with zeta = exp(2 pi i / 8), stored in the power basis
/// {1, zeta, zeta^2, zeta^3} with zeta^4 = -1 applied eagerly.
///
/// i is zeta^2 and sqrt(2) is zeta - zeta^3. Complex conjugation is the field
/// automorphism zeta -> zeta^{-1} = -zeta^3.
class Cyc {
 public:
  Cyc() = default;
  Cyc(const Rat& q) : c_{q, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Cyc(long n) : c_{Rat(n), 0, 0, 0} {}   // NOLINT(google-explicit-constructor)
  Cyc(Rat c0, Rat c1, Rat c2, Rat c3) : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  /// zeta^k for any integer k (reduced mod 8).
  static Cyc zeta(int k = 1);
  static Cyc imag_unit() { return zeta(2); }
  static Cyc sqrt2();

  const Rat& operator[](std::size_t k) const { return c_[k]; }
  const std::array<Rat, 4>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// True when the value lies in Q(i), i.e. the zeta and zeta^3 parts vanish.
  bool is_gaussian() const;

  Cyc conj() const;
  /// Multiplicative inverse via an exact 4x4 solve of (a * x = 1) in the power
  /// basis. Throws std::domain_error on zero.
  Cyc inv() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;
  std::size_t bit_size() const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o) { return *this *= o.inv(); }

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  Cyc operator-() const { return Cyc{-c_[0], -c_[1], -c_[2], -c_[3]}; }

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

 private:
  std::array<Rat, 4> c_{};
};

inline std::complex<double> embed_complex(const Cyc& a) { return a.to_complex(); }
inline std::string to_string(const Cyc& a) { return a.to_string(); }

// Uniform scalar helpers so generic code can treat Rat and Cyc alike.
inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_zero(const Cyc& a) { return a.is_zero(); }
inline std::size_t bit_size(const Cyc& a) { return a.bit_size(); }
inline Rat field_inv(const Rat& q) {
  if (sgn(q) == 0) throw std::domain_error("division by zero rational");
  return Rat(1) / q;
}
inline Cyc field_inv(const Cyc& a) { return a.inv(); }
inline std::complex<double> to_complex(const Rat& q) { return {q.get_d(), 0.0}; }
inline std::complex<double> to_complex(const Cyc& a) { return a.to_complex(); }

}  // namespace covforge
