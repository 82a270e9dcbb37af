#include "covforge/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace covforge {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  Rat q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::size_t bit_size(const Rat& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

Cyc Cyc::zeta(int k) {
  k %= 8;
  if (k < 0) k += 8;
  Cyc z;
  if (k < 4) {
    z.c_[k] = 1;
  } else {
    z.c_[k - 4] = -1;
  }
  return z;
}

Cyc Cyc::sqrt2() { return Cyc{0, 1, 0, -1}; }

bool Cyc::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool Cyc::is_one() const { return c_[0] == 1 && is_rational(); }

bool Cyc::is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

bool Cyc::is_gaussian() const { return sgn(c_[1]) == 0 && sgn(c_[3]) == 0; }

Cyc Cyc::conj() const { return Cyc{c_[0], -c_[3], -c_[2], -c_[1]}; }

Cyc& Cyc::operator+=(const Cyc& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  std::array<Rat, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      const std::size_t k = i + j;
      if (k < 4) {
        r[k] += c_[i] * o.c_[j];
      } else {
        r[k - 4] -= c_[i] * o.c_[j];
      }
    }
  }
  c_ = std::move(r);
  return *this;
}

Cyc Cyc::inv() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta8)");
  // Column j of the multiplication matrix is this * zeta^j.
  std::array<std::array<Rat, 5>, 4> m{};
  for (int j = 0; j < 4; ++j) {
    const Cyc col = *this * zeta(j);
    for (std::size_t i = 0; i < 4; ++i) m[i][j] = col.c_[i];
  }
  m[0][4] = 1;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    while (piv < 4 && sgn(m[piv][col]) == 0) ++piv;
    if (piv == 4) throw std::logic_error("singular multiplication matrix in Q(zeta8)");
    std::swap(m[piv], m[col]);
    const Rat p = m[col][col];
    for (std::size_t k = col; k < 5; ++k) m[col][k] /= p;
    for (std::size_t row = 0; row < 4; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      const Rat f = m[row][col];
      for (std::size_t k = col; k < 5; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return Cyc{m[0][4], m[1][4], m[2][4], m[3][4]};
}

std::complex<double> Cyc::to_complex() const {
  const double h = std::sqrt(0.5);
  const std::complex<double> z1{h, h};
  const std::complex<double> z3{-h, h};
  return c_[0].get_d() + c_[1].get_d() * z1 + c_[2].get_d() * std::complex<double>{0.0, 1.0} +
         c_[3].get_d() * z3;
}

std::string Cyc::to_string() const {
  static const char* const kBasis[4] = {"", "zeta", "i", "zeta^3"};
  std::ostringstream out;
  int nterms = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    if (sgn(c_[k]) != 0) ++nterms;
  }
  if (nterms == 0) return "0";
  bool first = true;
  for (std::size_t k = 0; k < 4; ++k) {
    const Rat& q = c_[k];
    if (sgn(q) == 0) continue;
    const bool neg = sgn(q) < 0;
    const Rat mag = abs(q);
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << kBasis[k];
    } else {
      out << mag.get_str() << "*" << kBasis[k];
    }
  }
  if (nterms > 1) return "(" + out.str() + ")";
  return out.str();
}

std::size_t Cyc::bit_size() const {
  std::size_t b = 0;
  for (const auto& q : c_)
    if (sgn(q) != 0) b += covforge::bit_size(q);
  return b;
}

}  // namespace covforge
