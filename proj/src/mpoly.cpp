#include "covforge/mpoly.hpp"

#include <cctype>

namespace covforge {
namespace {

constexpr std::array<std::string_view, kNumVars> kNames = {
    "x1",  "x2",  "x3",  "x4",  "x5",  "x6",  "x7",  "x8",  "x9",  "s0",  "s1",  "s2",  "s3",
    "s4",  "s5",  "eps", "r1",  "r2",  "r3",  "y1",  "y2",  "y3",  "y7",  "y8",  "y9",  "y10",
    "y11", "y12", "al1", "al2", "al3", "mu0", "mu4", "mu8", "a",   "t",   "w1",  "w2",  "w3",  "z1",  "z2",
};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(d.constant_term().inv());
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly(Cyc(Rat(mpz_class(std::string(s_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name == "i") return Poly(Cyc::imag_unit());
      if (name == "zeta") return Poly(Cyc::zeta(1));
      if (name == "epsilon") return Poly::var(Var::eps);
      if (auto v = var_from_name(name)) return Poly::var(*v);
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view var_name(Var v) { return kNames[index(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t k = 0; k < kNumVars; ++k) {
    if (kNames[k] == name) return static_cast<Var>(k);
  }
  return std::nullopt;
}

Var xvar(int i) {
  if (i < 1 || i > 9) throw std::out_of_range("x index");
  return static_cast<Var>(index(Var::x1) + static_cast<std::size_t>(i - 1));
}

Var svar(int i) {
  if (i < 0 || i > 5) throw std::out_of_range("s index");
  return static_cast<Var>(index(Var::s0) + static_cast<std::size_t>(i));
}

Var rvar(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("r index");
  return static_cast<Var>(index(Var::r1) + static_cast<std::size_t>(i - 1));
}

Var yvar(int i) {
  if (i >= 1 && i <= 3) return static_cast<Var>(index(Var::y1) + static_cast<std::size_t>(i - 1));
  if (i >= 7 && i <= 12) return static_cast<Var>(index(Var::y7) + static_cast<std::size_t>(i - 7));
  throw std::out_of_range("y index");
}

Var alvar(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("alpha index");
  return static_cast<Var>(index(Var::al1) + static_cast<std::size_t>(i - 1));
}

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto k : e) d += k;
  return d;
}

std::string monomial_string(const Exponents& e) {
  std::string out;
  for (std::size_t k = 0; k < kNumVars; ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += kNames[k];
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out;
}

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

QPoly to_rational(const Poly& p) {
  QPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_rational()) throw std::invalid_argument("to_rational: coefficient " + c.to_string() + " is not rational");
    r.add_term(e, c[0]);
  }
  return r;
}

Poly to_cyc(const QPoly& p) {
  Poly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, Cyc(c));
  return r;
}

}  // namespace covforge
