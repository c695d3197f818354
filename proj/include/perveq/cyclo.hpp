// Exact arithmetic on products  c * q^a * prod (q - e^{2 pi i t})^m  whose
// roots are roots of unity, together with the argument-counting functions
// a, A, phi and pi evaluated at a fraction kappa/d.
//
// Multiplicities may be negative, so formal quotients of such products stay
// in the same type; there is deliberately no addition.
#pragma once

#include "perveq/rational.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace perveq {

// The root of unity e^{2 pi i t}, stored as the reduced rational t in [0,1).
struct RootAngle {
  Rat t;

  RootAngle() : t(0) {}
  explicit RootAngle(const Rat& angle) : t(frac01(angle)) {}
  RootAngle(Int num, Int den) : t(frac01(Rat(num, den))) {}

  // Image of the root under q -> -q.
  RootAngle negated() const { return RootAngle(t + Rat(1, 2)); }
  RootAngle conj() const { return RootAngle(-t); }
  bool is_one() const { return t == Rat(0); }
  bool is_real() const { return t == Rat(0) || t == Rat(1, 2); }

  bool operator<(const RootAngle& o) const { return t < o.t; }
  bool operator==(const RootAngle& o) const { return t == o.t; }
};

// A coprime fraction kappa/d with kappa >= 0, d >= 1.
struct Fraction {
  Int kappa = 1;
  Int d = 1;

  Fraction() = default;
  Fraction(Int k, Int den) : kappa(k), d(den) {
    if (den < 1 || k < 0) throw std::invalid_argument("fraction out of range");
    if (std::gcd(k == 0 ? 1 : k, den) != 1)
      throw std::invalid_argument("fraction not reduced: " + std::to_string(k) +
                                  "/" + std::to_string(den));
  }
  Rat value() const { return Rat(kappa, d); }
  std::string str() const {
    return std::to_string(kappa) + "/" + std::to_string(d);
  }
};

// |Arg_{kappa/d}(e^{2 pi i t})|: the number of arguments 2 pi (t + j), j >= 0,
// that are positive and at most 2 pi kappa / d.  For t = 0 only strictly
// positive arguments count; the j = 0 term is handled separately by phi.
inline Int arg_count(const RootAngle& root, const Fraction& frac) {
  Rat x = frac.value();
  if (root.t == Rat(0)) return rfloor(x);
  if (x < root.t) return 0;
  return rfloor(x - root.t) + 1;
}

class CycloProduct {
 public:
  CycloProduct() = default;

  static CycloProduct one() { return CycloProduct(); }

  static CycloProduct q_power(const Rat& e) {
    CycloProduct f;
    f.q_exp_ = e;
    return f;
  }

  static CycloProduct scalar(const Rat& c, int sqrt2 = 0, int sqrt3 = 0) {
    if (c == Rat(0)) throw std::invalid_argument("zero scalar");
    CycloProduct f;
    f.coeff_ = c;
    f.sqrt2_ = sqrt2;
    f.sqrt3_ = sqrt3;
    return f;
  }

  // (q - e^{2 pi i t})^mult
  static CycloProduct root_factor(const RootAngle& r, Int mult = 1) {
    CycloProduct f;
    if (mult != 0) f.roots_[r] = mult;
    return f;
  }

  // Phi_n(q)^mult expanded into its primitive root angles.
  static CycloProduct cyclotomic(Int n, Int mult = 1) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    CycloProduct f;
    if (mult == 0) return f;
    for (Int k = 0; k < n; ++k)
      if (std::gcd(k == 0 ? n : k, n) == 1) f.roots_[RootAngle(k, n)] = mult;
    return f;
  }

  // The factors of Phi_8, Phi_12, Phi_24 over Z[sqrt 2] resp. Z[sqrt 3].
  // The double-primed factor is the one vanishing at e^{2 pi i / n}.
  static CycloProduct cyclotomic_primed(Int n, bool double_primed,
                                        Int mult = 1) {
    static const std::map<Int, std::vector<Int>> primed = {
        {8, {3, 5}}, {12, {5, 7}}, {24, {5, 11, 13, 19}}};
    static const std::map<Int, std::vector<Int>> dprimed = {
        {8, {1, 7}}, {12, {1, 11}}, {24, {1, 7, 17, 23}}};
    const auto& table = double_primed ? dprimed : primed;
    auto it = table.find(n);
    if (it == table.end())
      throw std::invalid_argument("no primed factor of Phi_" +
                                  std::to_string(n));
    CycloProduct f;
    if (mult == 0) return f;
    for (Int k : it->second) f.roots_[RootAngle(k, n)] = mult;
    return f;
  }

  // q^m - 1 for m >= 1.
  static CycloProduct q_pow_minus_one(Int m) {
    if (m < 1) throw std::invalid_argument("q^m - 1 needs m >= 1");
    CycloProduct f;
    for (Int k = 0; k < m; ++k) f.roots_[RootAngle(k, m)] = 1;
    return f;
  }

  // q^m + 1; for m = 0 this is the constant 2.
  static CycloProduct q_pow_plus_one(Int m) {
    if (m < 0) throw std::invalid_argument("q^m + 1 needs m >= 0");
    if (m == 0) return scalar(Rat(2));
    CycloProduct f;
    for (Int k = 0; k < m; ++k) f.roots_[RootAngle(2 * k + 1, 2 * m)] = 1;
    return f;
  }

  // q^i - q^j, i != j.
  static CycloProduct q_diff(Int i, Int j) {
    if (i == j) throw std::invalid_argument("q^i - q^j vanishes for i = j");
    Rat sign(1);
    if (i < j) {
      std::swap(i, j);
      sign = Rat(-1);
    }
    CycloProduct f = q_pow_minus_one(i - j) * q_power(Rat(j));
    f.coeff_ *= sign;
    return f;
  }

  // q^i + q^j.
  static CycloProduct q_sum(Int i, Int j) {
    if (i < j) std::swap(i, j);
    return q_pow_plus_one(i - j) * q_power(Rat(j));
  }

  const Rat& coeff() const { return coeff_; }
  int sqrt2_exp() const { return sqrt2_; }
  int sqrt3_exp() const { return sqrt3_; }
  const Rat& q_exp() const { return q_exp_; }
  const std::map<RootAngle, Int>& roots() const { return roots_; }

  Int root_mult(const RootAngle& r) const {
    auto it = roots_.find(r);
    return it == roots_.end() ? 0 : it->second;
  }

  CycloProduct& operator*=(const CycloProduct& g) {
    coeff_ *= g.coeff_;
    sqrt2_ += g.sqrt2_;
    sqrt3_ += g.sqrt3_;
    q_exp_ += g.q_exp_;
    for (const auto& [r, m] : g.roots_) {
      Int nm = root_mult(r) + m;
      if (nm == 0)
        roots_.erase(r);
      else
        roots_[r] = nm;
    }
    return *this;
  }

  CycloProduct operator*(const CycloProduct& g) const {
    CycloProduct f = *this;
    f *= g;
    return f;
  }

  CycloProduct inverse() const {
    CycloProduct f;
    f.coeff_ = Rat(1) / coeff_;
    f.sqrt2_ = -sqrt2_;
    f.sqrt3_ = -sqrt3_;
    f.q_exp_ = -q_exp_;
    for (const auto& [r, m] : roots_) f.roots_[r] = -m;
    return f;
  }

  CycloProduct operator/(const CycloProduct& g) const {
    return *this * g.inverse();
  }

  CycloProduct pow(Int n) const {
    CycloProduct f = one();
    CycloProduct base = n > 0 ? *this : inverse();
    Int k = n > 0 ? n : -n;
    for (Int i = 0; i < k; ++i) f *= base;
    return f;
  }

  // g with g(q) = +- f(-q): all root angles shift by 1/2, the scalar keeps
  // the sign of f (character-degree convention).
  CycloProduct negate_q() const {
    CycloProduct f;
    f.coeff_ = coeff_;
    f.sqrt2_ = sqrt2_;
    f.sqrt3_ = sqrt3_;
    f.q_exp_ = q_exp_;
    for (const auto& [r, m] : roots_) f.roots_[r.negated()] = m;
    return f;
  }

  // f(q^N): every root acquires its N preimages, exponents scale by N.
  CycloProduct substitute_power(Int N) const {
    if (N < 1) throw std::invalid_argument("substitute_power needs N >= 1");
    CycloProduct f;
    f.coeff_ = coeff_;
    f.sqrt2_ = sqrt2_;
    f.sqrt3_ = sqrt3_;
    f.q_exp_ = q_exp_ * Rat(N);
    for (const auto& [r, m] : roots_)
      for (Int j = 0; j < N; ++j)
        f.roots_[RootAngle((r.t + Rat(j)) / Rat(N))] += m;
    for (auto it = f.roots_.begin(); it != f.roots_.end();)
      it = it->second == 0 ? f.roots_.erase(it) : std::next(it);
    return f;
  }

  // Multiplicity of 0 as a root (Lusztig a-function on degrees).
  Rat a_value() const { return q_exp_; }

  // Degree as a polynomial (Lusztig A-function on degrees).
  Rat A_value() const {
    Int total = 0;
    for (const auto& [r, m] : roots_) total += m;
    return q_exp_ + Rat(total);
  }

  Rat aA_value() const { return a_value() + A_value(); }

  // Sum over roots of |Arg_{kappa/d}| plus half the multiplicity of 1.
  Rat phi(const Fraction& frac) const {
    Rat total(0);
    for (const auto& [r, m] : roots_) total += Rat(m * arg_count(r, frac));
    total += Rat(root_mult(RootAngle(Rat(0))), 2);
    return total;
  }

  // pi_{kappa/d}(f) = (a + A) kappa/d + phi_{kappa/d}(f).
  Rat pi(const Fraction& frac) const {
    return aA_value() * frac.value() + phi(frac);
  }

  // True if the multiset of roots is closed under conjugation (the value of
  // a real polynomial, up to the scalar).
  bool conjugation_closed() const {
    for (const auto& [r, m] : roots_)
      if (root_mult(r.conj()) != m) return false;
    return true;
  }

  bool is_polynomial() const {
    if (!is_integer(q_exp_) || q_exp_ < Rat(0)) return false;
    for (const auto& [r, m] : roots_)
      if (m < 0) return false;
    return true;
  }

  bool vanishes_at(const RootAngle& z) const { return root_mult(z) != 0; }

  // arg(f(zeta)) / pi modulo 2, computed exactly factor by factor, where
  // zeta = e^{2 pi i kappa / d}.  Requires f(zeta) != 0.  Only meaningful as
  // a parity statement when the root multiset is conjugation closed.
  Rat arg_mod2(const Fraction& frac) const {
    RootAngle zeta{frac.value()};
    if (vanishes_at(zeta))
      throw std::domain_error("arg_mod2: product vanishes at e^{2 pi i " +
                              frac.str() + "}");
    // arg(zeta - omega) = arg(omega) + arg(zeta/omega)/2 + pi/2  (mod 2 pi)
    Rat half_turns = q_exp_ * Rat(2) * frac.value();
    for (const auto& [r, m] : roots_) {
      Rat term = Rat(2) * r.t + frac01(frac.value() - r.t) + Rat(1, 2);
      half_turns += Rat(m) * term;
    }
    if (coeff_ < Rat(0)) half_turns += Rat(1);
    return rat_mod(half_turns, Rat(2));
  }

  bool same_shape(const CycloProduct& g) const {
    return q_exp_ == g.q_exp_ && roots_ == g.roots_;
  }

  bool operator==(const CycloProduct& g) const {
    return coeff_ == g.coeff_ && sqrt2_ == g.sqrt2_ && sqrt3_ == g.sqrt3_ &&
           same_shape(g);
  }

 private:
  Rat coeff_{1};
  int sqrt2_ = 0;  // exponent of sqrt(2) in the scalar
  int sqrt3_ = 0;  // exponent of sqrt(3) in the scalar
  Rat q_exp_{0};
  std::map<RootAngle, Int> roots_;
};

inline Rat pi_value(const CycloProduct& f, const Fraction& frac) {
  return f.pi(frac);
}

// pi(f) - pi(g); integral when f, g are a unipotent degree and the degree of
// its cuspidal pair.
inline Rat pi_rel(const CycloProduct& f, const CycloProduct& g,
                  const Fraction& frac) {
  return f.pi(frac) - g.pi(frac);
}

}  // namespace perveq
