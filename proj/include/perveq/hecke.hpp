// Specialized cyclotomic Hecke algebras of Z_e: relative degrees, the
// (s,t)/ambiance normal form, the three parameter perturbations, reduction to
// the Coxeter Hecke algebra, and the specialization bijection with the e-th
// roots of unity.
#pragma once

#include "perveq/blocks.hpp"
#include "perveq/cyclo.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace perveq {

struct HeckeParam {
  RootAngle omega;   // root of unity
  Rat v;             // exponent of q
  int char_index;    // index into the originating block's character list
};

struct HeckeParams {
  Int e = 0;
  Int d = 1;  // ambiance
  std::vector<HeckeParam> params;
};

// Parameters of a block: omega from the character, v = -aA/e, shifted so the
// largest positive-parameter exponent is 0.
inline HeckeParams from_block(const Block& b) {
  HeckeParams h;
  h.e = b.e;
  h.d = b.d;
  std::optional<Rat> shift;
  for (size_t i = 0; i < b.chars.size(); ++i) {
    HeckeParam p;
    p.omega = b.chars[i].omega;
    p.v = -aA_char(b, i) / Rat(b.e);
    p.char_index = static_cast<int>(i);
    if (p.omega.is_one() && (!shift || p.v > *shift)) shift = p.v;
    h.params.push_back(std::move(p));
  }
  if (shift)
    for (auto& p : h.params) p.v -= *shift;
  return h;
}

// Relative degree prod_{j != i} u_j / (u_i - u_j), up to a nonzero scalar.
// Requires all pairwise exponent differences to be integers.
inline CycloProduct relative_degree(const HeckeParams& h, size_t i) {
  CycloProduct f;
  for (size_t j = 0; j < h.params.size(); ++j) {
    if (j == i) continue;
    const auto& ui = h.params[i];
    const auto& uj = h.params[j];
    f *= CycloProduct::q_power(uj.v);
    Rat diff = ui.v - uj.v;
    if (diff == Rat(0)) {
      if (ui.omega == uj.omega)
        throw std::domain_error("coincident Hecke parameters");
      // u_i - u_j = (omega_i - omega_j) q^{v}: constant times a monomial
      f = f / CycloProduct::q_power(ui.v);
      continue;
    }
    bool flip = diff < Rat(0);
    Rat m = flip ? -diff : diff;
    if (!is_integer(m))
      throw std::domain_error(
          "relative_degree needs integral exponent differences; clear "
          "denominators first");
    // omega_a q^{v_a} - omega_b q^{v_b} = omega_b q^{v_b} (w q^m - 1) with
    // w = omega_a / omega_b; the roots of w q^m - 1 are the m-th roots of
    // 1/w
    const auto& lo = flip ? ui : uj;
    const auto& hi = flip ? uj : ui;
    RootAngle w(hi.omega.t - lo.omega.t);
    CycloProduct binom = CycloProduct::q_power(lo.v);
    for (Int k = 0; k < m.numerator(); ++k)
      binom *= CycloProduct::root_factor(
          RootAngle((Rat(k) - w.t) / Rat(m.numerator())));
    f = f / binom;
  }
  return f;
}

// Hecke algebra in (s,t) normal form: positive parameters q^{a_1},...,
// q^{a_s} with a_1 > ... > a_s, then negative -q^{b_1},..., -q^{b_t}.
struct TypedHecke {
  Int d = 1;  // ambiance
  std::vector<Rat> a, b;
  std::vector<int> a_char, b_char;  // originating character indices

  Int s() const { return static_cast<Int>(a.size()); }
  Int t() const { return static_cast<Int>(b.size()); }
  Int e() const { return s() + t(); }

  // global shift so that a_1 = 0 (or b_1 = 0 when s = 0)
  void canonicalize() {
    Rat shift = s() > 0 ? a[0] : b[0];
    for (auto& x : a) x -= shift;
    for (auto& x : b) x -= shift;
  }

  bool same_parameters(const TypedHecke& o) const {
    TypedHecke x = *this, y = o;
    x.canonicalize();
    y.canonicalize();
    return x.a == y.a && x.b == y.b;
  }

  HeckeParams to_params() const {
    HeckeParams h;
    h.e = e();
    h.d = d;
    for (size_t i = 0; i < a.size(); ++i)
      h.params.push_back({RootAngle(0, 1), a[i], a_char[i]});
    for (size_t i = 0; i < b.size(); ++i)
      h.params.push_back({RootAngle(1, 2), b[i], b_char[i]});
    return h;
  }

  std::string str() const {
    std::ostringstream os;
    for (size_t i = 0; i < a.size(); ++i)
      os << (i ? " " : "") << "q^" << to_string(a[i]);
    for (size_t i = 0; i < b.size(); ++i)
      os << (a.empty() && i == 0 ? "" : " ") << "-q^" << to_string(b[i]);
    return os.str();
  }
};

// Sorts real-parameter specializations into the (s,t) normal form and checks
// the ambiance condition: at q = e^{2 pi i / d} the parameters must form a
// complete set of e-th roots of unity up to a global rotation.
inline TypedHecke classify_type(const HeckeParams& h) {
  TypedHecke out;
  out.d = h.d;
  for (const auto& p : h.params) {
    if (!p.omega.is_real())
      throw std::domain_error("classify_type needs parameters with omega = "
                              "+-1");
    if (p.omega.is_one()) {
      out.a.push_back(p.v);
      out.a_char.push_back(p.char_index);
    } else {
      out.b.push_back(p.v);
      out.b_char.push_back(p.char_index);
    }
  }
  auto sort_desc = [](std::vector<Rat>& v, std::vector<int>& c) {
    std::vector<size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](size_t x, size_t y) { return v[y] < v[x]; });
    std::vector<Rat> nv;
    std::vector<int> nc;
    for (size_t k : idx) {
      nv.push_back(v[k]);
      nc.push_back(c[k]);
    }
    for (size_t k = 0; k + 1 < nv.size(); ++k)
      if (nv[k] == nv[k + 1])
        throw std::domain_error("coincident parameters within a sign class");
    v = std::move(nv);
    c = std::move(nc);
  };
  sort_desc(out.a, out.a_char);
  sort_desc(out.b, out.b_char);

  // ambiance condition: angles omega + v/d must be e/1-spaced
  std::vector<Rat> angles;
  for (const auto& p : h.params) angles.push_back(frac01(p.omega.t + p.v / Rat(h.d)));
  Int e = static_cast<Int>(angles.size());
  std::optional<Rat> offset;
  std::vector<bool> hit(e, false);
  for (const Rat& t : angles) {
    Rat scaled = frac01(t) * Rat(e);
    if (!offset) offset = frac01(scaled);
    Rat rel = scaled - *offset;
    if (!is_integer(rel))
      throw std::domain_error("ambiance condition fails: specialized "
                              "parameters are not e-th roots up to rotation");
    Int k = ((rel.numerator() % e) + e) % e;
    if (hit[k])
      throw std::domain_error("ambiance condition fails: repeated root");
    hit[k] = true;
  }
  return out;
}

// The Coxeter Hecke algebra of type (s,t) and ambiance d: exponents in
// arithmetic progression with difference eps = d/e and equal sign-class
// means.
inline TypedHecke coxeter(Int s, Int t, Int d) {
  if (s + t < 1) throw std::invalid_argument("coxeter(s,t,d): e >= 1");
  TypedHecke h;
  h.d = d;
  Rat eps = Rat(d) / Rat(s + t);
  for (Int i = 0; i < s; ++i) {
    h.a.push_back(Rat(-i) * eps);
    h.a_char.push_back(static_cast<int>(i));
  }
  for (Int i = 0; i < t; ++i) {
    h.b.push_back(Rat(-(s - t)) * eps / Rat(2) - Rat(i) * eps);
    h.b_char.push_back(static_cast<int>(s + i));
  }
  return h;
}

enum class PerturbKind { Plus, Minus, PlusMinus };

inline std::string str(PerturbKind k) {
  switch (k) {
    case PerturbKind::Plus: return "+";
    case PerturbKind::Minus: return "-";
    default: return "+-";
  }
}

// A perturbation step: the kind, the new algebra, and the permuted
// parameters as positions (chi_1..chi_s = 1..s, psi_1..psi_t = s+1..s+t),
// listed in the canonical circular order in which they cycle.
struct PerturbStep {
  TypedHecke next;
  PerturbKind kind = PerturbKind::Plus;
  std::vector<Int> permuted_positions;
};

// Applies the unique allowed perturbation.  Requires integer exponents
// (clear denominators first) and kappa normalized to 1.
inline PerturbStep perturb(const TypedHecke& h) {
  for (const Rat& x : h.a)
    if (!is_integer(x)) throw std::domain_error("perturb needs integer exponents");
  for (const Rat& x : h.b)
    if (!is_integer(x)) throw std::domain_error("perturb needs integer exponents");

  Int s = h.s(), t = h.t();
  Rat half = Rat(h.d) / Rat(2);
  bool plus_ok = t == 0 || (s > 0 && h.a[s - 1] + half < h.b[t - 1]);
  bool minus_ok = s == 0 || (t > 0 && h.b[t - 1] + half < h.a[s - 1]);

  PerturbStep out;
  out.next = h;
  if (plus_ok) {
    out.kind = PerturbKind::Plus;
    Rat bumped = h.a[s - 1] + Rat(h.d);
    // positions s - alpha .. s cycle
    Int alpha = 0;
    for (Int i = 0; i + 1 < s; ++i)
      if (h.a[i] > h.a[s - 1] && h.a[i] < bumped) ++alpha;
    for (Int p = s - alpha; p <= s; ++p) out.permuted_positions.push_back(p);
    out.next.a[s - 1] = bumped;
    int c = out.next.a_char[s - 1];
    // re-sort the positive class (single rotation into place)
    for (Int i = s - 1; i > 0 && out.next.a[i] > out.next.a[i - 1]; --i) {
      std::swap(out.next.a[i], out.next.a[i - 1]);
      std::swap(out.next.a_char[i], out.next.a_char[i - 1]);
    }
    (void)c;
  } else if (minus_ok) {
    out.kind = PerturbKind::Minus;
    Rat bumped = h.b[t - 1] + Rat(h.d);
    Int beta = 0;
    for (Int i = 0; i + 1 < t; ++i)
      if (h.b[i] > h.b[t - 1] && h.b[i] < bumped) ++beta;
    for (Int p = t - beta; p <= t; ++p) out.permuted_positions.push_back(s + p);
    out.next.b[t - 1] = bumped;
    for (Int i = t - 1; i > 0 && out.next.b[i] > out.next.b[i - 1]; --i) {
      std::swap(out.next.b[i], out.next.b[i - 1]);
      std::swap(out.next.b_char[i], out.next.b_char[i - 1]);
    }
  } else {
    if (h.d % 2 != 0)
      throw std::domain_error("+-type perturbation needs even ambiance");
    out.kind = PerturbKind::PlusMinus;
    Rat na = h.b[t - 1] + half;  // -q^{b_t} becomes +q^{b_t + d/2}
    Rat nb = h.a[s - 1] + half;  // q^{a_s} becomes -q^{a_s + d/2}
    Int alpha = 0, beta = 0;
    for (Int i = 0; i + 1 < s; ++i)
      if (h.a[i] < na) ++alpha;
    for (Int i = 0; i + 1 < t; ++i)
      if (h.b[i] < nb) ++beta;
    for (Int p = s - alpha; p <= s; ++p) out.permuted_positions.push_back(p);
    for (Int p = t - beta; p <= t; ++p) out.permuted_positions.push_back(s + p);
    out.next.a[s - 1] = na;
    out.next.b[t - 1] = nb;
    std::swap(out.next.a_char[s - 1], out.next.b_char[t - 1]);
    for (Int i = s - 1; i > 0 && out.next.a[i] > out.next.a[i - 1]; --i) {
      std::swap(out.next.a[i], out.next.a[i - 1]);
      std::swap(out.next.a_char[i], out.next.a_char[i - 1]);
    }
    for (Int i = t - 1; i > 0 && out.next.b[i] > out.next.b[i - 1]; --i) {
      std::swap(out.next.b[i], out.next.b[i - 1]);
      std::swap(out.next.b_char[i], out.next.b_char[i - 1]);
    }
  }
  return out;
}

struct PerturbationChain {
  std::vector<PerturbStep> steps;  // proper steps only, ending at Coxeter
  TypedHecke endpoint;
  // f(position) = number of steps whose permuted set contains the position
  std::vector<Int> f;  // index 1..e
};

// Iterates perturbations until the parameters stabilize (up to global
// shift); the endpoint is a Coxeter Hecke algebra and the permuted sets are
// nested.
inline PerturbationChain chain_to_coxeter(const TypedHecke& start,
                                          Int cap = 100000) {
  PerturbationChain chain;
  TypedHecke cur = start;
  cur.canonicalize();
  for (Int step = 0;; ++step) {
    if (step > cap) throw std::logic_error("perturbation chain exceeded cap");
    PerturbStep st = perturb(cur);
    st.next.canonicalize();
    if (st.next.same_parameters(cur)) break;
    chain.steps.push_back(st);
    cur = st.next;
  }
  chain.endpoint = cur;
  Int e = start.e();
  chain.f.assign(e + 1, 0);
  for (const auto& st : chain.steps)
    for (Int p : st.permuted_positions) ++chain.f[p];
  return chain;
}

// Exponent scaling by kappa, fraction becomes 1/d (then use
// clear_denominators to reach integer exponents at 1/(N d)).
inline std::pair<HeckeParams, Fraction> reduce_kappa(const HeckeParams& h,
                                                     const Fraction& frac) {
  HeckeParams out = h;
  for (auto& p : out.params) p.v = p.v * Rat(frac.kappa);
  out.d = frac.d;
  return {out, Fraction(1, frac.d)};
}

// Scales exponents by N = lcm of denominators; the fraction denominator is
// multiplied accordingly.
inline std::pair<HeckeParams, Fraction> clear_denominators(
    const HeckeParams& h, const Fraction& frac) {
  Int N = 1;
  for (const auto& p : h.params) N = std::lcm(N, p.v.denominator());
  HeckeParams out = h;
  for (auto& p : out.params) p.v = p.v * Rat(N);
  out.d = h.d * N;
  return {out, Fraction(frac.kappa, frac.d * N)};
}

// Doubles exponents and ambiance when d is odd and negative parameters are
// present, so that later +-type perturbations stay integral.
inline std::pair<HeckeParams, Fraction> ensure_even_ambiance(
    const HeckeParams& h, const Fraction& frac) {
  bool has_negative = false;
  for (const auto& p : h.params)
    if (!p.omega.is_one()) has_negative = true;
  if (h.d % 2 == 0 || !has_negative) return {h, frac};
  HeckeParams out = h;
  for (auto& p : out.params) p.v = p.v * Rat(2);
  out.d = h.d * 2;
  return {out, Fraction(frac.kappa, frac.d * 2)};
}

// The specialization bijection: character i maps to the angle of
// omega_i zeta^{aA_i / e} as an exact rational number of turns.
struct SpecializationBijection {
  std::vector<Rat> angle;       // per character, in [0,1)
  size_t anchor = 0;            // a character of minimal pi
  bool anchor_tied = false;     // sigma_1 / tau_1 tie
  std::vector<int> order;       // characters sorted by angle from the anchor
};

inline SpecializationBijection specialization_bijection(const Block& b,
                                                        const Fraction& frac) {
  SpecializationBijection out;
  Rat z = frac.value();
  std::optional<Int> min_pi;
  for (size_t i = 0; i < b.chars.size(); ++i) {
    Rat ang = frac01(b.chars[i].omega.t + aA_char(b, i) / Rat(b.e) * z);
    out.angle.push_back(ang);
    Int p = pi_char(b, i, frac);
    if (!min_pi || p < *min_pi) {
      min_pi = p;
      out.anchor = i;
      out.anchor_tied = false;
    } else if (p == *min_pi) {
      out.anchor_tied = true;
    }
  }
  // the angles must be the e-th roots up to rotation
  std::vector<std::pair<Rat, int>> sorted;
  for (size_t i = 0; i < out.angle.size(); ++i)
    sorted.push_back({frac01(out.angle[i] - out.angle[out.anchor]),
                      static_cast<int>(i)});
  std::sort(sorted.begin(), sorted.end());
  for (size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k].first != Rat(Int(k), b.e))
      throw std::domain_error(
          "specialized parameters do not form the e-th roots of unity");
    out.order.push_back(sorted[k].second);
  }
  return out;
}

}  // namespace perveq
