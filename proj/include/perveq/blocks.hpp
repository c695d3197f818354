// Unipotent character degrees for the classical series, distribution into
// weight-1 blocks by cores/cocores, and the associated Brauer trees.
#pragma once

#include "perveq/brauer_tree.hpp"
#include "perveq/cyclo.hpp"
#include "perveq/partition.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace perveq {

enum class FamilyKind { GL, GU, BC, D, TwoD, Exceptional };

struct GroupFamily {
  FamilyKind kind = FamilyKind::GL;
  std::string name;  // used for exceptional families, e.g. "2F4"

  static GroupFamily parse(const std::string& s) {
    if (s == "GL") return {FamilyKind::GL, "GL"};
    if (s == "GU") return {FamilyKind::GU, "GU"};
    if (s == "BC" || s == "B" || s == "C") return {FamilyKind::BC, "BC"};
    if (s == "D") return {FamilyKind::D, "D"};
    if (s == "2D" || s == "TwoD") return {FamilyKind::TwoD, "2D"};
    return {FamilyKind::Exceptional, s};
  }
  bool classical() const { return kind != FamilyKind::Exceptional; }
  std::string str() const {
    switch (kind) {
      case FamilyKind::GL: return "GL";
      case FamilyKind::GU: return "GU";
      case FamilyKind::BC: return "BC";
      case FamilyKind::D: return "D";
      case FamilyKind::TwoD: return "2D";
      default: return name;
    }
  }
};

using CharLabel = std::variant<Partition, Symbol, std::string>;

inline std::string label_str(const CharLabel& l) {
  if (std::holds_alternative<Partition>(l))
    return std::get<Partition>(l).str();
  if (std::holds_alternative<Symbol>(l)) return std::get<Symbol>(l).str();
  return std::get<std::string>(l);
}

struct UnipotentCharacter {
  CharLabel label;
  std::string name;
  CycloProduct degree;
  RootAngle omega;        // root of unity of the Hecke parameter
  int side = +1;          // +1 sigma branch, -1 tau branch (classical)
};

struct Block {
  GroupFamily family;
  std::string d_label;        // e.g. "3", "8'", "24''"
  Int d = 1;                  // denominator of the fractions kappa/d
  Int e = 1;                  // number of unipotent characters in the block
  CycloProduct cuspidal;      // degree of the cuspidal pair character
  std::string cuspidal_name;
  std::vector<UnipotentCharacter> chars;
  BrauerTree tree;
  std::vector<int> vertex_of_char;  // character index -> tree vertex
  bool conjectural = false;
  std::string source;
  // for data-file blocks: the listed pi columns
  std::vector<Int> kappa_cols;
  std::vector<std::vector<Int>> pi_table;  // [char][column]

  Fraction fraction(Int kappa) const { return Fraction(kappa, d); }
};

// ---------------------------------------------------------------------------
// Generic degrees, equations by family.

namespace degree_detail {

// prod_{i<j} (q^{x_i} - q^{x_j}) over a decreasing beta-set
inline CycloProduct vandermonde(const BetaSet& x) {
  CycloProduct f;
  for (size_t i = 0; i < x.elems.size(); ++i)
    for (size_t j = i + 1; j < x.elems.size(); ++j)
      f *= CycloProduct::q_diff(x.elems[i], x.elems[j]);
  return f;
}

// prod_{i,j} (q^{x_i} + q^{y_j})
inline CycloProduct cross_plus(const BetaSet& x, const BetaSet& y) {
  CycloProduct f;
  for (Int a : x.elems)
    for (Int b : y.elems) f *= CycloProduct::q_sum(a, b);
  return f;
}

// q^{binom(a-1,2) + binom(a-2,2) + ...}
inline Int staircase_exponent(Int a, Int step) {
  Int total = 0;
  for (Int k = a - step; k >= 2; k -= step) total += k * (k - 1) / 2;
  return total;
}

// prod_{i=1}^{x} (q^{mj} - 1) over j = 1..x, with m = 1 or 2
inline CycloProduct hook_denominator(const BetaSet& x, Int m) {
  CycloProduct f;
  for (Int e : x.elems)
    for (Int j = 1; j <= e; ++j) f *= CycloProduct::q_pow_minus_one(m * j);
  return f;
}

inline CycloProduct ones_product(Int from, Int to, Int m) {
  CycloProduct f;
  for (Int i = from; i <= to; ++i) f *= CycloProduct::q_pow_minus_one(m * i);
  return f;
}

}  // namespace degree_detail

// Degree of the GL_n unipotent character labelled by a partition.
inline CycloProduct degree_gl(const Partition& p) {
  using namespace degree_detail;
  BetaSet x = beta_of(p, std::max<Int>(1, p.parts.size()));
  Int n = p.size();
  CycloProduct num = ones_product(1, n, 1) * vandermonde(x);
  Int a = x.size();
  CycloProduct den = CycloProduct::q_power(Rat(staircase_exponent(a, 1))) *
                     hook_denominator(x, 1);
  return num / den;
}

// GU degrees replace q by -q, with the sign fixed to keep the degree positive.
inline CycloProduct degree_gu(const Partition& p) {
  return degree_gl(p).negate_q();
}

// B_n / C_n degrees from a symbol of odd defect; D_n (defect 0 mod 4) and
// 2D_n (defect 2 mod 4) differ in the leading (q^n -+ 1) factor and the
// power of 2.
inline CycloProduct degree_symbol(FamilyKind kind, const Symbol& s) {
  using namespace degree_detail;
  Int defect = s.defect();
  switch (kind) {
    case FamilyKind::BC:
      if (defect % 2 == 0)
        throw std::invalid_argument("BC labels need odd defect");
      break;
    case FamilyKind::D:
      if (defect % 4 != 0)
        throw std::invalid_argument("D labels need defect 0 mod 4");
      break;
    case FamilyKind::TwoD:
      if (defect % 4 != 2)
        throw std::invalid_argument("2D labels need defect 2 mod 4");
      break;
    default:
      throw std::invalid_argument("degree_symbol: not a symbol family");
  }
  const BetaSet& x = s.first;
  const BetaSet& y = s.second;
  Int n = s.rank();
  Int a = x.size(), b = y.size();

  CycloProduct num = vandermonde(x) * vandermonde(y) * cross_plus(x, y);
  Int twos;
  if (kind == FamilyKind::BC) {
    num *= ones_product(1, n, 2);
    twos = (a + b - 1) / 2;
  } else {
    num *= ones_product(1, n - 1, 2);
    if (kind == FamilyKind::D) {
      if (n >= 1) num *= CycloProduct::q_pow_minus_one(n);
      twos = s.degenerate() ? a : (a + b - 1) / 2;
    } else {
      num *= CycloProduct::q_pow_plus_one(n);
      twos = (a + b - 2) / 2;
    }
  }
  CycloProduct den =
      CycloProduct::scalar(Rat(Int(1) << twos)) *
      CycloProduct::q_power(Rat(staircase_exponent(a + b, 2))) *
      hook_denominator(x, 2) * hook_denominator(y, 2);
  return num / den;
}

inline CycloProduct degree(const GroupFamily& fam, const CharLabel& label) {
  switch (fam.kind) {
    case FamilyKind::GL:
      return degree_gl(std::get<Partition>(label));
    case FamilyKind::GU:
      return degree_gu(std::get<Partition>(label));
    case FamilyKind::BC:
    case FamilyKind::D:
    case FamilyKind::TwoD:
      return degree_symbol(fam.kind, std::get<Symbol>(label));
    default:
      throw std::invalid_argument("no degree formula for exceptional labels");
  }
}

// Number of unipotent characters in a weight-1 block with non-degenerate
// core; for GU it is the multiplicative order of -q given that of q.
inline Int e_of(Int d, const GroupFamily& fam) {
  switch (fam.kind) {
    case FamilyKind::GL:
      return d;
    case FamilyKind::GU:
      if (d % 4 == 0) return d;
      return d % 2 == 1 ? 2 * d : d / 2;
    case FamilyKind::BC:
    case FamilyKind::D:
    case FamilyKind::TwoD:
      return d % 2 == 1 ? 2 * d : d;
    default:
      throw std::invalid_argument("e_of: data-defined for exceptional blocks");
  }
}

// Hook (d odd) or cohook (d even) length governing block distribution.
inline Int hook_length(Int d, const GroupFamily& fam) {
  switch (fam.kind) {
    case FamilyKind::GL:
      return d;
    case FamilyKind::GU:
      return e_of(d, fam);
    case FamilyKind::BC:
    case FamilyKind::D:
    case FamilyKind::TwoD:
      return d % 2 == 1 ? d : d / 2;
    default:
      throw std::invalid_argument("hook_length: exceptional");
  }
}

// ---------------------------------------------------------------------------
// Weight-1 block construction (classical series).

namespace block_detail {

// X' = {x in X : x + t not in Y}, i.e. the cohook-addable positions.
inline std::vector<Int> cohook_ends(const BetaSet& x, const BetaSet& y,
                                    Int t) {
  std::vector<Int> out;
  for (Int e : x.elems)
    if (!y.contains(e + t)) out.push_back(e);
  return out;
}

}  // namespace block_detail

// Builds the weight-1 block of the given classical family over a core
// (a partition for GL/GU, a symbol for BC/D/2D).  The core must have no
// addable-hook obstruction: a d-core for d odd (e-core for GU), a
// d/2-cocore for d even.
inline Block block_members(const GroupFamily& fam, const CharLabel& core,
                           Int d) {
  Block b;
  b.family = fam;
  b.d = d;
  b.d_label = std::to_string(d);

  if (fam.kind == FamilyKind::GL || fam.kind == FamilyKind::GU) {
    const Partition& lam = std::get<Partition>(core);
    Int t = hook_length(d, fam);
    BetaSet base = beta_of(lam, std::max<Int>(1, lam.parts.size()));
    if (!is_t_core(base, t))
      throw std::invalid_argument("core is not a " + std::to_string(t) +
                                  "-core");
    auto [x, ends] = addable_hooks(base, t);
    b.cuspidal = degree(fam, core);
    b.cuspidal_name = lam.str();
    if (fam.kind == FamilyKind::GL) {
      // chi_j adds the hook at the j-th largest end
      for (Int e : ends) {
        Partition mu = partition_of(add_hook(x, e, t).first);
        UnipotentCharacter c;
        c.label = mu;
        c.name = mu.str();
        c.degree = degree(fam, c.label);
        c.side = +1;
        c.omega = RootAngle(0, 1);
        b.chars.push_back(std::move(c));
      }
    } else {
      // sigma_i from the even ends, tau_i from the odd ends
      std::vector<Int> evens, odds;
      for (Int e : ends) (e % 2 == 0 ? evens : odds).push_back(e);
      for (Int e : evens) {
        Partition mu = partition_of(add_hook(x, e, t).first);
        UnipotentCharacter c;
        c.label = mu;
        c.name = mu.str();
        c.degree = degree(fam, c.label);
        c.side = +1;
        c.omega = RootAngle(0, 1);
        b.chars.push_back(std::move(c));
      }
      for (Int e : odds) {
        Partition mu = partition_of(add_hook(x, e, t).first);
        UnipotentCharacter c;
        c.label = mu;
        c.name = mu.str();
        c.degree = degree(fam, c.label);
        c.side = -1;
        c.omega = RootAngle(1, 2);
        b.chars.push_back(std::move(c));
      }
    }
  } else {
    const Symbol& core_sym = std::get<Symbol>(core);
    // the core's own family can differ from the block's for even d, since a
    // cohook flips D and 2D
    FamilyKind core_kind;
    Int cd = core_sym.defect() % 4;
    if (cd < 0) cd += 4;
    core_kind = core_sym.defect() % 2 != 0
                    ? FamilyKind::BC
                    : (cd == 0 ? FamilyKind::D : FamilyKind::TwoD);
    if (d % 2 == 1 && core_kind != fam.kind)
      throw std::invalid_argument("core family mismatch for odd d");
    if (d % 2 == 0 && fam.kind != FamilyKind::BC) {
      FamilyKind expect =
          fam.kind == FamilyKind::D ? FamilyKind::TwoD : FamilyKind::D;
      if (core_kind != expect)
        throw std::invalid_argument("core family mismatch for even d");
    }
    b.cuspidal = degree_symbol(core_kind, core_sym);
    b.cuspidal_name = core_sym.str();
    Int t = hook_length(d, fam);

    if (d % 2 == 1) {
      // hooks on each row separately; shift until both rows have all t
      // runners occupied
      Symbol s = core_sym;
      auto full = [&](const BetaSet& z) {
        std::vector<bool> seen(t, false);
        for (Int e : z.elems) seen[e % t] = true;
        return std::all_of(seen.begin(), seen.end(),
                           [](bool v) { return v; });
      };
      while (!full(s.first) || !full(s.second)) s = s.shifted();
      if (!is_t_core(s.first, t) || !is_t_core(s.second, t))
        throw std::invalid_argument("symbol is not a d-core");
      auto ends_of = [&](const BetaSet& z) {
        std::vector<Int> out;
        for (Int e : z.elems)
          if (!z.contains(e + t)) out.push_back(e);
        return out;
      };
      auto push_side = [&](const BetaSet& from_first, int side) {
        auto ends = ends_of(side > 0 ? s.first : s.second);
        for (Int e : ends) {
          Symbol mu = side > 0 ? Symbol(add_hook(s.first, e, t).first, s.second)
                               : Symbol(s.first, add_hook(s.second, e, t).first);
          UnipotentCharacter c;
          c.label = mu;
          c.name = mu.str();
          c.degree = degree_symbol(fam.kind, mu);
          c.side = side;
          c.omega = side > 0 ? RootAngle(0, 1) : RootAngle(1, 2);
          b.chars.push_back(std::move(c));
        }
        (void)from_first;
      };
      push_side(s.first, +1);
      if (!core_sym.degenerate()) push_side(s.second, -1);
    } else {
      // cohooks of length t = d/2: shift until the end-counts stabilize at
      // t + delta and t - delta
      Symbol s = core_sym;
      if (has_removable_cohook(s, t))
        throw std::invalid_argument("symbol is not a d/2-cocore");
      Int delta = s.defect();
      if (delta > t)
        throw std::invalid_argument("cocore defect exceeds the cohook length");
      for (Int guard = 0;; ++guard) {
        auto ex = block_detail::cohook_ends(s.first, s.second, t);
        auto ey = block_detail::cohook_ends(s.second, s.first, t);
        if (static_cast<Int>(ex.size()) == t + delta &&
            static_cast<Int>(ey.size()) == t - delta)
          break;
        if (guard > 4 * t + 64)
          throw std::logic_error("cohook-end counts failed to stabilize");
        s = s.shifted();
      }
      auto ex = block_detail::cohook_ends(s.first, s.second, t);
      auto ey = block_detail::cohook_ends(s.second, s.first, t);
      for (Int e : ex) {
        Symbol mu = add_cohook(s, 0, e, t);
        UnipotentCharacter c;
        c.label = mu;
        c.name = mu.str();
        c.degree = degree_symbol(fam.kind, mu);
        c.side = +1;
        c.omega = RootAngle(0, 1);
        b.chars.push_back(std::move(c));
      }
      if (!core_sym.degenerate())
        for (Int e : ey) {
          Symbol mu = add_cohook(s, 1, e, t);
          UnipotentCharacter c;
          c.label = mu;
          c.name = mu.str();
          c.degree = degree_symbol(fam.kind, mu);
          c.side = -1;
          c.omega = RootAngle(1, 2);
          b.chars.push_back(std::move(c));
        }
    }
  }
  b.e = static_cast<Int>(b.chars.size());
  return b;
}

// The Brauer tree of a classical weight-1 block: a line with the exceptional
// vertex between the sigma and tau branches (at the end when tau is empty),
// with the branch boundaries sigma_1 and tau_1.
inline void classical_tree(Block& b) {
  int s = 0, t = 0;
  for (const auto& c : b.chars) (c.side > 0 ? s : t)++;
  b.tree = BrauerTree::line(s, t, 1);
  // line(): right-side vertices 1..s from the boundary, left-side s+1..s+t,
  // exceptional 0.  sigma_i is the i-th positive character.
  b.vertex_of_char.assign(b.chars.size(), -1);
  int si = 0, ti = 0;
  for (size_t i = 0; i < b.chars.size(); ++i) {
    if (b.chars[i].side > 0)
      b.vertex_of_char[i] = 1 + si++;
    else
      b.vertex_of_char[i] = s + 1 + ti++;
  }
}

// pi_{kappa/d} of a block character relative to the cuspidal-pair degree;
// guaranteed integral, and it is an error if not.
inline Int pi_char(const Block& b, size_t idx, const Fraction& frac) {
  Rat v = pi_rel(b.chars[idx].degree, b.cuspidal, frac);
  if (!is_integer(v))
    throw std::domain_error("pi_rel not integral for " + b.chars[idx].name +
                            " at " + frac.str());
  return v.numerator();
}

inline Rat aA_char(const Block& b, size_t idx) {
  return b.chars[idx].degree.aA_value() - b.cuspidal.aA_value();
}

// Sign (+1/-1) of the real number Deg(chi)/Deg(cuspidal) evaluated at
// e^{2 pi i kappa / d}, via the exact argument computation.
inline int char_parity(const Block& b, size_t idx, const Fraction& frac) {
  CycloProduct quot = b.chars[idx].degree / b.cuspidal;
  Rat arg = quot.arg_mod2(frac);
  if (arg == Rat(0)) return +1;
  if (arg == Rat(1)) return -1;
  throw std::domain_error("quotient is not real at the given root of unity");
}

struct MinimalPiReport {
  bool ok = true;
  std::vector<std::string> failures;
  size_t argmin = 0;
  Int min_pi = 0;
};

// Asserts the minimal-pi law: the minimizer satisfies pi = 2 kappa aA / d and
// a(chi) = a(cuspidal).
inline MinimalPiReport minimal_pi_check(const Block& b, const Fraction& frac) {
  MinimalPiReport rep;
  if (b.chars.empty()) return rep;
  std::vector<Int> pis(b.chars.size());
  for (size_t i = 0; i < b.chars.size(); ++i) pis[i] = pi_char(b, i, frac);
  rep.argmin = std::min_element(pis.begin(), pis.end()) - pis.begin();
  rep.min_pi = pis[rep.argmin];
  for (size_t i = 0; i < b.chars.size(); ++i) {
    if (pis[i] != rep.min_pi) continue;
    Rat want = Rat(2 * frac.kappa) * aA_char(b, i) / Rat(frac.d);
    if (Rat(pis[i]) != want) {
      rep.ok = false;
      rep.failures.push_back(b.chars[i].name + ": pi = " +
                             std::to_string(pis[i]) + " but 2k aA/d = " +
                             to_string(want));
    }
    if (b.chars[i].degree.a_value() != b.cuspidal.a_value()) {
      rep.ok = false;
      rep.failures.push_back(b.chars[i].name + ": a differs from cuspidal a");
    }
  }
  return rep;
}

}  // namespace perveq
