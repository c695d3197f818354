// Partitions, beta-sets and symbols, with the abacus moves (hooks, cores,
// cohooks, cocores) that drive block distribution for classical groups.
#pragma once

#include "perveq/rational.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace perveq {

// Weakly decreasing positive parts.
struct Partition {
  std::vector<Int> parts;

  Partition() = default;
  explicit Partition(std::vector<Int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0 || (i + 1 < parts.size() && parts[i] < parts[i + 1]))
        throw std::invalid_argument("not a partition");
    }
  }

  Int size() const {
    Int s = 0;
    for (Int p : parts) s += p;
    return s;
  }

  bool operator==(const Partition&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts.size(); ++i)
      os << (i ? "," : "") << parts[i];
    os << ']';
    return os.str();
  }
};

// Strictly decreasing list of non-negative integers x_1 > ... > x_a >= 0.
struct BetaSet {
  std::vector<Int> elems;  // decreasing

  BetaSet() = default;
  explicit BetaSet(std::vector<Int> x) : elems(std::move(x)) {
    std::sort(elems.begin(), elems.end(), std::greater<>());
    for (size_t i = 0; i + 1 < elems.size(); ++i)
      if (elems[i] == elems[i + 1])
        throw std::invalid_argument("beta-set has a repeated entry");
    if (!elems.empty() && elems.back() < 0)
      throw std::invalid_argument("beta-set entry negative");
  }

  Int size() const { return static_cast<Int>(elems.size()); }
  bool contains(Int x) const {
    return std::binary_search(elems.begin(), elems.end(), x, std::greater<>());
  }

  Int rank() const {
    Int a = size(), s = 0;
    for (Int x : elems) s += x;
    return s - a * (a - 1) / 2;
  }

  // The equivalent set {0} u {x+1 : x in X}.
  BetaSet shifted(Int k = 1) const {
    BetaSet y;
    for (Int x : elems) y.elems.push_back(x + k);
    for (Int j = k - 1; j >= 0; --j) y.elems.push_back(j);
    return y;
  }

  // Smallest equivalent representative (no bead at 0 unless empty).
  BetaSet normalized() const {
    BetaSet y = *this;
    while (!y.elems.empty() && y.elems.back() == 0) {
      y.elems.pop_back();
      for (Int& x : y.elems) --x;
    }
    return y;
  }

  bool operator==(const BetaSet&) const = default;
  auto operator<=>(const BetaSet&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < elems.size(); ++i)
      os << (i ? "," : "") << elems[i];
    os << '}';
    return os.str();
  }
};

// First-column hook lengths x_i = lambda_i + length - i.
inline BetaSet beta_of(const Partition& p, Int length) {
  if (length < static_cast<Int>(p.parts.size()))
    throw std::invalid_argument("beta_of: length smaller than #parts");
  BetaSet x;
  for (Int i = 1; i <= length; ++i) {
    Int part = i <= static_cast<Int>(p.parts.size()) ? p.parts[i - 1] : 0;
    x.elems.push_back(part + length - i);
  }
  return x;
}

inline Partition partition_of(const BetaSet& x) {
  Partition p;
  Int a = x.size();
  for (Int i = 1; i <= a; ++i) {
    Int part = x.elems[i - 1] - (a - i);
    if (part > 0) p.parts.push_back(part);
  }
  return p;
}

// Replace elem by elem + t; the leg length is the number of beads jumped.
inline std::pair<BetaSet, Int> add_hook(const BetaSet& x, Int elem, Int t) {
  if (t < 1) throw std::invalid_argument("hook length must be positive");
  if (!x.contains(elem))
    throw std::invalid_argument("add_hook: element not in beta-set");
  if (x.contains(elem + t))
    throw std::invalid_argument("add_hook: target position occupied");
  Int leg = 0;
  BetaSet y;
  for (Int e : x.elems) {
    if (e > elem && e < elem + t) ++leg;
    y.elems.push_back(e == elem ? elem + t : e);
  }
  std::sort(y.elems.begin(), y.elems.end(), std::greater<>());
  return {y, leg};
}

inline std::pair<BetaSet, Int> remove_hook(const BetaSet& x, Int elem, Int t) {
  if (t < 1) throw std::invalid_argument("hook length must be positive");
  if (!x.contains(elem) || elem - t < 0 || x.contains(elem - t))
    throw std::invalid_argument("remove_hook: invalid move");
  Int leg = 0;
  BetaSet y;
  for (Int e : x.elems) {
    if (e > elem - t && e < elem) ++leg;
    y.elems.push_back(e == elem ? elem - t : e);
  }
  std::sort(y.elems.begin(), y.elems.end(), std::greater<>());
  return {y, leg};
}

// Push all beads on the t-abacus as far up as possible.
inline BetaSet t_core(const BetaSet& x, Int t) {
  if (t < 1) throw std::invalid_argument("core length must be positive");
  std::vector<Int> runner_count(t, 0);
  for (Int e : x.elems) ++runner_count[e % t];
  BetaSet y;
  for (Int r = 0; r < t; ++r)
    for (Int j = 0; j < runner_count[r]; ++j) y.elems.push_back(r + j * t);
  std::sort(y.elems.begin(), y.elems.end(), std::greater<>());
  return y;
}

inline bool is_t_core(const BetaSet& x, Int t) {
  for (Int e : x.elems)
    if (e - t >= 0 && !x.contains(e - t)) return false;
  return true;
}

// The beads x with x + t not in X, after shifting so that every runner of the
// t-abacus is occupied (exactly t of them), in decreasing order.
inline std::pair<BetaSet, std::vector<Int>> addable_hooks(const BetaSet& x,
                                                          Int t) {
  BetaSet y = x;
  auto runners_full = [&](const BetaSet& b) {
    std::vector<bool> seen(t, false);
    for (Int e : b.elems) seen[e % t] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool v) { return v; });
  };
  while (!runners_full(y)) y = y.shifted();
  std::vector<Int> ends;
  for (Int e : y.elems)
    if (!y.contains(e + t)) ends.push_back(e);
  return {y, ends};  // ends inherit the decreasing order of y
}

// Unordered pair of beta-sets; stored with the canonically larger row first.
struct Symbol {
  BetaSet first, second;
  // Distinguishes the two characters attached to a degenerate symbol.  Unused
  // for weight-1 blocks (a degenerate symbol cannot have weight 1).
  int degenerate_tag = 0;

  Symbol() = default;
  Symbol(BetaSet a, BetaSet b) : first(std::move(a)), second(std::move(b)) {
    // canonical row order: more entries first, ties broken lexicographically
    if (first.size() < second.size() ||
        (first.size() == second.size() && first.elems < second.elems))
      std::swap(first, second);
  }

  Int defect() const { return first.size() - second.size(); }

  Int rank() const {
    Int s = 0;
    for (Int x : first.elems) s += x;
    for (Int y : second.elems) s += y;
    Int ab = first.size() + second.size();
    return s - ((ab - 1) * (ab - 1)) / 4;
  }

  bool degenerate() const { return first.elems == second.elems; }

  Symbol shifted(Int k = 1) const {
    return Symbol(first.shifted(k), second.shifted(k));
  }

  bool operator==(const Symbol& o) const {
    return first == o.first && second == o.second &&
           degenerate_tag == o.degenerate_tag;
  }
  auto operator<=>(const Symbol& o) const = default;

  std::string str() const { return "{" + first.str() + "," + second.str() + "}"; }
};

// Adds t to an element of the given row and transfers it to the other row.
// side = 0 moves from `first`, side = 1 from `second`.
inline Symbol add_cohook(const Symbol& s, int side, Int elem, Int t) {
  const BetaSet& from = side == 0 ? s.first : s.second;
  const BetaSet& to = side == 0 ? s.second : s.first;
  if (!from.contains(elem))
    throw std::invalid_argument("add_cohook: element not in chosen row");
  if (to.contains(elem + t))
    throw std::invalid_argument("add_cohook: target occupied in other row");
  BetaSet nfrom, nto = to;
  for (Int e : from.elems)
    if (e != elem) nfrom.elems.push_back(e);
  nto.elems.push_back(elem + t);
  std::sort(nto.elems.begin(), nto.elems.end(), std::greater<>());
  return Symbol(nfrom, nto);
}

inline bool has_removable_cohook(const Symbol& s, Int t) {
  for (Int e : s.first.elems)
    if (e >= t && !s.second.contains(e - t)) return true;
  for (Int e : s.second.elems)
    if (e >= t && !s.first.contains(e - t)) return true;
  return false;
}

// Removes all t-cohooks; the result does not depend on the removal order.
inline Symbol t_cocore(const Symbol& s, Int t) {
  Symbol cur = s;
  for (;;) {
    bool moved = false;
    for (int side = 0; side < 2 && !moved; ++side) {
      const BetaSet& from = side == 0 ? cur.first : cur.second;
      const BetaSet& to = side == 0 ? cur.second : cur.first;
      for (Int e : from.elems) {
        if (e >= t && !to.contains(e - t)) {
          BetaSet nfrom, nto = to;
          for (Int x : from.elems)
            if (x != e) nfrom.elems.push_back(x);
          nto.elems.push_back(e - t);
          std::sort(nto.elems.begin(), nto.elems.end(), std::greater<>());
          cur = side == 0 ? Symbol(nfrom, nto) : Symbol(nto, nfrom);
          moved = true;
          break;
        }
      }
    }
    if (!moved) return cur;
  }
}

// Simultaneous-shift-minimal representative.
inline Symbol normalized(const Symbol& s) {
  Symbol cur = s;
  while (!cur.first.elems.empty() && !cur.second.elems.empty() &&
         cur.first.elems.back() == 0 && cur.second.elems.back() == 0) {
    BetaSet a, b;
    for (Int x : cur.first.elems)
      if (x != 0) a.elems.push_back(x - 1);
    for (Int y : cur.second.elems)
      if (y != 0) b.elems.push_back(y - 1);
    cur = Symbol(std::move(a), std::move(b));
  }
  return cur;
}

}  // namespace perveq
