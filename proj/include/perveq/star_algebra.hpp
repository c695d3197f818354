// The perverse-equivalence algorithm over the Brauer-tree algebra of the
// star, i.e. the group algebra of Z_lbar x| Z_e, run either generically in
// lbar or with explicit dimensions.
//
// Conventions: projective covers are uniserial of dimension lbar; radical
// layers read top-down as T_t, T_{t+1}, ..., T_s with socle T_s, and
// Omega^2(T_i) = T_{i+1} (indices modulo e via representatives 1..e).
#pragma once

#include "perveq/brauer_tree.hpp"
#include "perveq/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace perveq {

// Uniserial module with given socle index and length (0 = zero module).
struct Uniserial {
  int socle = 1;
  Int length = 0;

  bool zero() const { return length == 0; }
  bool operator==(const Uniserial&) const = default;
};

// Socle, top and dimension parity class of a degree-0 term: a uniserial
// module of dimension at most e (even perversity) or at least lbar - e
// (odd perversity) is determined by this triple.
struct GenericGreen {
  int socle = 1;
  int top = 1;
  bool odd = false;
  bool operator==(const GenericGreen&) const = default;
};

struct GenericComplexResult {
  // proj_labels[j] (j = 0..pi-1) is the label of the projective in degree
  // -(pi - j); so proj_labels[0] = i.
  std::vector<int> proj_labels;
  // cohomology[j] = H^{-(pi - j)}(X_i), possibly zero.
  std::vector<Uniserial> cohomology;
  GenericGreen green;
  std::vector<Int> alt_sum;  // index 1..e
  Int pi = 0;
};

namespace star_detail {

inline int norm(Int x, int e) {
  return static_cast<int>(((x - 1) % e + e) % e) + 1;
}

}  // namespace star_detail

// Runs the algorithm generically on (Z_e, pi) with empty relative-projective
// collections.  Results are indexed 1..e.
inline std::vector<GenericComplexResult> run_generic(int e,
                                                     const PerversityFn& pi) {
  using star_detail::norm;
  if (pi.size() != e) throw std::invalid_argument("pi has wrong domain");
  for (int i = 1; i <= e; ++i)
    if (pi[i] < 0) throw std::invalid_argument("pi must be non-negative");

  std::vector<GenericComplexResult> out(e + 1);
  for (int i = 1; i <= e; ++i) {
    GenericComplexResult res;
    res.pi = pi[i];
    res.alt_sum.assign(e + 1, 0);
    if (pi[i] == 0) {
      res.green = {i, i, false};
      res.alt_sum[i] = 1;
      out[i] = std::move(res);
      continue;
    }

    // degree -pi(i): injective hull of T_i, cohomology U(i, r+1)
    res.proj_labels.push_back(i);
    Int r = 0;
    while (r < e - 1 && pi[norm(i - r - 1, e)] < pi[i]) ++r;
    Uniserial h{i, r + 1};
    res.cohomology.push_back(h);
    // L = Omega^{-1}(M): socle s - len, length lbar - len (long, c = len)
    int socle = norm(i - (r + 1), e);
    Int c = r + 1;
    bool lon = true;

    for (Int j = pi[i] - 1; j >= 1; --j) {
      // injective hull of L is P(socle(L))
      res.proj_labels.push_back(socle);
      // extend L upward while the layer above the top has pi < j
      Int top = lon ? norm(socle + c, e) : norm(socle - c + 1, e);
      Int s = 0;
      while (s < e && pi[norm(top - s - 1, e)] < j) ++s;
      if (s == e) throw std::logic_error("extension wrapped the projective");
      if (s == 0)
        res.cohomology.push_back(Uniserial{0, 0});
      else
        res.cohomology.push_back(Uniserial{norm(top - 1, e), s});
      // M = L extended by s layers; L' = Omega^{-1}(M)
      Int mc = lon ? c - s : c + s;
      int msocle = socle;
      // Omega^{-1}(U(s, len)) = U(s - len, lbar - len)
      socle = lon ? norm(msocle + mc - 1, e) : norm(msocle - mc, e);
      c = mc;
      lon = !lon;
    }
    res.green.socle = socle;
    res.green.top = lon ? norm(socle + c, e) : norm(socle - c + 1, e);
    res.green.odd = pi[i] % 2 != 0;

    // alternating sum: factor T_x in H^{-j} contributes (-1)^{j - pi(x)}
    for (size_t idx = 0; idx < res.cohomology.size(); ++idx) {
      Int j = pi[i] - static_cast<Int>(idx);
      const Uniserial& u = res.cohomology[idx];
      for (Int k = 0; k < u.length; ++k) {
        int x = norm(u.socle - k, e);
        res.alt_sum[x] += ((j - pi[x]) % 2 == 0) ? 1 : -1;
      }
    }
    out[i] = std::move(res);
  }
  return out;
}

// Explicit-dimension run over Z_lbar x| Z_e; requires e | lbar - 1.
struct ConcreteModule {
  int socle = 1;
  Int dim = 0;
};

struct ConcreteComplexResult {
  std::vector<int> proj_labels;
  std::vector<ConcreteModule> cohomology;  // explicit H^{-j} top-down
  ConcreteModule green;                    // degree-0 term
  Int pi = 0;
};

inline std::vector<ConcreteComplexResult> run_concrete(Int lbar, int e,
                                                       const PerversityFn& pi) {
  using star_detail::norm;
  if (lbar < 2 || (lbar - 1) % e != 0)
    throw std::invalid_argument("inadmissible lbar: need e | lbar - 1");
  std::vector<ConcreteComplexResult> out(e + 1);
  for (int i = 1; i <= e; ++i) {
    ConcreteComplexResult res;
    res.pi = pi[i];
    if (pi[i] == 0) {
      res.green = {i, 1};
      out[i] = std::move(res);
      continue;
    }
    res.proj_labels.push_back(i);
    Int r = 0;
    while (r < e - 1 && pi[norm(i - r - 1, e)] < pi[i]) ++r;
    res.cohomology.push_back({i, r + 1});
    ConcreteModule L{norm(i - (r + 1), e), lbar - (r + 1)};
    Int mdim = r + 1;
    for (Int j = pi[i] - 1; j >= 1; --j) {
      res.proj_labels.push_back(L.socle);
      Int top = norm(L.socle - L.dim + 1, e);
      Int s = 0;
      while (s < e && L.dim + s < lbar && pi[norm(top - s - 1, e)] < j) ++s;
      if (s == e) throw std::logic_error("extension wrapped the projective");
      res.cohomology.push_back(s == 0 ? ConcreteModule{0, 0}
                                      : ConcreteModule{norm(top - 1, e), s});
      mdim = L.dim + s;
      // dim(L_j) + dim(M_j) = lbar at every step
      ConcreteModule M{L.socle, mdim};
      L = {norm(M.socle - M.dim, e), lbar - M.dim};
      if (L.dim + M.dim != lbar) throw std::logic_error("dimension bookkeeping");
    }
    res.green = L;
    out[i] = std::move(res);
  }
  return out;
}

// The virtual module given by the signed composition factors of the
// cohomology of one complex.
inline std::vector<Int> alternating_sum(const GenericComplexResult& r,
                                        const PerversityFn&) {
  return r.alt_sum;
}

// True iff no T_x with x in I occurs in the cohomology of a complex X_i with
// i outside I.
inline bool is_cohomologically_closed(
    const std::set<int>& I, const std::vector<GenericComplexResult>& results) {
  int e = static_cast<int>(results.size()) - 1;
  for (int i = 1; i <= e; ++i) {
    if (I.count(i)) continue;
    for (const auto& u : results[i].cohomology)
      for (Int k = 0; k < u.length; ++k) {
        int x = star_detail::norm(u.socle - k, e);
        if (I.count(x)) return false;
      }
  }
  return true;
}

// pi'(rho(i)) = pi(i) + 2 on a cohomologically closed set I (rho cycles the
// sorted elements of I), pi' = pi elsewhere.
inline std::pair<PerversityFn, std::vector<int>> shift_pi(
    const PerversityFn& pi, const std::vector<int>& I_sorted) {
  int e = pi.size();
  std::vector<int> rho(e + 1);
  std::iota(rho.begin(), rho.end(), 0);
  int m = static_cast<int>(I_sorted.size());
  for (int k = 0; k < m; ++k) rho[I_sorted[k]] = I_sorted[(k + 1) % m];
  PerversityFn np(e);
  for (int i = 1; i <= e; ++i) np[i] = pi[i];
  for (int i : I_sorted) np[rho[i]] = pi[i] + 2;
  return {np, rho};
}

// Verifies that rho witnesses algorithmic equivalence of piA and piB: the
// generic Green correspondents of T_i under piA and of T_{rho(i)} under piB
// are the same module, the alternating sums agree once the simple labels are
// identified along rho, and the parities match.
inline bool witnesses_equivalence(const PerversityFn& piA,
                                  const PerversityFn& piB,
                                  const std::vector<int>& rho) {
  int e = piA.size();
  if (piB.size() != e) return false;
  auto ra = run_generic(e, piA);
  auto rb = run_generic(e, piB);
  for (int i = 1; i <= e; ++i) {
    const auto& a = ra[i];
    const auto& b = rb[rho[i]];
    if (!(a.green == b.green)) return false;
    if ((a.pi - b.pi) % 2 != 0) return false;
    for (int x = 1; x <= e; ++x)
      if (a.alt_sum[x] != b.alt_sum[rho[x]]) return false;
  }
  return true;
}

// Searches for a permutation witnessing algorithmic equivalence.  Candidates
// are pruned by Green correspondent, parity and the multiset of alternating
// sum coefficients, then the label identification is checked by backtracking.
inline std::optional<std::vector<int>> algorithmically_equivalent(
    const PerversityFn& piA, const PerversityFn& piB) {
  if (piA.size() != piB.size()) return std::nullopt;
  int e = piA.size();
  auto ra = run_generic(e, piA);
  auto rb = run_generic(e, piB);
  std::vector<std::vector<int>> cand(e + 1);
  for (int i = 1; i <= e; ++i) {
    auto amult = ra[i].alt_sum;
    std::sort(amult.begin() + 1, amult.end());
    for (int j = 1; j <= e; ++j) {
      if (!(ra[i].green == rb[j].green)) continue;
      if ((ra[i].pi - rb[j].pi) % 2 != 0) continue;
      auto bmult = rb[j].alt_sum;
      std::sort(bmult.begin() + 1, bmult.end());
      if (amult == bmult) cand[i].push_back(j);
    }
    if (cand[i].empty()) return std::nullopt;
  }
  std::vector<int> rho(e + 1, 0);
  std::vector<char> used(e + 1, 0);
  auto consistent = [&](int upto) {
    for (int i = 1; i <= upto; ++i)
      for (int x = 1; x <= upto; ++x)
        if (ra[i].alt_sum[x] != rb[rho[i]].alt_sum[rho[x]]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int i) -> bool {
    if (i > e) return witnesses_equivalence(piA, piB, rho);
    for (int j : cand[i]) {
      if (used[j]) continue;
      rho[i] = j;
      used[j] = 1;
      if (consistent(i) && self(self, i + 1)) return true;
      used[j] = 0;
      rho[i] = 0;
    }
    return false;
  };
  if (!rec(rec, 1)) return std::nullopt;
  return rho;
}

// Decomposition matrix reconstructed from the alternating sums: the square
// unipotent part R solves C R = I where row i of C is the alternating sum of
// X_i, plus one extra row derived from the all-ones exceptional row.
struct DecompositionMatrix {
  std::vector<std::vector<Int>> rows;  // e unipotent rows, each length e
  std::vector<Int> exceptional_row;
};

inline DecompositionMatrix decomposition_matrix(
    const std::vector<GenericComplexResult>& results, const PerversityFn& pi) {
  int e = static_cast<int>(results.size()) - 1;
  // exact Gaussian elimination over the rationals on [C | I]
  std::vector<std::vector<Rat>> aug(e, std::vector<Rat>(2 * e, Rat(0)));
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) aug[i][j] = Rat(results[i + 1].alt_sum[j + 1]);
    aug[i][e + i] = Rat(1);
  }
  for (int col = 0; col < e; ++col) {
    int piv = -1;
    for (int r = col; r < e; ++r)
      if (aug[r][col] != Rat(0)) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular alternating-sum system");
    std::swap(aug[col], aug[piv]);
    Rat p = aug[col][col];
    for (auto& x : aug[col]) x /= p;
    for (int r = 0; r < e; ++r) {
      if (r == col || aug[r][col] == Rat(0)) continue;
      Rat f = aug[r][col];
      for (int c = 0; c < 2 * e; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  // sum_j C_{ij} (row j of R) = e_i, so R = C^{-1}
  DecompositionMatrix m;
  m.rows.assign(e, std::vector<Int>(e, 0));
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      Rat v = aug[i][e + j];
      if (!is_integer(v)) throw std::domain_error("non-integral decomposition");
      m.rows[i][j] = v.numerator();
    }
  m.exceptional_row.assign(e, 0);
  for (int i = 1; i <= e; ++i) {
    Int sign = pi[i] % 2 == 0 ? 1 : -1;
    for (int j = 0; j < e; ++j)
      m.exceptional_row[j] += sign * m.rows[i - 1][j];
  }
  return m;
}

// The bijection between the simple modules of a Brauer-tree block and the
// star positions 1..e induced by a valid perversity function: start from the
// alpha-shifted canonical bijection of Green's walk and shift along the
// nested sets where pi exceeds the canonical function.
struct BijectionResult {
  std::vector<int> position_of_edge;  // edge id -> star position 1..e
  Int alpha = 0;
  std::vector<int> edge_of_A;  // walk data, for Green-correspondent checks
  std::vector<int> delta;
};

inline BijectionResult bijection_for(const BrauerTree& t,
                                     const PerversityFn& pi,
                                     const std::vector<int>& parities,
                                     bool verify = true) {
  using star_detail::norm;
  const int e = t.num_edges();
  auto rep = validate_pi(t, pi, parities);
  if (!rep.ok())
    throw std::domain_error("perversity function fails the tree conditions");

  auto pi0 = canonical_pi(t, 0);
  Int alpha = ((pi[1] - pi0[1]) % 2 + 2) % 2;
  for (int edge = 1; edge <= e; ++edge)
    if (((pi[edge] - pi0[edge] - alpha) % 2 + 2) % 2 != 0)
      throw std::domain_error("perversity parity inconsistent with the tree");

  auto walk = greens_walk(t, default_walk_start(t), alpha);
  std::vector<int> sindex_of_edge(e + 1, 0);
  for (int i = 1; i <= e; ++i) sindex_of_edge[walk.edge_of_S[i]] = i;

  // perversity values indexed by simple index i (the walk's S_i)
  std::vector<Int> want(e + 1, 0), base(e + 1, 0);
  for (int i = 1; i <= e; ++i) {
    want[i] = pi[walk.edge_of_S[i]];
    base[i] = pi0[walk.edge_of_S[i]] + alpha;
  }
  Int m = 0;
  for (int i = 1; i <= e; ++i) m = std::max(m, base[i] - want[i]);
  m = (m + 1) / 2 * 2;

  // sigma: simple index -> star position; cur is the perversity on positions
  std::vector<int> sigma(e + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  PerversityFn cur(e);
  for (int i = 1; i <= e; ++i) cur[i] = base[i];

  for (Int j = 1;; ++j) {
    std::vector<int> J;
    for (int i = 1; i <= e; ++i)
      if (want[i] + m - base[i] >= 2 * j) J.push_back(i);
    if (J.empty()) break;
    std::vector<int> I;
    for (int i : J) I.push_back(sigma[i]);
    std::sort(I.begin(), I.end());
    if (verify) {
      auto results = run_generic(e, cur);
      std::set<int> Iset(I.begin(), I.end());
      if (!is_cohomologically_closed(Iset, results))
        throw std::logic_error("shift set not cohomologically closed");
    }
    auto [np, rho] = shift_pi(cur, I);
    cur = np;
    for (int i = 1; i <= e; ++i) sigma[i] = rho[sigma[i]];
  }
  // undo the even lift: each uniform subtraction of 2 rotates back by one
  for (int i = 1; i <= e; ++i) sigma[i] = norm(sigma[i] - m / 2, e);

  BijectionResult out;
  out.alpha = alpha;
  out.edge_of_A = walk.edge_of_A;
  out.delta = walk.delta;
  out.position_of_edge.assign(e + 1, 0);
  for (int i = 1; i <= e; ++i)
    out.position_of_edge[walk.edge_of_S[i]] = sigma[i];

  if (verify) {
    // the transported function must reproduce the walk's Green
    // correspondents in degree 0
    PerversityFn fin(e);
    for (int i = 1; i <= e; ++i) fin[sigma[i]] = want[i];
    auto results = run_generic(e, fin);
    for (int k = 1; k <= e; ++k) {
      int edge = walk.edge_of_A[k];
      int i = sindex_of_edge[edge];
      const auto& g = results[sigma[i]].green;
      if (g.top != k || g.socle != walk.delta_inv(k) ||
          g.odd != (want[i] % 2 != 0))
        throw std::logic_error("bijection does not realize Green correspondents");
    }
  }
  return out;
}

}  // namespace perveq
