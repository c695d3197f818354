// Enumeration of weight-1 blocks across the classical series, used by the
// verification suites.
#pragma once

#include "perveq/blocks.hpp"

#include <functional>
#include <set>
#include <vector>

namespace perveq {

inline std::vector<Partition> partitions_of(Int n) {
  std::vector<Partition> out;
  std::vector<Int> cur;
  std::function<void(Int, Int)> rec = [&](Int rest, Int maxpart) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (Int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// All symbol classes of the given rank whose defect lies in the residue
// class `defect_mod4` (0..3), or any defect when defect_mod4 < 0.
inline std::vector<Symbol> symbols_of(Int rank, int defect_mod4) {
  std::vector<Symbol> out;
  std::set<std::string> seen;
  for (Int delta = 0; delta * delta / 4 <= rank; ++delta) {
    if (defect_mod4 >= 0 && delta % 4 != defect_mod4) continue;
    Int rest = rank - delta * delta / 4;
    for (Int m1 = 0; m1 <= rest; ++m1) {
      for (const auto& mu : partitions_of(m1))
        for (const auto& nu : partitions_of(rest - m1)) {
          Int b = static_cast<Int>(nu.parts.size());
          Int a = b + delta;
          while (a < static_cast<Int>(mu.parts.size())) {
            ++a;
            ++b;
          }
          Symbol s(beta_of(mu, a), beta_of(nu, b));
          if (s.rank() != rank) continue;  // should not happen
          std::string key = normalized(s).str();
          if (seen.insert(key).second) out.push_back(normalized(s));
        }
    }
  }
  return out;
}

struct ScanBlock {
  Block block;
  Int rank = 0;  // rank of the block's group
};

// Every weight-1 block of the family with group rank at most max_rank and
// every valid d, tree attached.
inline std::vector<ScanBlock> scan_classical_blocks(const GroupFamily& fam,
                                                    Int max_rank,
                                                    Int min_rank = 1) {
  std::vector<ScanBlock> out;
  auto push = [&](const CharLabel& core, Int d, Int rank) {
    Block b = block_members(fam, core, d);
    classical_tree(b);
    out.push_back({std::move(b), rank});
  };

  if (fam.kind == FamilyKind::GL || fam.kind == FamilyKind::GU) {
    for (Int d = 1; d <= 2 * max_rank; ++d) {
      Int t = hook_length(d, fam);
      for (Int n = std::max(min_rank, t); n <= max_rank; ++n) {
        for (const auto& lam : partitions_of(n - t)) {
          BetaSet x = beta_of(lam, std::max<Int>(1, lam.parts.size()));
          if (!is_t_core(x, t)) continue;
          push(lam, d, n);
        }
      }
    }
    return out;
  }

  int mod4;
  switch (fam.kind) {
    case FamilyKind::BC: mod4 = -1; break;  // odd defects, filtered below
    case FamilyKind::D: mod4 = 0; break;
    case FamilyKind::TwoD: mod4 = 2; break;
    default: throw std::invalid_argument("scan: classical families only");
  }
  for (Int d = 1; d <= 2 * max_rank; ++d) {
    Int t = hook_length(d, fam);
    bool odd_d = d % 2 == 1;
    for (Int n = std::max(min_rank, t); n <= max_rank; ++n) {
      // core defect class: hooks keep the defect, cohooks flip D and 2D
      int core_mod4;
      if (fam.kind == FamilyKind::BC)
        core_mod4 = -1;
      else if (odd_d)
        core_mod4 = mod4;
      else
        core_mod4 = (mod4 + 2) % 4;
      for (const auto& sym : symbols_of(n - t, core_mod4)) {
        if (fam.kind == FamilyKind::BC && sym.defect() % 2 == 0) continue;
        if (fam.kind != FamilyKind::BC && sym.defect() % 2 == 1) continue;
        if (odd_d) {
          if (!is_t_core(sym.first, t) || !is_t_core(sym.second, t)) continue;
        } else {
          if (has_removable_cohook(sym, t) || sym.defect() > t) continue;
        }
        // degenerate cores only make sense on the hook side for D and the
        // cohook side for 2D -> D; both are covered by block_members
        push(sym, d, n);
      }
    }
  }
  return out;
}

}  // namespace perveq
