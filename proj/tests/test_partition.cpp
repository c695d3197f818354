#include "perveq/partition.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace perveq;

namespace {

BetaSet bs(std::vector<Int> v) { return BetaSet(std::move(v)); }
Partition pt(std::vector<Int> v) { return Partition(std::move(v)); }


std::vector<Partition> partitions_of(Int n) {
  std::vector<Partition> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int rest, Int maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (Int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Exhaustive hook-removal oracle for the t-core: remove removable t-hooks in
// every possible order and check all results agree.
BetaSet core_by_exhaustion(const BetaSet& x, Int t) {
  std::set<BetaSet> results;
  auto rec = [&](auto&& self, BetaSet cur) -> void {
    bool any = false;
    for (Int e : cur.elems) {
      if (e - t >= 0 && !cur.contains(e - t)) {
        any = true;
        self(self, remove_hook(cur, e, t).first);
      }
    }
    if (!any) results.insert(cur.normalized());
  };
  rec(rec, x);
  REQUIRE(results.size() == 1);
  return *results.begin();
}

}  // namespace

TEST_CASE("beta_of and partition_of round trip") {
  Partition p({2, 1, 1});
  BetaSet x = beta_of(p, 3);
  REQUIRE(x.elems == std::vector<Int>{4, 2, 1});
  REQUIRE(partition_of(x) == p);

  REQUIRE(beta_of(Partition(), 2).elems == std::vector<Int>{1, 0});
  REQUIRE(beta_of(pt({3}), 1).elems ==
          std::vector<Int>{3});
  REQUIRE_THROWS(beta_of(pt({1, 1}), 1));

  for (const auto& q : partitions_of(9)) {
    Int np = static_cast<Int>(q.parts.size());
    for (Int len = np; len <= np + 3; ++len) {
      REQUIRE(partition_of(beta_of(q, len)) == q);
      REQUIRE(beta_of(q, len).rank() == q.size());
    }
  }
}

TEST_CASE("rank and shift invariance") {
  REQUIRE(bs({4, 2, 1}).rank() == 4);
  REQUIRE(bs({0}).rank() == 0);
  REQUIRE(bs({5, 3, 2, 0}).rank() == 4);
  REQUIRE(bs({5, 3, 2, 0}).normalized() ==
          bs({4, 2, 1}));
}

TEST_CASE("add_hook and remove_hook") {
  auto [y1, leg1] = add_hook(bs({1, 0}), 1, 2);
  REQUIRE(y1 == bs({3, 0}));
  REQUIRE(leg1 == 0);

  auto [y2, leg2] = add_hook(bs({1, 0}), 0, 3);
  REQUIRE(y2 == bs({3, 1}));
  REQUIRE(leg2 == 1);

  REQUIRE_THROWS(add_hook(bs({1, 0}), 0, 1));

  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto ps = partitions_of(std::uniform_int_distribution<Int>(0, 8)(rng));
    const auto& p =
        ps[std::uniform_int_distribution<size_t>(0, ps.size() - 1)(rng)];
    BetaSet x = beta_of(p, static_cast<Int>(p.parts.size()) + 2);
    Int t = std::uniform_int_distribution<Int>(1, 5)(rng);
    for (Int e : x.elems) {
      if (x.contains(e + t)) continue;
      auto [y, leg] = add_hook(x, e, t);
      REQUIRE(y.rank() == x.rank() + t);
      auto [back, leg2] = remove_hook(y, e + t, t);
      REQUIRE(back == x);
      REQUIRE(leg2 == leg);
    }
  }
}

TEST_CASE("t-core via abacus equals exhaustive hook removal") {
  REQUIRE(partition_of(t_core(beta_of(pt({3}), 1), 3)) ==
          Partition());
  // (2,1) has no 2-hook at all (hook lengths 3, 1, 1), so it is a 2-core
  REQUIRE(partition_of(t_core(beta_of(pt({2, 1}), 2), 2)) == pt({2, 1}));

  for (Int n = 0; n <= 9; ++n)
    for (const auto& p : partitions_of(n))
      for (Int t = 2; t <= 5; ++t) {
        BetaSet x = beta_of(p, std::max<Int>(1, p.parts.size()));
        BetaSet abacus = t_core(x, t).normalized();
        REQUIRE(abacus == core_by_exhaustion(x, t));
        REQUIRE(is_t_core(abacus, t));
        REQUIRE(t_core(abacus, t).normalized() == abacus);
        REQUIRE((x.rank() - abacus.rank()) % t == 0);
      }
}

TEST_CASE("addable hook positions") {
  auto [x0, ends0] = addable_hooks(bs({2, 1, 0}), 3);
  REQUIRE(ends0 == std::vector<Int>{2, 1, 0});

  // after normalization there are exactly t addable hooks on a t-core
  for (Int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n))
      for (Int t = 1; t <= 5; ++t) {
        BetaSet core = t_core(beta_of(p, std::max<Int>(1, p.parts.size())), t);
        auto [x, ends] = addable_hooks(core, t);
        REQUIRE(static_cast<Int>(ends.size()) == t);
        REQUIRE(std::is_sorted(ends.begin(), ends.end(), std::greater<>()));
        for (Int e : ends) REQUIRE(!x.contains(e + t));
      }
}

TEST_CASE("symbol defect, rank, cohooks") {
  Symbol s(bs({0}), bs({}));
  REQUIRE(s.defect() == 1);
  REQUIRE(s.rank() == 0);

  Symbol moved = add_cohook(s, 0, 0, 1);
  REQUIRE(moved.rank() == s.rank() + 1);
  // the signed defect moves by 2; |a-b| can stay fixed when it was 1
  REQUIRE((moved.defect() - s.defect()) % 2 == 0);
  REQUIRE(std::abs(moved.defect() - s.defect()) <= 2);

  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<Int> nd(0, 6), szd(0, 4);
    auto ps1 = partitions_of(nd(rng));
    auto ps2 = partitions_of(nd(rng));
    const auto& p1 =
        ps1[std::uniform_int_distribution<size_t>(0, ps1.size() - 1)(rng)];
    const auto& p2 =
        ps2[std::uniform_int_distribution<size_t>(0, ps2.size() - 1)(rng)];
    Int l1 = static_cast<Int>(p1.parts.size()) + szd(rng);
    Int l2 = static_cast<Int>(p2.parts.size()) + szd(rng);
    Symbol sym(beta_of(p1, l1), beta_of(p2, l2));
    Int t = std::uniform_int_distribution<Int>(1, 4)(rng);
    for (int side = 0; side < 2; ++side) {
      const BetaSet& from = side == 0 ? sym.first : sym.second;
      const BetaSet& to = side == 0 ? sym.second : sym.first;
      for (Int e : from.elems) {
        if (to.contains(e + t)) continue;
        Symbol nu = add_cohook(sym, side, e, t);
        REQUIRE(nu.rank() == sym.rank() + t);
        REQUIRE((nu.defect() - sym.defect()) % 2 == 0);
        REQUIRE(std::abs(nu.defect() - sym.defect()) <= 2);
        if (sym.defect() != 1) REQUIRE(nu.defect() != sym.defect());
      }
    }
    // hooks on one row keep the defect
    for (Int e : sym.first.elems) {
      if (sym.first.contains(e + t)) continue;
      Symbol nu(add_hook(sym.first, e, t).first, sym.second);
      REQUIRE(nu.defect() == sym.defect());
      REQUIRE(nu.rank() == sym.rank() + t);
    }
  }
}

TEST_CASE("cocore is order independent and a fixpoint") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<Int> nd(0, 5), szd(0, 3);
    auto ps1 = partitions_of(nd(rng));
    auto ps2 = partitions_of(nd(rng));
    const auto& p1 =
        ps1[std::uniform_int_distribution<size_t>(0, ps1.size() - 1)(rng)];
    const auto& p2 =
        ps2[std::uniform_int_distribution<size_t>(0, ps2.size() - 1)(rng)];
    Symbol sym(beta_of(p1, static_cast<Int>(p1.parts.size()) + szd(rng)),
               beta_of(p2, static_cast<Int>(p2.parts.size()) + szd(rng)));
    Int t = std::uniform_int_distribution<Int>(1, 4)(rng);
    Symbol c = t_cocore(sym, t);
    REQUIRE(!has_removable_cohook(c, t));
    REQUIRE(t_cocore(c, t) == c);
    REQUIRE((sym.rank() - c.rank()) % t == 0);

    if (sym.rank() <= 6) {
      std::set<std::string> outcomes;
      auto rec = [&](auto&& self, Symbol cur) -> void {
        bool any = false;
        for (int side = 0; side < 2; ++side) {
          const BetaSet& from = side == 0 ? cur.first : cur.second;
          const BetaSet& to = side == 0 ? cur.second : cur.first;
          for (Int e : from.elems)
            if (e >= t && !to.contains(e - t)) {
              any = true;
              BetaSet nf, nt = to;
              for (Int x : from.elems)
                if (x != e) nf.elems.push_back(x);
              nt.elems.push_back(e - t);
              std::sort(nt.elems.begin(), nt.elems.end(), std::greater<>());
              self(self, side == 0 ? Symbol(nf, nt) : Symbol(nt, nf));
            }
        }
        if (!any) outcomes.insert(normalized(cur).str());
      };
      rec(rec, sym);
      REQUIRE(outcomes.size() == 1);
      REQUIRE(*outcomes.begin() == normalized(c).str());
    }
  }
}

TEST_CASE("serialization formats") {
  REQUIRE(pt({3, 1, 1}).str() == "[3,1,1]");
  REQUIRE(bs({4, 2, 1}).str() == "{4,2,1}");
  REQUIRE(Symbol(bs({1, 0}),
                 bs({2}))
              .str() == "{{1,0},{2}}");
}
