#include "perveq/blocks.hpp"
#include "perveq/classical_scan.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

using namespace perveq;

namespace {

Partition pt(std::vector<Int> v) { return Partition(std::move(v)); }
BetaSet bs(std::vector<Int> v) { return BetaSet(std::move(v)); }

CycloProduct P(Int n, Int m = 1) { return CycloProduct::cyclotomic(n, m); }
CycloProduct qp(Int k) { return CycloProduct::q_power(Rat(k)); }

}  // namespace

TEST_CASE("GL degrees on small partitions") {
  REQUIRE(degree_gl(pt({1})).same_shape(CycloProduct::one()));
  REQUIRE(degree_gl(pt({1, 1})).same_shape(qp(1)));
  REQUIRE(degree_gl(pt({2, 1})).same_shape(qp(1) * P(2)));
  REQUIRE(degree_gu(pt({1, 1})).same_shape(qp(1)));
  // Steinberg of GL_n is q^{n(n-1)/2}, the trivial character is 1
  for (Int n = 1; n <= 6; ++n) {
    std::vector<Int> ones(n, 1);
    REQUIRE(degree_gl(pt(ones)).same_shape(qp(n * (n - 1) / 2)));
    REQUIRE(degree_gl(pt({n})).same_shape(CycloProduct::one()));
  }
}

TEST_CASE("symbol degrees: known small cases") {
  Symbol triv(bs({1}), bs({}));
  REQUIRE(triv.rank() == 1);
  REQUIRE(degree_symbol(FamilyKind::BC, triv).same_shape(CycloProduct::one()));

  Symbol st(bs({1, 0}), bs({1}));
  REQUIRE(st.rank() == 1);
  REQUIRE(st.defect() == 1);
  REQUIRE(degree_symbol(FamilyKind::BC, st).same_shape(qp(1)));

  for (Int n = 0; n <= 5; ++n)
    for (const auto& s : symbols_of(n, -1)) {
      if (s.defect() % 2 == 0) continue;
      auto f = degree_symbol(FamilyKind::BC, s);
      REQUIRE(f.is_polynomial());
      REQUIRE(f.coeff() > Rat(0));
      REQUIRE(f.conjugation_closed());
    }
}

TEST_CASE("degrees are invariant under representative shifts") {
  for (Int n = 0; n <= 6; ++n) {
    for (const auto& s : symbols_of(n, -1)) {
      FamilyKind kind;
      if (s.defect() % 2 == 1)
        kind = FamilyKind::BC;
      else if (s.defect() % 4 == 0)
        kind = FamilyKind::D;
      else
        kind = FamilyKind::TwoD;
      auto f = degree_symbol(kind, s);
      REQUIRE(f == degree_symbol(kind, s.shifted()));
      REQUIRE(f == degree_symbol(kind, s.shifted(3)));
    }
  }
}

TEST_CASE("e_of per family") {
  GroupFamily gu{FamilyKind::GU, "GU"};
  REQUIRE(e_of(3, gu) == 6);
  REQUIRE(e_of(8, gu) == 8);
  REQUIRE(e_of(6, gu) == 3);
  GroupFamily gl{FamilyKind::GL, "GL"};
  REQUIRE(e_of(5, gl) == 5);
  GroupFamily bc{FamilyKind::BC, "BC"};
  REQUIRE(e_of(3, bc) == 6);
  REQUIRE(e_of(4, bc) == 4);
}

TEST_CASE("GL blocks enumerate the partitions with the given core") {
  GroupFamily gl{FamilyKind::GL, "GL"};
  Block b = block_members(gl, pt({}), 2);
  REQUIRE(b.e == 2);
  REQUIRE(b.chars[0].name == "[2]");
  REQUIRE(b.chars[1].name == "[1,1]");

  for (Int n = 2; n <= 8; ++n)
    for (Int d = 2; d <= 5; ++d) {
      if (n < d) continue;
      std::map<std::string, std::set<std::string>> by_core;
      for (const auto& lam : partitions_of(n)) {
        BetaSet x = beta_of(lam, std::max<Int>(1, lam.parts.size()));
        BetaSet core = t_core(x, d).normalized();
        if (lam.size() - partition_of(core).size() == d)
          by_core[core.str()].insert(lam.str());
      }
      for (const auto& lam : partitions_of(n - d)) {
        BetaSet x = beta_of(lam, std::max<Int>(1, lam.parts.size()));
        if (!is_t_core(x, d)) continue;
        Block blk = block_members(gl, lam, d);
        std::set<std::string> names;
        for (const auto& c : blk.chars) names.insert(c.name);
        REQUIRE(names == by_core[x.normalized().str()]);
      }
    }
}

TEST_CASE("GU blocks split by parity") {
  GroupFamily gu{FamilyKind::GU, "GU"};
  Block b = block_members(gu, pt({}), 3);  // e = 6, GU_6
  REQUIRE(b.e == 6);
  for (const auto& c : b.chars) {
    const auto& lam = std::get<Partition>(c.label);
    REQUIRE(lam.size() == 6);
    BetaSet x = beta_of(lam, std::max<Int>(1, lam.parts.size()));
    REQUIRE(partition_of(t_core(x, 6)) == Partition());
  }
}

TEST_CASE("classical trees have the branch shape") {
  GroupFamily bc{FamilyKind::BC, "BC"};
  for (const auto& sb : scan_classical_blocks(bc, 6)) {
    const Block& b = sb.block;
    int s = 0, t = 0;
    for (const auto& c : b.chars) (c.side > 0 ? s : t)++;
    if (b.d % 2 == 0) {
      Int dp = b.d / 2;
      REQUIRE(s + t == b.d);
      REQUIRE(s - dp == dp - t);  // branch lengths d' + delta and d' - delta
    } else {
      REQUIRE(s == t);
      REQUIRE(s + t == 2 * b.d);
    }
    REQUIRE(b.tree.num_edges() == b.e);
    b.tree.check();
  }
}

TEST_CASE("pi integrality and parity across classical blocks (small scan)") {
  for (const char* fname : {"GL", "GU", "BC", "D", "2D"}) {
    GroupFamily fam = GroupFamily::parse(fname);
    Int maxr = fam.kind == FamilyKind::GL || fam.kind == FamilyKind::GU ? 7 : 5;
    for (const auto& sb : scan_classical_blocks(fam, maxr)) {
      const Block& b = sb.block;
      for (Int kappa = 1; kappa <= 2 * b.d; ++kappa) {
        if (std::gcd(kappa, b.d) != 1) continue;
        Fraction fr(kappa, b.d);
        for (size_t i = 0; i < b.chars.size(); ++i) {
          Int p = pi_char(b, i, fr);  // throws if not integral
          REQUIRE(char_parity(b, i, fr) == (p % 2 == 0 ? 1 : -1));
        }
      }
    }
  }
}

TEST_CASE("aA increases towards the exceptional vertex") {
  for (const char* fname : {"GL", "GU", "BC", "D", "2D"}) {
    GroupFamily fam = GroupFamily::parse(fname);
    Int maxr = fam.kind == FamilyKind::GL || fam.kind == FamilyKind::GU ? 7 : 5;
    for (const auto& sb : scan_classical_blocks(fam, maxr)) {
      const Block& b = sb.block;
      Rat prev(-1);
      bool in_sigma = true;
      for (size_t i = 0; i < b.chars.size(); ++i) {
        if (in_sigma && b.chars[i].side < 0) {
          in_sigma = false;
          prev = Rat(-1);
        }
        Rat cur = aA_char(b, i);
        REQUIRE(cur > prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("minimal pi law, GL closed form") {
  GroupFamily gl{FamilyKind::GL, "GL"};
  for (const auto& sb : scan_classical_blocks(gl, 8)) {
    const Block& b = sb.block;
    Int n = sb.rank - b.d;  // size of the core partition
    for (Int kappa : {Int(1), Int(b.d + 1)}) {
      if (std::gcd(kappa, b.d) != 1) continue;
      Fraction fr(kappa, b.d);
      auto rep = minimal_pi_check(b, fr);
      REQUIRE(rep.ok);
      Int lam1 = 0;
      {
        const auto& lam = std::get<Partition>(b.chars[0].label);
        BetaSet x = beta_of(lam, std::max<Int>(1, lam.parts.size()));
        Partition c = partition_of(t_core(x, b.d));
        lam1 = c.parts.empty() ? 0 : c.parts[0];
      }
      REQUIRE(pi_char(b, 0, fr) == 2 * kappa * (n - lam1));
      REQUIRE(rep.min_pi == 2 * kappa * (n - lam1));
    }
  }
  Block b = block_members(gl, Partition(), 4);
  REQUIRE(b.chars[0].name == "[4]");
  REQUIRE(pi_char(b, 0, Fraction(1, 4)) == 0);
}

TEST_CASE("minimal pi law for all classical families") {
  for (const char* fname : {"GU", "BC", "D", "2D"}) {
    GroupFamily fam = GroupFamily::parse(fname);
    Int maxr = fam.kind == FamilyKind::GU ? 7 : 5;
    for (const auto& sb : scan_classical_blocks(fam, maxr)) {
      for (Int kappa : {Int(1), Int(sb.block.d + 1), Int(2 * sb.block.d - 1)}) {
        if (kappa < 1 || std::gcd(kappa, sb.block.d) != 1) continue;
        auto rep = minimal_pi_check(sb.block, Fraction(kappa, sb.block.d));
        if (!rep.ok)
          for (const auto& f : rep.failures) UNSCOPED_INFO(f);
        REQUIRE(rep.ok);
      }
    }
  }
}
