#include "perveq/block_io.hpp"
#include "perveq/broue.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace perveq;

TEST_CASE("degree grammar") {
  auto f = parse_degree("q*P2^2*P6/2");
  REQUIRE(f.a_value() == Rat(1));
  REQUIRE(f.A_value() == Rat(5));
  REQUIRE(f.coeff() == Rat(1, 2));
  REQUIRE(f.pi(Fraction(1, 3)) == Rat(3));

  auto g = parse_degree("q^4*P8''^2*P12*P24''/12");
  REQUIRE(g.root_mult(RootAngle(1, 8)) == 2);
  REQUIRE(g.root_mult(RootAngle(7, 8)) == 2);
  REQUIRE(g.root_mult(RootAngle(3, 8)) == 0);
  REQUIRE(g.root_mult(RootAngle(1, 24)) == 1);
  REQUIRE(g.root_mult(RootAngle(5, 24)) == 0);

  auto h = parse_degree("q*P1*P2/r2");
  REQUIRE(h.sqrt2_exp() == -1);
  REQUIRE(h.A_value() == Rat(3));

  REQUIRE(parse_degree("1").same_shape(CycloProduct::one()));
  REQUIRE(parse_degree("q^(9/2)").a_value() == Rat(9, 2));
  REQUIRE_THROWS(parse_degree("q*X3"));
  REQUIRE_THROWS(parse_degree("q+P2"));
}

TEST_CASE("parameter grammar") {
  auto p = parse_param("-E(3,1)*q");
  REQUIRE(p.omega == RootAngle(1, 3).negated());
  REQUIRE(p.exponent == Rat(1));

  REQUIRE(parse_param("1").omega == RootAngle(0, 1));
  REQUIRE(parse_param("1").exponent == Rat(0));
  REQUIRE(parse_param("-q^4").omega == RootAngle(1, 2));
  REQUIRE(parse_param("-q^4").exponent == Rat(4));
  REQUIRE(parse_param("E(4,1)*q^(9/2)").exponent == Rat(9, 2));
  REQUIRE(parse_param("theta*q^2").omega == RootAngle(1, 3));
  REQUIRE(parse_param("xi*q").omega == RootAngle(1, 12));
}

TEST_CASE("loading the G2 d=3 block") {
  Block b = load_block(data_dir() + "/g2_d3.block");
  REQUIRE(b.e == 6);
  REQUIRE(b.d == 3);
  REQUIRE(b.chars.size() == 6);
  REQUIRE(b.chars[0].name == "phi{1,0}");
  // parameters (1, -theta q, q, -theta^2 q, q^2, -q)
  REQUIRE(b.chars[1].omega == RootAngle(1, 3).negated());
  REQUIRE(b.chars[5].omega == RootAngle(1, 2));
  // pi table recomputation
  for (size_t i = 0; i < b.chars.size(); ++i)
    for (size_t c = 0; c < b.kappa_cols.size(); ++c)
      REQUIRE(pi_char(b, i, b.fraction(b.kappa_cols[c])) == b.pi_table[i][c]);
  // tree shape: the cross at phi{1,6}
  REQUIRE(b.tree.num_edges() == 6);
  auto depths = b.tree.edge_depths();
  b.tree.check();
}

TEST_CASE("malformed input is rejected") {
  REQUIRE_THROWS(load_block(data_dir() + "/no_such_file.block"));
}

TEST_CASE("whole corpus loads and verifies pi tables") {
  auto blocks = load_all(data_dir());
  REQUIRE(blocks.size() >= 90);
  size_t cells = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.chars.size(); ++i)
      for (size_t c = 0; c < b.kappa_cols.size(); ++c) {
        Fraction fr = b.fraction(b.kappa_cols[c]);
        REQUIRE(pi_char(b, i, fr) == b.pi_table[i][c]);
        ++cells;
      }
  }
  REQUIRE(cells >= 4000);
}

TEST_CASE("specialization orderings match the worked examples") {
  // G2 d=3, kappa=1: the 6th roots of unity in order
  {
    Block b = load_block(data_dir() + "/g2_d3.block");
    auto spec = specialization_bijection(b, Fraction(1, 3));
    std::vector<std::string> names;
    for (int i : spec.order) names.push_back(b.chars[i].name);
    REQUIRE(names == std::vector<std::string>{"phi{1,0}", "G2[th2]",
                                              "phi{2,2}", "G2[th]",
                                              "phi{1,6}", "G2[1]"});
    auto bc = broue_consistency(b, Fraction(1, 3), true);
    REQUIRE(bc.ok);
  }
  // 2G2 d=12' at the fraction 5/12
  {
    Block b = load_block(data_dir() + "/2g2_d12p.block");
    auto spec = specialization_bijection(b, Fraction(5, 12));
    std::vector<std::string> names;
    for (int i : spec.order) names.push_back(b.chars[i].name);
    REQUIRE(names == std::vector<std::string>{"phi{1,0}", "2G2^II[-i]",
                                              "2G2[xi7]", "2G2[xi5]",
                                              "2G2^II[i]", "phi{1,2}"});
  }
  // 2F4 d=24', kappa=5: ordering ends phi{1,8}, 2F4^II[-1]
  {
    Block b = load_block(data_dir() + "/2f4_d24p.block");
    auto spec = specialization_bijection(b, Fraction(5, 24));
    std::vector<std::string> names;
    for (int i : spec.order) names.push_back(b.chars[i].name);
    REQUIRE(names ==
            std::vector<std::string>{
                "phi{1,0}", "2B2[psi3];1", "2F4^II[-i]", "2F4[-th2]",
                "2B2[psi5];1", "phi{2,1}", "2B2[psi3];eps", "2F4[-th]",
                "2F4^II[i]", "2B2[psi5];eps", "phi{1,8}", "2F4^II[-1]"});
    auto bc = broue_consistency(b, Fraction(5, 24), true);
    REQUIRE(bc.ok);
  }
}

TEST_CASE("E7 d=14 row consistency from the file") {
  Block b = load_block(data_dir() + "/e7_d14.block");
  for (size_t i = 0; i < b.chars.size(); ++i) {
    if (b.chars[i].name != "phi{27,2}") continue;
    REQUIRE(b.chars[i].degree.A_value() == Rat(26));
    REQUIRE(aA_char(b, i) / Rat(b.e) == Rat(2));
    REQUIRE(pi_char(b, i, Fraction(1, 14)) == 3);
    REQUIRE(pi_char(b, i, Fraction(3, 14)) == 11);
  }
}
