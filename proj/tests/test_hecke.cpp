#include "perveq/hecke.hpp"

#include "perveq/classical_scan.hpp"
#include "perveq/star_algebra.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace perveq;

namespace {

TypedHecke typed_from(std::vector<Rat> a, std::vector<Rat> b, Int d) {
  TypedHecke h;
  h.d = d;
  h.a = std::move(a);
  h.b = std::move(b);
  h.a_char.resize(h.a.size());
  h.b_char.resize(h.b.size());
  std::iota(h.a_char.begin(), h.a_char.end(), 0);
  std::iota(h.b_char.begin(), h.b_char.end(), static_cast<int>(h.a.size()));
  return h;
}

// pi of the relative degree of position p at 1/d, normalized at the
// boundary of the longer branch (the minimal-pi position).
Rat pi_position(const TypedHecke& h, Int p) {
  auto params = h.to_params();
  Fraction fr(1, h.d);
  size_t base = h.s() >= h.t() ? 0 : static_cast<size_t>(h.s());
  return pi_rel(relative_degree(params, static_cast<size_t>(p - 1)),
                relative_degree(params, base), fr);
}

// Random algebra of type (s,t) and ambiance d: choose which e-th roots the
// positive class hits, then decreasing integer exponents in those residues.
std::optional<TypedHecke> random_typed(std::mt19937& rng, Int s, Int t,
                                       Int d) {
  Int e = s + t;
  Rat eps = Rat(d) / Rat(e);
  if (!is_integer(eps)) return std::nullopt;
  std::vector<Int> ks(e);
  std::iota(ks.begin(), ks.end(), 0);
  std::shuffle(ks.begin(), ks.end(), rng);
  Int epsi = eps.numerator();
  std::vector<Rat> a, b;
  Int cur = d;
  for (Int i = 0; i < s; ++i) {
    Int res = ((ks[i] * epsi) % d + d) % d;
    while (cur <= -8 * d) break;
    Int x = res - d * std::uniform_int_distribution<Int>(1, 3)(rng);
    while (x >= cur) x -= d;
    a.push_back(Rat(x));
    cur = x;
  }
  cur = d;
  for (Int i = 0; i < t; ++i) {
    Int res = ((ks[s + i] * epsi - d / 2) % d + d) % d;
    if (d % 2 != 0) return std::nullopt;
    Int x = res - d * std::uniform_int_distribution<Int>(1, 3)(rng);
    while (x >= cur) x -= d;
    b.push_back(Rat(x));
    cur = x;
  }
  return typed_from(a, b, d);
}

}  // namespace

TEST_CASE("relative degree basics") {
  // e = 1: empty product
  HeckeParams h;
  h.e = 1;
  h.d = 1;
  h.params.push_back({RootAngle(0, 1), Rat(0), 0});
  REQUIRE(relative_degree(h, 0).same_shape(CycloProduct::one()));

  // e = 2, parameters (1, -1): |relative degree| constant
  HeckeParams h2;
  h2.e = 2;
  h2.d = 2;
  h2.params.push_back({RootAngle(0, 1), Rat(0), 0});
  h2.params.push_back({RootAngle(1, 2), Rat(0), 1});
  auto r0 = relative_degree(h2, 0);
  REQUIRE(r0.A_value() == Rat(0));
  REQUIRE(r0.a_value() == Rat(0));
}

TEST_CASE("classify_type on the worked example") {
  // parameters 1, q^{-2}, -q, -q^3 have type (2,2)
  HeckeParams h;
  h.e = 4;
  h.d = 4;
  h.params.push_back({RootAngle(0, 1), Rat(0), 0});
  h.params.push_back({RootAngle(0, 1), Rat(-2), 1});
  h.params.push_back({RootAngle(1, 2), Rat(1), 2});
  h.params.push_back({RootAngle(1, 2), Rat(3), 3});
  auto t = classify_type(h);
  REQUIRE(t.s() == 2);
  REQUIRE(t.t() == 2);
  REQUIRE(t.a == std::vector<Rat>{Rat(0), Rat(-2)});
  REQUIRE(t.b == std::vector<Rat>{Rat(3), Rat(1)});
}

TEST_CASE("classify_type rejects an ambiance violation") {
  HeckeParams h;
  h.e = 2;
  h.d = 3;
  h.params.push_back({RootAngle(0, 1), Rat(0), 0});
  h.params.push_back({RootAngle(0, 1), Rat(-1), 1});
  REQUIRE_THROWS_AS(classify_type(h), std::domain_error);
}

TEST_CASE("coxeter algebras and their pi") {
  auto c30 = coxeter(3, 0, 3);
  REQUIRE(c30.a == std::vector<Rat>{Rat(0), Rat(-1), Rat(-2)});

  auto c11 = coxeter(1, 1, 2);
  REQUIRE(c11.a == std::vector<Rat>{Rat(0)});
  REQUIRE(c11.b == std::vector<Rat>{Rat(0)});

  // pi(chi_i) = i - 1, pi(psi_i) = s - t - 1 + i for s >= t
  for (Int s = 1; s <= 5; ++s)
    for (Int t = 0; t <= s; ++t) {
      for (Int d : {s + t, 2 * (s + t), 3 * (s + t)}) {
        if (d < 1 || d % (s + t) != 0) continue;
        auto cox = coxeter(s, t, d);
        bool integral = true;
        for (const Rat& x : cox.a)
          if (!is_integer(x)) integral = false;
        for (const Rat& x : cox.b)
          if (!is_integer(x)) integral = false;
        if (!integral) continue;
        classify_type(cox.to_params());
        for (Int i = 1; i <= s; ++i)
          REQUIRE(pi_position(cox, i) == Rat(i - 1));
        for (Int i = 1; i <= t; ++i)
          REQUIRE(pi_position(cox, s + i) == Rat(s - t - 1 + i));
      }
    }
}

TEST_CASE("coxeter pi across larger types matches the canonical line") {
  for (Int e = 2; e <= 10; ++e)
    for (Int s = e / 2; s <= e; ++s) {
      Int t = e - s;
      for (Int d = e; d <= 24; d += e) {
        auto cox = coxeter(s, t, d);
        bool integral = true;
        for (const Rat& x : cox.b)
          if (!is_integer(x)) integral = false;
        if (!integral) continue;
        auto line = BrauerTree::line(static_cast<int>(s), static_cast<int>(t));
        auto pi0 = canonical_pi(line, 0);
        for (Int i = 1; i <= e; ++i)
          REQUIRE(pi_position(cox, i) == Rat(pi0[static_cast<int>(i)]));
      }
    }
}

TEST_CASE("increasing perversity within sign classes") {
  std::mt19937 rng(61);
  int done = 0;
  while (done < 60) {
    Int e = std::uniform_int_distribution<Int>(2, 6)(rng);
    Int d = e * std::uniform_int_distribution<Int>(1, 3)(rng);
    Int s = std::uniform_int_distribution<Int>(0, e)(rng);
    Int t = e - s;
    // random valid typed algebra: exponents a_i == -(i-1) eps mod d,
    // distinct, decreasing; likewise for b with the half-shift
    if (t > 0 && d % 2 != 0) continue;
    auto hopt = random_typed(rng, s, t, d);
    if (!hopt) continue;
    auto h = *hopt;
    classify_type(h.to_params());
    for (Int i = 1; i + 1 <= s; ++i)
      REQUIRE(pi_position(h, i + 1) > pi_position(h, i));
    for (Int i = 1; i + 1 <= t; ++i)
      REQUIRE(pi_position(h, s + i + 1) > pi_position(h, s + i));
    ++done;
  }
}

TEST_CASE("perturbation: t = 0 is always +-type; Coxeter is a fixed point") {
  auto gl = typed_from({Rat(0), Rat(-3), Rat(-7)}, {}, 3);
  auto st = perturb(gl);
  REQUIRE(st.kind == PerturbKind::Plus);

  for (Int s = 1; s <= 4; ++s)
    for (Int t = 0; t <= s; ++t) {
      Int e = s + t;
      for (Int d : {e, 2 * e}) {
        auto cox = coxeter(s, t, d);
        bool integral = true;
        for (const Rat& x : cox.b)
          if (!is_integer(x)) integral = false;
        if (!integral) continue;
        auto step = perturb(cox);
        REQUIRE(step.next.same_parameters(cox));
        REQUIRE(step.permuted_positions.size() == static_cast<size_t>(e));
      }
    }
}

TEST_CASE("perturbation bookkeeping: pi drops by two on the permuted set") {
  std::mt19937 rng(67);
  int done = 0;
  while (done < 40) {
    Int e = std::uniform_int_distribution<Int>(2, 6)(rng);
    Int d = e * std::uniform_int_distribution<Int>(1, 2)(rng);
    Int s = std::uniform_int_distribution<Int>(0, e)(rng);
    Int t = e - s;
    if (t > 0 && d % 2 != 0) continue;
    auto hopt = random_typed(rng, s, t, d);
    if (!hopt) continue;
    auto h = *hopt;
    classify_type(h.to_params());
    auto step = perturb(h);
    if (step.next.same_parameters(h)) continue;  // already Coxeter
    std::set<Int> I(step.permuted_positions.begin(),
                    step.permuted_positions.end());
    // characters travel with their parameters: position -> char maps
    auto char_at = [](const TypedHecke& x, Int p) {
      return p <= x.s() ? x.a_char[p - 1] : x.b_char[p - x.s() - 1];
    };
    // permuted characters cycle by one position within the permuted set
    std::vector<Int> Iv(step.permuted_positions);
    for (size_t k = 0; k < Iv.size(); ++k) {
      Int from = Iv[k];
      Int to = Iv[(k + 1) % Iv.size()];
      REQUIRE(char_at(step.next, to) == char_at(h, from));
    }
    // pi (normalized by an unpermuted parameter if any) drops by 2 on the
    // permuted positions and is unchanged elsewhere
    if (static_cast<Int>(I.size()) < e) {
      Int ref = 1;
      while (I.count(ref)) ++ref;
      auto hp = h.to_params();
      auto np = step.next.to_params();
      Fraction fr(1, d);
      auto rel = [&](const HeckeParams& x, Int p) {
        return pi_rel(relative_degree(x, static_cast<size_t>(p - 1)),
                      relative_degree(x, static_cast<size_t>(ref - 1)), fr);
      };
      for (Int p = 1; p <= e; ++p) {
        Rat before = rel(hp, p);
        Rat after = rel(np, p);
        if (I.count(p))
          REQUIRE(after == before - Rat(2));
        else
          REQUIRE(after == before);
      }
    }
    ++done;
  }
}

TEST_CASE("chains terminate at Coxeter with nested permuted sets") {
  std::mt19937 rng(71);
  int done = 0;
  while (done < 60) {
    Int e = std::uniform_int_distribution<Int>(1, 6)(rng);
    Int d = e * std::uniform_int_distribution<Int>(1, 2)(rng);
    Int s = std::uniform_int_distribution<Int>(0, e)(rng);
    Int t = e - s;
    if (t > 0 && d % 2 != 0) continue;
    auto hopt = random_typed(rng, s, t, d);
    if (!hopt) continue;
    auto h = *hopt;
    classify_type(h.to_params());
    auto chain = chain_to_coxeter(h);
    REQUIRE(chain.endpoint.same_parameters(coxeter(s, t, d)));
    for (size_t k = 0; k + 1 < chain.steps.size(); ++k) {
      std::set<Int> I(chain.steps[k].permuted_positions.begin(),
                      chain.steps[k].permuted_positions.end());
      std::set<Int> J(chain.steps[k + 1].permuted_positions.begin(),
                      chain.steps[k + 1].permuted_positions.end());
      for (Int x : I) REQUIRE(J.count(x) == 1);
      REQUIRE(static_cast<Int>(I.size()) < e);  // proper subsets
    }
    // pi reconstruction: pi(position) - pi(base) telescopes through the
    // chain to 2 f(position) + canonical line value, up to the common
    // constant 2 f(base) at the normalizing position
    auto line = BrauerTree::line(static_cast<int>(s), static_cast<int>(t));
    auto pi0 = canonical_pi(line, 0);
    Int base = s >= t ? 1 : s + 1;
    for (Int p = 1; p <= e; ++p)
      REQUIRE(pi_position(h, p) ==
              Rat(2 * chain.f[p] + pi0[static_cast<int>(p)]) -
                  Rat(2 * chain.f[base] + pi0[static_cast<int>(base)]));
    ++done;
  }
}

TEST_CASE("reduce_kappa and clearing denominators") {
  HeckeParams h;
  h.e = 2;
  h.d = 5;
  h.params.push_back({RootAngle(0, 1), Rat(0), 0});
  h.params.push_back({RootAngle(0, 1), Rat(-1, 2), 1});
  auto [h1, f1] = reduce_kappa(h, Fraction(2, 5));
  REQUIRE(h1.params[1].v == Rat(-1));
  REQUIRE(f1.kappa == 1);
  REQUIRE(f1.d == 5);
  auto [h2, f2] = clear_denominators(h1, f1);
  REQUIRE(h2.params[1].v == Rat(-1));  // already integral, N = 1
  REQUIRE(f2.d == 5);

  HeckeParams g;
  g.e = 2;
  g.d = 7;
  g.params.push_back({RootAngle(0, 1), Rat(0), 0});
  g.params.push_back({RootAngle(1, 2), Rat(-7, 2), 1});
  auto [g1, e1] = reduce_kappa(g, Fraction(3, 7));
  REQUIRE(g1.params[1].v == Rat(-21, 2));
  auto [g2, e2] = clear_denominators(g1, e1);
  REQUIRE(g2.params[1].v == Rat(-21));
  REQUIRE(g2.d == 14);
  REQUIRE(e2.kappa == 1);
  REQUIRE(e2.d == 14);
}

TEST_CASE("from_block and specialization on a generated GL block") {
  GroupFamily gl{FamilyKind::GL, "GL"};
  Block b = block_members(gl, Partition(), 3);
  classical_tree(b);
  auto h = from_block(b);
  auto typed = classify_type(h);
  REQUIRE(typed.t() == 0);
  REQUIRE(typed.s() == 3);
  auto spec = specialization_bijection(b, Fraction(1, 3));
  REQUIRE(spec.angle.size() == 3);
  // trivial character anchors at angle 0
  REQUIRE(spec.angle[spec.anchor] == Rat(0));
}
