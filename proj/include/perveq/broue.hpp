// The desk-scale consistency check between the two descriptions of the
// bijection underlying a perverse equivalence for a weight-1 block: the
// star-algebra construction driven by the perversity function, and the
// specialization of the Hecke parameters at q = e^{2 pi i kappa / d}.
#pragma once

#include "perveq/blocks.hpp"
#include "perveq/hecke.hpp"
#include "perveq/star_algebra.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace perveq {

// Perversity function and parities transported from the characters of a
// block to the edges of its Brauer tree through the peeling pairing.
struct EdgeData {
  PerversityFn pi;
  std::vector<int> parities;
  std::vector<int> edge_of_char;  // character index -> edge id
};

inline EdgeData edge_data(const Block& b, const Fraction& frac) {
  EdgeData out;
  out.pi = PerversityFn(static_cast<int>(b.e));
  out.parities.assign(b.e + 1, 1);
  out.edge_of_char.assign(b.chars.size(), 0);
  auto paired = char_edge_bijection(b.tree);
  for (size_t i = 0; i < b.chars.size(); ++i) {
    int edge = paired[b.vertex_of_char[i]];
    out.edge_of_char[i] = edge;
    out.pi[edge] = pi_char(b, i, frac);
    out.parities[edge] = char_parity(b, i, frac);
  }
  return out;
}

struct BroueCheck {
  bool ok = true;
  std::string detail;
  std::vector<int> position_of_char;  // star position per character
  Rat offset{0};                      // constant angle difference, in turns
};

// Runs bijection_for on the transported perversity function and compares
// with the specialization bijection: the angle of character i must differ
// from (position_i - 1)/e by a constant.
inline BroueCheck broue_consistency(const Block& b, const Fraction& frac,
                                    bool verify_green = true) {
  BroueCheck out;
  auto ed = edge_data(b, frac);
  BijectionResult bij;
  try {
    bij = bijection_for(b.tree, ed.pi, ed.parities, verify_green);
  } catch (const std::exception& ex) {
    out.ok = false;
    out.detail = std::string("bijection_for failed: ") + ex.what();
    return out;
  }
  SpecializationBijection spec;
  try {
    spec = specialization_bijection(b, frac);
  } catch (const std::exception& ex) {
    out.ok = false;
    out.detail = std::string("specialization failed: ") + ex.what();
    return out;
  }
  out.position_of_char.assign(b.chars.size(), 0);
  std::optional<Rat> offset;
  for (size_t i = 0; i < b.chars.size(); ++i) {
    int pos = bij.position_of_edge[ed.edge_of_char[i]];
    out.position_of_char[i] = pos;
    Rat diff = frac01(spec.angle[i] - Rat(pos - 1, b.e));
    if (!offset) offset = diff;
    if (diff != *offset) {
      out.ok = false;
      std::ostringstream os;
      os << "character " << b.chars[i].name << " at angle "
         << to_string(spec.angle[i]) << " vs position " << pos
         << " (offset " << to_string(diff) << " != " << to_string(*offset)
         << ")";
      out.detail = os.str();
      return out;
    }
  }
  out.offset = offset.value_or(Rat(0));
  return out;
}

// The full Hecke pipeline for a classical block: parameters, kappa
// reduction, denominator clearing, the perturbation chain, and the pi
// bookkeeping against exact cyclotomic arithmetic.
struct PipelineReport {
  bool ok = true;
  std::vector<std::string> failures;
  Int chain_length = 0;
};

inline PipelineReport hecke_pipeline(const Block& b, const Fraction& frac) {
  PipelineReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  try {
    auto h0 = from_block(b);
    auto [h1, f1] = reduce_kappa(h0, frac);
    auto [h1b, f1b] = clear_denominators(h1, f1);
    auto [h2, f2] = ensure_even_ambiance(h1b, f1b);
    auto typed = classify_type(h2);
    Int s = typed.s(), t = typed.t(), e = typed.e();
    auto chain = chain_to_coxeter(typed);
    rep.chain_length = static_cast<Int>(chain.steps.size());
    if (!chain.endpoint.same_parameters(coxeter(s, t, typed.d)))
      fail("endpoint is not the Coxeter algebra");
    for (size_t k = 0; k + 1 < chain.steps.size(); ++k) {
      const auto& I = chain.steps[k].permuted_positions;
      const auto& J = chain.steps[k + 1].permuted_positions;
      for (Int x : I)
        if (std::find(J.begin(), J.end(), x) == J.end())
          fail("permuted sets are not nested");
      if (static_cast<Int>(I.size()) >= e) fail("improper permuted set");
    }
    // pi bookkeeping: pi differences of the block characters match
    // 2 f(position) + canonical line value, up to one constant
    auto line = BrauerTree::line(static_cast<int>(s), static_cast<int>(t));
    auto pi0 = canonical_pi(line, 0);
    auto char_at = [&](Int p) {
      return p <= s ? typed.a_char[p - 1] : typed.b_char[p - s - 1];
    };
    std::optional<Rat> constant;
    for (Int p = 1; p <= e; ++p) {
      Int ci = char_at(p);
      Rat actual = Rat(pi_char(b, static_cast<size_t>(ci), frac));
      Rat predicted = Rat(2 * chain.f[p] + pi0[static_cast<int>(p)]);
      Rat diff = actual - predicted;
      if (!constant) constant = diff;
      if (diff != *constant)
        fail("pi bookkeeping failed at " + b.chars[ci].name);
      // cross-check against exact pi on the cleared relative degrees
      Rat rd = pi_rel(relative_degree(h2, static_cast<size_t>(p - 1)),
                      relative_degree(h2, 0), f2) -
               (Rat(pi_char(b, static_cast<size_t>(ci), frac)) -
                Rat(pi_char(b, static_cast<size_t>(char_at(1)), frac)));
      if (rd != Rat(0))
        fail("relative-degree pi mismatch at " + b.chars[ci].name);
    }
    // the specialization bijection and the star-algebra bijection agree
    auto bc = broue_consistency(b, frac, false);
    if (!bc.ok) fail(bc.detail);
  } catch (const std::exception& ex) {
    fail(ex.what());
  }
  return rep;
}

}  // namespace perveq
