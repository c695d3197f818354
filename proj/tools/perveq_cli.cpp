// Command-line front end: exact perversity computations, block construction,
// the star-algebra algorithm, Hecke-algebra reductions and the verification
// suites.

#include "perveq/block_io.hpp"
#include "perveq/broue.hpp"
#include "perveq/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace perveq;

namespace {

Fraction parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Fraction(std::stoll(s), 1);
  return Fraction(std::stoll(s.substr(0, slash)),
                  std::stoll(s.substr(slash + 1)));
}

std::string uniserial_str(const Uniserial& u, int e) {
  if (u.zero()) return "0";
  std::string out;
  for (Int k = u.length - 1; k >= 0; --k) {
    int layer = ((u.socle - static_cast<int>(k) - 1) % e + e) % e + 1;
    out += (out.empty() ? "" : "/") + std::to_string(layer);
  }
  return out;
}

std::string alt_sum_str(const std::vector<Int>& v) {
  std::string out;
  for (int i = static_cast<int>(v.size()) - 1; i >= 1; --i) {
    if (v[i] == 0) continue;
    std::string term = std::to_string(i);
    if (std::abs(v[i]) > 1)
      term += "*" + std::to_string(std::abs(v[i]));
    if (out.empty())
      out = (v[i] < 0 ? "-" : "") + term;
    else
      out += (v[i] < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

int run_algorithm(int e, const std::string& pis, Int lbar) {
  PerversityFn pi(e);
  auto cells = io_detail::split(pis, ',');
  if (static_cast<int>(cells.size()) != e) {
    std::cerr << "need exactly e pi values\n";
    return 2;
  }
  for (int i = 1; i <= e; ++i)
    pi[i] = std::stoll(io_detail::trim(cells[i - 1]));
  auto res = run_generic(e, pi);

  std::cout << "complexes:\n";
  for (int i = 1; i <= e; ++i) {
    std::cout << "X_" << i << ":";
    for (int p : res[i].proj_labels) std::cout << " P" << p << " ->";
    std::cout << " C_" << i << "\n";
  }
  std::cout << "cohomology:\n";
  for (int i = 1; i <= e; ++i) {
    if (res[i].proj_labels.empty()) continue;
    bool any = false;
    std::string line = "X_" + std::to_string(i) + ":";
    for (size_t j = 0; j < res[i].cohomology.size(); ++j) {
      const auto& u = res[i].cohomology[j];
      if (u.zero()) continue;
      Int deg = res[i].pi - static_cast<Int>(j);
      line += std::string(any ? "," : "") + " H^-" + std::to_string(deg) +
              " = " + uniserial_str(u, e);
      any = true;
    }
    if (any) std::cout << line << "\n";
  }
  std::cout << "total:\n";
  for (int i = 1; i <= e; ++i)
    std::cout << "X_" << i << ": " << alt_sum_str(res[i].alt_sum) << "\n";
  if (lbar > 0) {
    auto con = run_concrete(lbar, e, pi);
    std::cout << "green correspondents (lbar = " << lbar << "):\n";
    for (int i = 1; i <= e; ++i) {
      const auto& g = con[i].green;
      int top = ((g.socle - static_cast<int>(g.dim % e)) % e + e) % e + 1;
      std::cout << "C_" << i << ": dim " << g.dim << ", socle " << g.socle
                << ", top " << top << "\n";
    }
  }
  auto m = decomposition_matrix(res, pi);
  std::cout << "decomposition matrix:\n";
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) std::cout << (j ? " " : "") << m.rows[i][j];
    std::cout << "\n";
  }
  std::cout << "exceptional:";
  for (Int x : m.exceptional_row) std::cout << " " << x;
  std::cout << "\n";
  return 0;
}

void print_block(const Block& b, const std::vector<Int>& kappas) {
  std::cout << "family " << b.family.str() << ", d = " << b.d_label
            << ", e = " << b.e << ", cuspidal " << b.cuspidal_name << "\n";
  std::cout << "characters:\n";
  for (size_t i = 0; i < b.chars.size(); ++i) {
    std::cout << "  " << b.chars[i].name << "\tdeg "
              << degree_to_string(b.chars[i].degree) << "\taA/e "
              << to_string(aA_char(b, i) / Rat(b.e));
    for (Int k : kappas) {
      if (std::gcd(k % b.d == 0 ? b.d : k, b.d) != 1) continue;
      std::cout << "\tpi(" << k << "/" << b.d
                << ") = " << pi_char(b, i, b.fraction(k));
    }
    std::cout << "\n";
  }
  auto paired = char_edge_bijection(b.tree);
  std::map<int, std::string> edge_name;
  for (int w = 0; w < b.tree.num_vertices(); ++w)
    if (w != b.tree.exceptional)
      edge_name[paired[w]] = b.tree.vertex_name[w].empty()
                                 ? "e" + std::to_string(paired[w])
                                 : b.tree.vertex_name[w];
  std::cout << "tree:\n";
  for (int v = 0; v < b.tree.num_vertices(); ++v) {
    std::cout << "  vertex v" << v;
    if (v == b.tree.exceptional)
      std::cout << " exceptional m=" << b.tree.multiplicity;
    std::cout << " :";
    bool first = true;
    for (int eid : b.tree.rotation[v]) {
      std::cout << (first ? " " : ", ") << edge_name[eid];
      first = false;
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact perversity-function and Brauer-tree toolkit"};
  app.require_subcommand(1);

  auto* cpi = app.add_subcommand("pi", "evaluate pi_{kappa/d} on a degree");
  std::string pi_f, pi_frac;
  cpi->add_option("--f", pi_f, "degree string, e.g. q*P2^2*P6/2")->required();
  cpi->add_option("--frac", pi_frac, "fraction kappa/d")->required();

  auto* cdeg = app.add_subcommand("degree", "generic degree of a character");
  std::string deg_family, deg_label;
  cdeg->add_option("--family", deg_family, "GL, GU, BC, D or 2D")->required();
  cdeg->add_option("--label", deg_label,
                   "partition [..] or symbol {{..},{..}}")
      ->required();

  auto* cblk = app.add_subcommand("block", "weight-1 block over a core");
  std::string blk_family, blk_core, blk_kappa = "1";
  Int blk_d = 1;
  cblk->add_option("--family", blk_family)->required();
  cblk->add_option("--core", blk_core, "core partition or symbol")->required();
  cblk->add_option("--d", blk_d)->required();
  cblk->add_option("--kappa", blk_kappa, "comma-separated kappa list");

  auto* ctree = app.add_subcommand("tree", "print the tree of a block file");
  std::string tree_file;
  bool tree_dot = false;
  ctree->add_option("--file", tree_file)->required();
  ctree->add_flag("--dot", tree_dot, "emit Graphviz DOT");

  auto* calg =
      app.add_subcommand("algorithm", "run the star-algebra algorithm");
  int alg_e = 1;
  std::string alg_pi;
  Int alg_lbar = 0;
  calg->add_option("--e", alg_e)->required();
  calg->add_option("--pi", alg_pi, "comma-separated perversity values")
      ->required();
  calg->add_option("--lbar", alg_lbar, "explicit module dimensions");

  auto* chk = app.add_subcommand("hecke", "Hecke parameters of a block file");
  std::string hk_block, hk_frac = "1/1";
  bool hk_chain = false;
  chk->add_option("--block", hk_block)->required();
  chk->add_option("--frac", hk_frac)->required();
  chk->add_flag("--chain", hk_chain, "print the perturbation chain");

  auto* cver = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all", ver_data;
  unsigned ver_seed = 1;
  int ver_scale = 100;
  cver->add_option("suite", suite, "suite name or 'all'");
  cver->add_option("--seed", ver_seed);
  cver->add_option("--scale", ver_scale, "percentage of the full workload");
  cver->add_option("--data", ver_data, "data directory override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cpi) {
      auto f = parse_degree(pi_f);
      Fraction fr = parse_fraction(pi_frac);
      std::cout << "pi = " << to_string(f.pi(fr)) << "\n"
                << "a = " << to_string(f.a_value()) << "\n"
                << "A = " << to_string(f.A_value()) << "\n"
                << "phi = " << to_string(f.phi(fr)) << "\n";
      return 0;
    }
    if (*cdeg) {
      GroupFamily fam = GroupFamily::parse(deg_family);
      CharLabel label;
      if (deg_label.find("{{") == 0)
        label = parse_symbol(deg_label);
      else
        label = parse_partition(deg_label);
      std::cout << degree_to_string(degree(fam, label)) << "\n";
      return 0;
    }
    if (*cblk) {
      GroupFamily fam = GroupFamily::parse(blk_family);
      CharLabel core;
      if (blk_core.find("{{") == 0)
        core = parse_symbol(blk_core);
      else
        core = parse_partition(blk_core);
      Block b = block_members(fam, core, blk_d);
      classical_tree(b);
      b.tree.vertex_name.assign(b.tree.num_vertices(), "");
      for (size_t i = 0; i < b.chars.size(); ++i)
        b.tree.vertex_name[b.vertex_of_char[i]] = b.chars[i].name;
      std::vector<Int> kappas;
      for (const auto& k : io_detail::split(blk_kappa, ','))
        kappas.push_back(std::stoll(io_detail::trim(k)));
      print_block(b, kappas);
      return 0;
    }
    if (*ctree) {
      Block b = load_block(tree_file);
      if (tree_dot) {
        std::cout << "graph brauer {\n  node [shape=circle];\n";
        for (int v = 0; v < b.tree.num_vertices(); ++v) {
          std::cout << "  v" << v << " [label=\""
                    << (v == b.tree.exceptional ? std::string("*")
                                                : b.tree.vertex_name[v])
                    << "\"";
          if (v == b.tree.exceptional) std::cout << ", style=filled";
          std::cout << "];\n";
        }
        for (int e = 1; e <= b.tree.num_edges(); ++e)
          std::cout << "  v" << b.tree.edge_ends[e][0] << " -- v"
                    << b.tree.edge_ends[e][1] << ";\n";
        std::cout << "}\n";
      } else {
        print_block(b, b.kappa_cols);
      }
      return 0;
    }
    if (*calg) return run_algorithm(alg_e, alg_pi, alg_lbar);
    if (*chk) {
      Block b = load_block(hk_block);
      Fraction fr = parse_fraction(hk_frac);
      auto h = from_block(b);
      std::cout << "parameters:";
      for (const auto& p : h.params)
        std::cout << " (" << to_string(p.omega.t) << ", " << to_string(p.v)
                  << ")";
      std::cout << "\n";
      auto spec = specialization_bijection(b, fr);
      std::cout << "specialization order:";
      for (int i : spec.order) std::cout << " " << b.chars[i].name;
      std::cout << "\n";
      bool real = true;
      for (const auto& p : h.params)
        if (!p.omega.is_real()) real = false;
      if (!real) {
        std::cout << "(non-real parameters: no (s,t) normal form)\n";
        return 0;
      }
      auto [h1, f1] = reduce_kappa(h, fr);
      auto [h2, f2] = clear_denominators(h1, f1);
      auto [h3, f3] = ensure_even_ambiance(h2, f2);
      auto typed = classify_type(h3);
      std::cout << "type (" << typed.s() << "," << typed.t() << "), ambiance "
                << typed.d << "\n";
      if (hk_chain) {
        auto chain = chain_to_coxeter(typed);
        for (size_t k = 0; k < chain.steps.size(); ++k) {
          const auto& st = chain.steps[k];
          std::cout << "step " << k + 1 << " [" << str(st.kind)
                    << "] permuted {";
          for (size_t j = 0; j < st.permuted_positions.size(); ++j)
            std::cout << (j ? "," : "") << st.permuted_positions[j];
          std::cout << "} -> " << st.next.str() << "\n";
        }
        std::cout << "endpoint: " << chain.endpoint.str() << " (Coxeter)\n";
      }
      return 0;
    }
    if (*cver) {
      VerifyOptions opt;
      opt.seed = ver_seed;
      opt.scale = ver_scale;
      opt.data = ver_data;
      bool any_fail = false, found = false;
      for (const auto& [name, fn] : all_suites()) {
        if (suite != "all" && suite != name) continue;
        found = true;
        auto rep = fn(opt);
        std::cout << "suite\t" << rep.suite << "\t"
                  << (rep.ok() ? "PASS" : "FAIL") << "\t" << rep.cases
                  << " cases, " << static_cast<long>(rep.wall_ms) << " ms\n";
        if (rep.skipped)
          std::cout << rep.suite << "\tconjectural\tSKIP-conjectural\t"
                    << rep.skipped << " blocks\n";
        for (size_t i = 0; i < rep.failures.size() && i < 10; ++i)
          std::cout << rep.suite << "\tcase\tFAIL\t" << rep.failures[i] << "\n";
        if (rep.failures.size() > 10)
          std::cout << rep.suite << "\t(" << rep.failures.size()
                    << " failures total)\n";
        any_fail = any_fail || !rep.ok();
      }
      if (!found) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 2;
      }
      return any_fail ? 1 : 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
