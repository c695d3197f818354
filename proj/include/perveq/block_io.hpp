// Parsing of .block data files, the textual degree grammar, root-of-unity
// literals and the rotation-system tree format.
//
// Degree grammar:
//   degree := [sign] [int "*"] term ("*" term)* ["/" denom]
//   term   := "q" ["^" rat]  |  "P" nat [prime-mark] ["^" nat]
//   prime-mark := "'" | "''"
//   denom  := [posint] ["r2" | "r3"]
//   rat    := int ["/" posint] — parenthesised when fractional, e.g. q^(9/2)
// Root-of-unity literal: E(n,k) = e^{2 pi i k / n}; aliases i = E(4,1),
// theta = E(3,1), psi = E(8,1), xi = E(12,1), zeta = E(5,1).
#pragma once

#include "perveq/blocks.hpp"
#include "perveq/cyclo.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace perveq {

namespace io_detail {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument("expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos) +
                                  " in '" + s + "'");
  }
  Int integer() {
    bool neg = eat('-');
    if (!isdigit(peek())) throw std::invalid_argument("expected integer in '" + s + "'");
    Int v = 0;
    while (isdigit(peek())) v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }
  Rat rational() {
    bool paren = eat('(');
    Int num = integer();
    Int den = 1;
    if (eat('/')) den = integer();
    if (paren) expect(')');
    return Rat(num, den);
  }
};

}  // namespace io_detail

// The primed cyclotomic factors over Z[sqrt 2] and Z[sqrt 3]; the
// double-primed factor vanishes at e^{2 pi i / n}.
inline CycloProduct primed_cyclotomic(Int n, int primes, Int mult = 1) {
  return CycloProduct::cyclotomic_primed(n, primes == 2, mult);
}

// Parses the degree grammar.
inline CycloProduct parse_degree(const std::string& text) {
  io_detail::Cursor c{text};
  CycloProduct f;
  bool neg = c.eat('-');
  bool first = true;
  for (;;) {
    if (c.eof()) break;
    if (c.peek() == '/') break;
    if (!first) {
      if (!c.eat('*')) break;
    }
    first = false;
    if (isdigit(c.peek())) {
      f *= CycloProduct::scalar(Rat(c.integer()));
    } else if (c.eat('q')) {
      Rat e(1);
      if (c.eat('^')) e = c.rational();
      f *= CycloProduct::q_power(e);
    } else if (c.eat('P')) {
      Int n = c.integer();
      int primes = 0;
      while (c.eat('\'')) ++primes;
      Int m = 1;
      if (c.eat('^')) m = c.integer();
      f *= primes ? primed_cyclotomic(n, primes, m)
                  : CycloProduct::cyclotomic(n, m);
    } else if (c.eat('r')) {
      Int which = c.integer();
      if (which == 2)
        f *= CycloProduct::scalar(Rat(1), 1, 0);
      else if (which == 3)
        f *= CycloProduct::scalar(Rat(1), 0, 1);
      else
        throw std::invalid_argument("unknown radical r" +
                                    std::to_string(which));
    } else {
      throw std::invalid_argument("bad degree token in '" + text + "'");
    }
  }
  if (c.eat('/')) {
    Int den = 1;
    if (isdigit(c.peek())) den = c.integer();
    int s2 = 0, s3 = 0;
    if (c.eat('r')) {
      Int which = c.integer();
      (which == 2 ? s2 : s3) = 1;
      if (which != 2 && which != 3)
        throw std::invalid_argument("unknown radical in denominator");
    }
    f *= CycloProduct::scalar(Rat(1, den), -s2, -s3);
  }
  if (!c.eof())
    throw std::invalid_argument("trailing input in degree '" + text + "'");
  if (neg) f *= CycloProduct::scalar(Rat(-1));
  return f;
}

// Root-of-unity literals: E(n,k) plus the aliases.
inline RootAngle parse_root(io_detail::Cursor& c) {
  static const std::map<std::string, RootAngle> aliases = {
      {"i", RootAngle(1, 4)},    {"theta", RootAngle(1, 3)},
      {"psi", RootAngle(1, 8)},  {"xi", RootAngle(1, 12)},
      {"zeta", RootAngle(1, 5)},
  };
  if (c.eat('E')) {
    c.expect('(');
    Int n = c.integer();
    c.expect(',');
    Int k = c.integer();
    c.expect(')');
    return RootAngle(k, n);
  }
  for (const auto& [name, angle] : aliases) {
    if (c.s.compare(c.pos, name.size(), name) == 0) {
      c.pos += name.size();
      return angle;
    }
  }
  throw std::invalid_argument("expected root of unity in '" + c.s + "'");
}

// Hecke parameter: [-] [root "*"] ["q" ["^" rat]] | [-] root | "1".
struct ParsedParam {
  RootAngle omega;
  Rat exponent{0};  // the printed exponent aA/e
};

inline ParsedParam parse_param(const std::string& text) {
  io_detail::Cursor c{text};
  ParsedParam out;
  bool neg = c.eat('-');
  if (c.peek() == 'E' || isalpha(c.peek())) {
    if (c.peek() == 'q') {
      // fallthrough to the q part
    } else if (c.peek() == '1') {
    } else {
      out.omega = parse_root(c);
      if (!c.eof()) c.expect('*');
    }
  }
  if (c.eat('1')) {
    // literal one
  } else if (c.eat('q')) {
    out.exponent = Rat(1);
    if (c.eat('^')) out.exponent = c.rational();
  }
  if (neg) out.omega = out.omega.negated();
  if (!c.eof())
    throw std::invalid_argument("trailing input in parameter '" + text + "'");
  return out;
}

namespace io_detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// Splits on commas outside braces (character names contain commas).
inline std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace io_detail

// Loads one .block file.  The parser is strict: every malformed line throws
// with the file name and line number.
inline Block load_block(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Block b;
  std::string line;
  int lineno = 0;
  enum class State { Header, Chars, Tree, Done } state = State::Header;
  std::vector<std::string> tree_lines;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                             msg);
  };
  std::string a_column = "absolute";
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = io_detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (state == State::Header) {
      if (t == "chars:") {
        state = State::Chars;
        continue;
      }
      auto colon = t.find(':');
      if (colon == std::string::npos) fail("expected 'key: value'");
      std::string key = io_detail::trim(t.substr(0, colon));
      std::string val = io_detail::trim(t.substr(colon + 1));
      if (key == "family")
        b.family = GroupFamily::parse(val);
      else if (key == "d")
        b.d_label = val;
      else if (key == "fracd")
        b.d = std::stoll(val);
      else if (key == "e")
        b.e = std::stoll(val);
      else if (key == "block")
        ;  // index within the d-section, informational
      else if (key == "cuspidal_pair")
        b.cuspidal_name = val;
      else if (key == "cuspidal")
        b.cuspidal = parse_degree(val);
      else if (key == "conjectural")
        b.conjectural = val == "true";
      else if (key == "a_column")
        a_column = val;
      else if (key == "source")
        b.source = val;
      else if (key == "kappa") {
        for (const auto& k : io_detail::split(val, ','))
          b.kappa_cols.push_back(std::stoll(io_detail::trim(k)));
      } else if (key == "embedding")
        ;  // 'asdrawn' note
      else
        fail("unknown header key '" + key + "'");
    } else if (state == State::Chars) {
      if (t == "tree:") {
        state = State::Tree;
        continue;
      }
      auto cells = io_detail::split(t, '\t');
      if (cells.size() != 5) fail("character row needs 5 tab-separated cells");
      UnipotentCharacter ch;
      ch.name = io_detail::trim(cells[0]);
      ch.label = ch.name;
      ch.degree = parse_degree(io_detail::trim(cells[1]));
      Int A_col = std::stoll(io_detail::trim(cells[2]));
      auto par = parse_param(io_detail::trim(cells[3]));
      ch.omega = par.omega;
      std::vector<Int> pis;
      for (const auto& p : io_detail::split(cells[4], ','))
        pis.push_back(std::stoll(io_detail::trim(p)));
      if (pis.size() != b.kappa_cols.size())
        fail("pi value count mismatch for " + ch.name);
      // cross-field checks: A and the parameter exponent
      Rat A_expect = ch.degree.A_value();
      if (a_column == "relative") A_expect -= b.cuspidal.A_value();
      if (Rat(A_col) != A_expect)
        fail("A column " + std::to_string(A_col) + " does not match degree (" +
             to_string(A_expect) + ") for " + ch.name);
      Rat aA_rel = ch.degree.aA_value() - b.cuspidal.aA_value();
      if (par.exponent * Rat(b.e) != aA_rel)
        fail("parameter exponent does not equal aA/e for " + ch.name);
      ch.side = par.omega.is_one() ? +1 : -1;
      b.pi_table.push_back(std::move(pis));
      b.chars.push_back(std::move(ch));
    } else if (state == State::Tree) {
      if (t == "end") {
        state = State::Done;
        continue;
      }
      tree_lines.push_back(t);
    }
  }
  if (state != State::Done) fail("missing tree/end sections");
  if (static_cast<Int>(b.chars.size()) != b.e) fail("e does not match rows");

  // tree: vertex lines with edges named by characters
  std::map<std::string, int> vid;
  std::vector<std::vector<std::string>> rot_names;
  std::vector<std::pair<int, Int>> exceptional;
  for (const auto& t : tree_lines) {
    std::istringstream is(t);
    std::string kw, name;
    is >> kw >> name;
    if (kw != "vertex") throw std::runtime_error(path + ": bad tree line " + t);
    std::string rest;
    std::getline(is, rest);
    Int mult = 1;
    auto excpos = rest.find("exceptional");
    bool exc = excpos != std::string::npos;
    if (exc) {
      auto mpos = rest.find("m=");
      if (mpos != std::string::npos)
        mult = std::strtoll(rest.c_str() + mpos + 2, nullptr, 10);
    }
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error(path + ": tree line missing ':'");
    std::vector<std::string> edges;
    for (auto& e : io_detail::split_names(rest.substr(colon + 1)))
      edges.push_back(io_detail::trim(e));
    int id = static_cast<int>(rot_names.size());
    vid[name] = id;
    rot_names.push_back(edges);
    if (exc) exceptional.push_back({id, mult});
  }
  if (exceptional.size() != 1)
    throw std::runtime_error(path + ": need exactly one exceptional vertex");
  // edge names appear exactly twice; build edge ids
  std::map<std::string, int> edge_id;
  std::map<std::string, std::vector<int>> edge_ends;
  for (size_t v = 0; v < rot_names.size(); ++v)
    for (const auto& e : rot_names[v]) edge_ends[e].push_back(static_cast<int>(v));
  BrauerTree tree;
  tree.exceptional = exceptional[0].first;
  tree.multiplicity = exceptional[0].second;
  tree.rotation.resize(rot_names.size());
  tree.vertex_name.assign(rot_names.size(), "");
  tree.edge_ends.push_back({0, 0});
  for (auto& [name, ends] : edge_ends) {
    if (ends.size() != 2)
      throw std::runtime_error(path + ": edge '" + name +
                               "' not incident to exactly two vertices");
    edge_id[name] = static_cast<int>(tree.edge_ends.size());
    tree.edge_ends.push_back({ends[0], ends[1]});
  }
  for (size_t v = 0; v < rot_names.size(); ++v)
    for (const auto& e : rot_names[v]) tree.rotation[v].push_back(edge_id[e]);
  tree.check();
  if (tree.num_edges() != static_cast<int>(b.e))
    throw std::runtime_error(path + ": tree edge count != e");
  b.tree = tree;

  // recover the character <-> vertex assignment by peeling: the edge named
  // after a character pairs with that character's vertex
  auto paired = char_edge_bijection(b.tree);
  std::map<int, std::string> name_of_edge;
  for (auto& [name, id] : edge_id) name_of_edge[id] = name;
  std::map<std::string, int> vertex_of_name;
  for (int v = 0; v < b.tree.num_vertices(); ++v) {
    if (v == b.tree.exceptional) continue;
    vertex_of_name[name_of_edge[paired[v]]] = v;
  }
  b.vertex_of_char.assign(b.chars.size(), -1);
  for (size_t i = 0; i < b.chars.size(); ++i) {
    auto it = vertex_of_name.find(b.chars[i].name);
    if (it == vertex_of_name.end())
      throw std::runtime_error(path + ": tree has no edge named '" +
                               b.chars[i].name + "'");
    b.vertex_of_char[i] = it->second;
    b.tree.vertex_name[it->second] = b.chars[i].name;
  }
  return b;
}

// Loads every .block file of the directory, sorted by file name; the first
// parse or consistency error aborts.
inline std::vector<Block> load_all(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".block")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  std::vector<Block> out;
  for (const auto& f : files) out.push_back(load_block(f));
  return out;
}

// Resolves the data directory: explicit argument, PERVEQ_DATA, or the
// compile-time default.
inline std::string data_dir(const std::string& override_dir = "") {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("PERVEQ_DATA")) return env;
#ifdef PERVEQ_DATA_DIR
  return PERVEQ_DATA_DIR;
#else
  return "data";
#endif
}


// Greedy factorization of a root multiset into cyclotomic tokens (including
// the primed factors when the plain ones do not divide).
inline std::string degree_to_string(const CycloProduct& f) {
  std::vector<std::string> toks;
  Int num = f.coeff().numerator();
  if (num < 0) num = -num;
  if (num != 1) toks.push_back(std::to_string(num));
  if (f.q_exp() != Rat(0)) {
    if (f.q_exp() == Rat(1))
      toks.push_back("q");
    else if (is_integer(f.q_exp()))
      toks.push_back("q^" + to_string(f.q_exp()));
    else
      toks.push_back("q^(" + to_string(f.q_exp()) + ")");
  }
  std::map<RootAngle, Int> roots = f.roots();
  std::set<Int> ns;
  for (const auto& [r, m] : roots) ns.insert(r.t.denominator());
  auto extract = [&](const CycloProduct& phi, const std::string& label) {
    for (;;) {
      Int m = std::numeric_limits<Int>::max();
      for (const auto& [r, mm] : phi.roots())
        m = std::min(m, roots.count(r) ? roots[r] : 0);
      if (m <= 0) break;
      for (const auto& [r, mm] : phi.roots()) {
        roots[r] -= m;
        if (!roots[r]) roots.erase(r);
      }
      toks.push_back(m == 1 ? label : label + "^" + std::to_string(m));
    }
  };
  for (Int n : ns) {
    extract(CycloProduct::cyclotomic(n), "P" + std::to_string(n));
    if (n == 8 || n == 12 || n == 24) {
      extract(primed_cyclotomic(n, 1), "P" + std::to_string(n) + "'");
      extract(primed_cyclotomic(n, 2), "P" + std::to_string(n) + "''");
    }
  }
  if (!roots.empty())
    throw std::domain_error("degree is not a product of cyclotomics");
  std::string body;
  for (size_t i = 0; i < toks.size(); ++i)
    body += (i ? "*" : "") + toks[i];
  if (body.empty()) body = "1";
  std::string den;
  Int d = f.coeff().denominator();
  if (f.coeff().numerator() < 0) body = "-" + body;
  if (d != 1) den += std::to_string(d);
  if (f.sqrt2_exp() == -1) den += "r2";
  if (f.sqrt3_exp() == -1) den += "r3";
  if (f.sqrt2_exp() > 0 || f.sqrt3_exp() > 0 || f.sqrt2_exp() < -1 ||
      f.sqrt3_exp() < -1)
    throw std::domain_error("scalar radicals out of printable range");
  return den.empty() ? body : body + "/" + den;
}

// "[3,1,1]" -> Partition
inline Partition parse_partition(const std::string& s) {
  std::string t = io_detail::trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("partition must look like [3,1,1]");
  std::vector<Int> parts;
  std::string inner = t.substr(1, t.size() - 2);
  if (!io_detail::trim(inner).empty())
    for (const auto& p : io_detail::split(inner, ','))
      parts.push_back(std::stoll(io_detail::trim(p)));
  return Partition(parts);
}

// "{4,2,1}" -> BetaSet
inline BetaSet parse_beta(const std::string& s) {
  std::string t = io_detail::trim(s);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw std::invalid_argument("beta-set must look like {4,2,1}");
  std::vector<Int> elems;
  std::string inner = t.substr(1, t.size() - 2);
  if (!io_detail::trim(inner).empty())
    for (const auto& p : io_detail::split(inner, ','))
      elems.push_back(std::stoll(io_detail::trim(p)));
  return BetaSet(elems);
}

// "{{4,2,1},{2,0}}" -> Symbol
inline Symbol parse_symbol(const std::string& s) {
  std::string t = io_detail::trim(s);
  if (t.size() < 4 || t.front() != '{' || t.back() != '}')
    throw std::invalid_argument("symbol must look like {{..},{..}}");
  std::string inner = t.substr(1, t.size() - 2);
  auto rows = io_detail::split_names(inner);
  if (rows.size() != 2)
    throw std::invalid_argument("symbol needs exactly two rows");
  return Symbol(parse_beta(rows[0]), parse_beta(rows[1]));
}

}  // namespace perveq
