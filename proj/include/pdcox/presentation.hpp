#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pdcox/abelian.hpp"
#include "pdcox/words.hpp"

namespace pdcox {

// finite presentation < generators | relators >
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  void validate() const {
    if (generators.empty()) throw SchemaError("presentation needs at least one generator");
    std::map<std::string, int> seen;
    for (const auto& g : generators) {
      if (g.empty()) throw SchemaError("empty generator name");
      if (seen.count(g)) throw SchemaError("duplicate generator name " + g);
      seen[g] = 1;
    }
    int n = static_cast<int>(generators.size());
    for (const auto& r : relators)
      for (int x : r)
        if (x == 0 || x > n || x < -n) throw SchemaError("relator letter out of range");
  }

  size_t index_of(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == name) return i;
    throw SchemaError("unknown generator " + name);
  }

  // quotient by all commutators: Z^gens modulo the relator exponent vectors
  FGAbelianGroup abelianization() const {
    IntMatrix a(generators.size(), relators.size());
    for (size_t j = 0; j < relators.size(); ++j)
      for (int x : relators[j]) {
        size_t i = static_cast<size_t>(x > 0 ? x - 1 : -x - 1);
        a(i, j) += x > 0 ? 1 : -1;
      }
    return cokernel(a);
  }
};

// text format:
//   gens: a b c
//   a^2
//   b^-1 a b a
// one relator per line after the header; '#' starts a comment
inline Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string t;
    while (ls >> t) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens[0] != "gens:")
        throw SchemaError("expected 'gens:' header", lineno);
      p.generators.assign(tokens.begin() + 1, tokens.end());
      have_header = true;
      p.validate();
      continue;
    }
    Word w;
    for (const auto& tok : tokens) {
      std::string name = tok;
      Int exp = 1;
      size_t caret = tok.find('^');
      if (caret != std::string::npos) {
        name = tok.substr(0, caret);
        Rat q = parse_rational(tok.substr(caret + 1), lineno);
        if (denom(q) != 1) throw SchemaError("exponent must be an integer", lineno);
        exp = numer(q);
      }
      size_t g;
      try {
        g = p.index_of(name);
      } catch (const SchemaError&) {
        throw SchemaError("unknown generator " + name, lineno);
      }
      Word part = generator_power(g, exp);
      w.insert(w.end(), part.begin(), part.end());
    }
    p.relators.push_back(free_reduce(w));
  }
  if (!have_header) throw SchemaError("missing 'gens:' header");
  return p;
}

inline std::string print_word(const Presentation& p, const Word& w) {
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    int x = w[i];
    size_t j = i;
    while (j < w.size() && w[j] == x) ++j;
    long run = static_cast<long>(j - i);
    size_t g = static_cast<size_t>(x > 0 ? x - 1 : -x - 1);
    long exp = x > 0 ? run : -run;
    if (!out.empty()) out += " ";
    out += p.generators[g];
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  if (out.empty()) out = "1";
  return out;
}

inline std::string print_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators) out += print_word(p, r) + "\n";
  return out;
}

}  // namespace pdcox
