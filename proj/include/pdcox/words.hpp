#pragma once

#include <vector>

#include "pdcox/rational.hpp"

namespace pdcox {

// word in a free group: letter k > 0 is generator k-1, letter k < 0 is the
// inverse of generator -k-1
using Word = std::vector<int>;

inline Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

// a^-1 b^-1 a b
inline Word commutator(const Word& a, const Word& b) {
  return free_reduce(concat(concat(inverse_word(a), inverse_word(b)), concat(a, b)));
}

inline Word word_power(const Word& w, const Int& n) {
  Word base = n < 0 ? inverse_word(w) : w;
  Int reps = abs(n);
  if (reps > 1000000) throw SizeGuardError("word power exponent too large");
  Word out;
  for (Int i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

// generator g (0-based) raised to the n-th power
inline Word generator_power(size_t g, const Int& n) {
  return word_power(Word{static_cast<int>(g) + 1}, n);
}

}  // namespace pdcox
