#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "pdcox/presentation.hpp"

namespace pdcox {

// complete coset table over the trivial subgroup = regular action of the
// group on itself, rows standardized by breadth-first search from the
// identity so equal groups always produce the same table
struct CosetTable {
  size_t num_generators = 0;
  // row per coset; column 2i is the action of generator i, column 2i+1 of
  // its inverse
  std::vector<std::vector<long>> table;

  size_t order() const { return table.size(); }

  long apply_letter(long c, int letter) const {
    size_t col = letter > 0 ? 2 * static_cast<size_t>(letter - 1)
                            : 2 * static_cast<size_t>(-letter - 1) + 1;
    return table[static_cast<size_t>(c)][col];
  }

  long apply_word(long c, const Word& w) const {
    for (int x : w) c = apply_letter(c, x);
    return c;
  }

  // permutation of the cosets induced by generator i
  std::vector<long> generator_permutation(size_t i) const {
    std::vector<long> perm(table.size());
    for (size_t c = 0; c < table.size(); ++c) perm[c] = table[c][2 * i];
    return perm;
  }

  Int element_order(const Word& w) const {
    Word r = free_reduce(w);
    if (r.empty()) return 1;
    Int n = 1;
    long c = apply_word(0, r);
    while (c != 0) {
      c = apply_word(c, r);
      ++n;
    }
    return n;
  }
};

namespace tcdetail {

struct Enumerator {
  size_t ngens;
  size_t ncols;
  size_t max_cosets;
  std::vector<std::vector<long>> tab;  // -1 = undefined
  std::vector<long> parent;            // union-find over cosets
  size_t live = 0;
  size_t total = 0;

  explicit Enumerator(size_t ngens_, size_t max_cosets_)
      : ngens(ngens_), ncols(2 * ngens_), max_cosets(max_cosets_) {
    new_coset();
  }

  static size_t col(int letter) {
    return letter > 0 ? 2 * static_cast<size_t>(letter - 1)
                      : 2 * static_cast<size_t>(-letter - 1) + 1;
  }
  static size_t inv(size_t c) { return c ^ 1u; }

  long find(long x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }

  bool alive(long x) { return find(x) == x; }

  long new_coset() {
    if (total >= max_cosets)
      throw CosetOverflowError("coset enumeration exceeded " + std::to_string(max_cosets) +
                               " cosets");
    tab.emplace_back(ncols, -1);
    parent.push_back(static_cast<long>(tab.size()) - 1);
    ++live;
    ++total;
    return static_cast<long>(tab.size()) - 1;
  }

  long entry(long c, size_t l) {
    long d = tab[static_cast<size_t>(c)][l];
    if (d < 0) return -1;
    d = find(d);
    tab[static_cast<size_t>(c)][l] = d;
    return d;
  }

  void set_edge(long a, size_t l, long b) {
    tab[static_cast<size_t>(a)][l] = b;
    tab[static_cast<size_t>(b)][inv(l)] = a;
  }

  void coincide(long a, long b) {
    std::vector<std::pair<long, long>> work{{a, b}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      parent[static_cast<size_t>(y)] = x;
      --live;
      for (size_t l = 0; l < ncols; ++l) {
        long d = tab[static_cast<size_t>(y)][l];
        if (d < 0) continue;
        d = find(d);
        long e = entry(x, l);
        if (e < 0) {
          tab[static_cast<size_t>(x)][l] = d;
        } else if (e != d) {
          work.emplace_back(e, d);
        }
        // the reverse edge from d must come back to x now
        long back = entry(d, inv(l));
        if (back < 0)
          tab[static_cast<size_t>(d)][inv(l)] = x;
        else if (back != find(x))
          work.emplace_back(back, x);
      }
    }
  }

  // make the relator hold at coset c, defining cosets as needed
  void scan_and_fill(long c, const Word& w) {
    if (w.empty()) return;
    long f = c;
    size_t i = 0;
    long b = c;
    size_t j = w.size();  // positions i..j-1 unscanned
    for (;;) {
      while (i < j) {
        long nxt = entry(f, col(w[i]));
        if (nxt < 0) break;
        f = nxt;
        ++i;
      }
      if (i == j) {
        if (f != b) coincide(f, b);
        return;
      }
      while (j > i) {
        long prv = entry(b, inv(col(w[j - 1])));
        if (prv < 0) break;
        b = prv;
        --j;
      }
      if (i == j) {
        if (f != b) coincide(f, b);
        return;
      }
      if (j == i + 1) {
        set_edge(f, col(w[i]), b);
        return;
      }
      long n = new_coset();
      set_edge(f, col(w[i]), n);
      f = n;
      ++i;
    }
  }
};

}  // namespace tcdetail

inline CosetTable todd_coxeter(const Presentation& p, size_t max_cosets = 200000) {
  p.validate();
  std::vector<Word> rels;
  for (const auto& r : p.relators) {
    Word rr = free_reduce(r);
    if (!rr.empty()) rels.push_back(rr);
  }
  tcdetail::Enumerator e(p.generators.size(), max_cosets);
  for (long c = 0; c < static_cast<long>(e.tab.size()); ++c) {
    if (!e.alive(c)) continue;
    for (const auto& r : rels) {
      e.scan_and_fill(c, r);
      if (!e.alive(c)) break;
    }
    if (!e.alive(c)) continue;
    for (size_t l = 0; l < e.ncols; ++l)
      if (e.entry(c, l) < 0) {
        long n = e.new_coset();
        e.set_edge(c, l, n);
      }
  }

  // compact live cosets and renumber by breadth-first search from the
  // identity with generators in order
  long root = e.find(0);
  std::vector<long> number(e.tab.size(), -1);
  std::vector<long> bfs{root};
  number[static_cast<size_t>(root)] = 0;
  for (size_t head = 0; head < bfs.size(); ++head) {
    long c = bfs[head];
    for (size_t l = 0; l < e.ncols; ++l) {
      long d = e.entry(c, l);
      if (d < 0) throw Error("incomplete coset table after enumeration");
      if (number[static_cast<size_t>(d)] < 0) {
        number[static_cast<size_t>(d)] = static_cast<long>(bfs.size());
        bfs.push_back(d);
      }
    }
  }

  CosetTable out;
  out.num_generators = p.generators.size();
  out.table.assign(bfs.size(), std::vector<long>(e.ncols, -1));
  for (size_t newc = 0; newc < bfs.size(); ++newc)
    for (size_t l = 0; l < e.ncols; ++l)
      out.table[newc][l] = number[static_cast<size_t>(e.entry(bfs[newc], l))];
  return out;
}

}  // namespace pdcox
