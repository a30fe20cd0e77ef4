#include <catch2/catch_amalgamated.hpp>

#include <pdcox/abelian.hpp>
#include <pdcox/hermite.hpp>
#include <pdcox/matrix.hpp>
#include <pdcox/rational.hpp>
#include <pdcox/smith.hpp>

#include <functional>
#include <random>

using namespace pdcox;

// ---------------------------------------------------------------------------
// Oracles, kept deliberately naive and independent of the library's
// elimination code.
// ---------------------------------------------------------------------------

// Laplace expansion along the first row.
static Int det_oracle(const IntMatrix& a) {
  size_t n = a.rows();
  REQUIRE(a.cols() == n);
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Int total = 0;
  for (size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (size_t i = 1; i < n; ++i) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(i - 1, cc++) = a(i, c);
      }
    }
    Int term = a(0, j) * det_oracle(sub);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

static void subsets_of_size(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
  std::vector<size_t> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// gcd of all k x k minors of A
static Int minor_gcd(const IntMatrix& a, size_t k) {
  std::vector<std::vector<size_t>> rsets, csets;
  subsets_of_size(a.rows(), k, rsets);
  subsets_of_size(a.cols(), k, csets);
  Int g = 0;
  for (const auto& rs : rsets)
    for (const auto& cs : csets) {
      IntMatrix sub(k, k);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sub(i, j) = a(rs[i], cs[j]);
      g = gcd(g, det_oracle(sub));
    }
  return abs(g);
}

// Invariant factors from determinantal divisors: s_k = d_k / d_{k-1} where
// d_k is the gcd of all k x k minors. Entirely choice-free, so it cross
// checks any elimination strategy.
static IntVec invariant_factors_oracle(const IntMatrix& a) {
  size_t n = std::min(a.rows(), a.cols());
  IntVec out;
  Int prev = 1;
  for (size_t k = 1; k <= n; ++k) {
    Int dk = minor_gcd(a, k);
    if (dk == 0) {
      out.push_back(0);
      continue;
    }
    out.push_back(dk / prev);
    prev = dk;
  }
  // once a zero appears all later entries are zero
  bool seen_zero = false;
  for (auto& x : out) {
    if (seen_zero) x = 0;
    if (x == 0) seen_zero = true;
  }
  return out;
}

static IntMatrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, long span) {
  IntMatrix a(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      a(i, j) = Int(static_cast<long>(rng() % (2 * span + 1)) - span);
  return a;
}

// ---------------------------------------------------------------------------

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("5") == Rat(5));
  CHECK(parse_rational("-7/3") == Rat(-7, 3));
  CHECK(parse_rational("2/4") == Rat(1, 2));
  CHECK(to_string(Rat(1, 2)) == "1/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_rational("x"), SchemaError);
  CHECK_THROWS_AS(parse_rational(""), SchemaError);
}

TEST_CASE("integer division helpers") {
  CHECK(fdiv(Int(7), Int(2)) == 3);
  CHECK(fdiv(Int(-7), Int(2)) == -4);
  CHECK(fdiv(Int(7), Int(-2)) == -4);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Int a(static_cast<long>(rng() % 201) - 100);
    Int b(static_cast<long>(rng() % 40) - 20);
    if (b == 0) continue;
    Int q = rdiv(a, b);
    CHECK(2 * abs(a - q * b) <= abs(b));
  }
}

TEST_CASE("primitive directions") {
  CHECK(primitive(IntVec{4, -6}) == IntVec{2, -3});
  CHECK(primitive(IntVec{0, 0}) == IntVec{0, 0});
  CHECK(primitive_direction(RatVec{Rat(1, 2), Rat(3, 4)}) == IntVec{2, 3});
  CHECK(primitive_direction(RatVec{Rat(-2), Rat(4)}) == IntVec{-1, 2});
  CHECK(denominator_lcm(RatVec{Rat(1, 6), Rat(1, 4)}) == 12);
}

TEST_CASE("smith form of a fixed matrix") {
  // d_1 = gcd of entries = 2, d_2 = |det| = |16 - 24| = 8, factors 2 and 4
  IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
  SmithForm f = snf(a);
  CHECK(smith_diagonal(f) == IntVec{2, 4});
  CHECK(f.u * a * f.v == f.s);
}

TEST_CASE("smith form on random matrices matches the minor oracle") {
  std::mt19937_64 rng(2026);
  for (int t = 0; t < 120; ++t) {
    size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, 6);
    SmithForm f = snf(a);

    CHECK(f.u * a * f.v == f.s);
    CHECK(abs(det_oracle(f.u)) == 1);
    CHECK(abs(det_oracle(f.v)) == 1);

    IntVec d = smith_diagonal(f);
    CHECK(d == invariant_factors_oracle(a));
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i + 1] != 0) {
        REQUIRE(d[i] != 0);
        CHECK(d[i + 1] % d[i] == 0);
      }
    }
    // off-diagonal must vanish
    for (size_t i = 0; i < f.s.rows(); ++i)
      for (size_t j = 0; j < f.s.cols(); ++j)
        if (i != j) CHECK(f.s(i, j) == 0);
  }
}

TEST_CASE("hermite basis of a fixed lattice") {
  auto h = lattice_basis({{2, 0}, {0, 2}, {1, 1}});
  REQUIRE(h.size() == 2);
  CHECK(h[0] == IntVec{1, 1});
  CHECK(h[1] == IntVec{0, 2});
  CHECK(in_lattice(IntVec{1, 3}, h));
  CHECK(in_lattice(IntVec{2, 0}, h));
  CHECK_FALSE(in_lattice(IntVec{1, 0}, h));
  auto coords = lattice_coordinates(IntVec{3, 5}, h);
  REQUIRE(coords.has_value());
  CHECK(*coords == IntVec{3, 1});
  CHECK_FALSE(lattice_coordinates(IntVec{1, 2}, h).has_value());
}

TEST_CASE("hermite basis is canonical and spans") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 80; ++t) {
    size_t n = 1 + rng() % 4, m = 1 + rng() % 5;
    std::vector<IntVec> gens;
    for (size_t i = 0; i < m; ++i) {
      IntVec v(n);
      for (auto& x : v) x = Int(static_cast<long>(rng() % 11) - 5);
      gens.push_back(v);
    }
    auto h = lattice_basis(gens);
    // every generator reduces to zero
    for (const auto& g : gens) CHECK(in_lattice(g, h));
    // every basis row is an integer combination of the generators: check via
    // a second reduction of the concatenated family agreeing with the first
    auto both = gens;
    for (const auto& row : h) both.push_back(row);
    CHECK(lattice_basis(both) == h);
    // pivot staircase
    size_t last = 0;
    bool first = true;
    for (const auto& row : h) {
      size_t c = 0;
      while (c < row.size() && row[c] == 0) ++c;
      REQUIRE(c < row.size());
      CHECK(row[c] > 0);
      if (!first) CHECK(c > last);
      last = c;
      first = false;
    }
    // reduction idempotence
    CHECK(lattice_basis(h) == h);
  }
}

TEST_CASE("integral kernel") {
  IntMatrix a = IntMatrix::from_rows({{1, 1, 1}});
  auto k = integral_kernel(a);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) {
    Int s = 0;
    for (const auto& x : v) s += x;
    CHECK(s == 0);
  }
  CHECK(in_lattice(IntVec{1, -1, 0}, k));
  CHECK(in_lattice(IntVec{0, 1, -1}, k));

  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, r, c, 4);
    auto basis = integral_kernel(m);
    for (const auto& v : basis) {
      for (size_t i = 0; i < r; ++i) {
        Int s = 0;
        for (size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
        CHECK(s == 0);
      }
    }
    // saturated: x in kernel and x/2 integral implies x/2 in kernel; it is
    // enough that each basis vector stays primitive after reduction
    IntVec zerodiag = invariant_factors_oracle(m);
    size_t rank = 0;
    for (const auto& d : zerodiag)
      if (d != 0) ++rank;
    CHECK(basis.size() == c - rank);
  }
}

TEST_CASE("cokernel of a fixed relation") {
  // Z^2 / <(4,-6)>
  IntMatrix rel = IntMatrix::from_cols({{4, -6}});
  FGAbelianGroup g = cokernel(rel);
  CHECK(g.free_rank == 1);
  CHECK(g.invariant_factors == IntVec{2});
  CHECK(g.to_string() == "Z + Z/2");
  CHECK(g.torsion_order() == 2);
  CHECK_FALSE(g.is_finite());
}

TEST_CASE("cokernel data degrees satisfy the relations") {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 80; ++t) {
    size_t gens = 1 + rng() % 4, rels = rng() % 5;
    std::vector<IntVec> rows;
    for (size_t i = 0; i < rels; ++i) {
      IntVec v(gens);
      for (auto& x : v) x = Int(static_cast<long>(rng() % 9) - 4);
      rows.push_back(v);
    }
    CokernelData data = cokernel_data(gens, rows);
    size_t tor = data.group.invariant_factors.size();
    size_t width = tor + static_cast<size_t>(data.group.free_rank);
    REQUIRE(data.generator_degrees.size() == gens);
    for (const auto& d : data.generator_degrees) REQUIRE(d.size() == width);
    for (const auto& r : rows) {
      IntVec img(width, Int(0));
      for (size_t i = 0; i < gens; ++i)
        for (size_t k = 0; k < width; ++k) img[k] += r[i] * data.generator_degrees[i][k];
      for (size_t k = 0; k < tor; ++k)
        CHECK(img[k] % data.group.invariant_factors[k] == 0);
      for (size_t k = tor; k < width; ++k) CHECK(img[k] == 0);
    }
    // the group is the cokernel of the transposed-row matrix
    IntMatrix cols(gens, rels);
    for (size_t j = 0; j < rels; ++j)
      for (size_t i = 0; i < gens; ++i) cols(i, j) = rows[j][i];
    IntVec expected;
    for (const auto& d : invariant_factors_oracle(cols))
      if (d > 1) expected.push_back(d);
    CHECK(data.group.invariant_factors == expected);
  }
}

TEST_CASE("abelian group formatting") {
  CHECK(FGAbelianGroup{0, {}}.to_string() == "0");
  CHECK(FGAbelianGroup{2, {}}.to_string() == "Z^2");
  CHECK(FGAbelianGroup{0, {Int(2), Int(6)}}.to_string() == "Z/2 + Z/6");
  CHECK(FGAbelianGroup{1, {Int(3)}}.to_string() == "Z + Z/3");
  CHECK(FGAbelianGroup{0, {}}.is_trivial());
  CHECK_FALSE(FGAbelianGroup{1, {}}.is_trivial());
}
