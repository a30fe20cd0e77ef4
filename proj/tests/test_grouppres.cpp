#include <catch2/catch_amalgamated.hpp>

#include <pdcox/permgroup.hpp>
#include <pdcox/presentation.hpp>
#include <pdcox/todd_coxeter.hpp>
#include <pdcox/words.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using namespace pdcox;

// ---------------------------------------------------------------------------
// Oracles: plain std::set closure and next_permutation searches, no library
// group machinery involved.
// ---------------------------------------------------------------------------

namespace {

using OPerm = std::vector<long>;

OPerm ocompose(const OPerm& a, const OPerm& b) {  // a first, then b
  OPerm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<size_t>(a[i])];
  return out;
}

size_t oorder_of_perm(const OPerm& a) {
  OPerm p = a;
  OPerm id(a.size());
  std::iota(id.begin(), id.end(), 0);
  size_t n = 1;
  while (p != id) {
    p = ocompose(p, a);
    ++n;
  }
  return n;
}

size_t closure_order(const std::vector<OPerm>& gens, size_t deg) {
  OPerm id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::set<OPerm> seen{id};
  std::vector<OPerm> queue{id};
  for (size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : gens) {
      OPerm nxt = ocompose(queue[head], g);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  return seen.size();
}

// first pair (a, b) in S_deg with |a| = p, |b| = q, |ab| = r
std::pair<OPerm, OPerm> find_triple_pair(size_t deg, size_t p, size_t q, size_t r) {
  std::vector<OPerm> all;
  OPerm base(deg);
  std::iota(base.begin(), base.end(), 0);
  OPerm w = base;
  do {
    all.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  for (const auto& a : all) {
    if (oorder_of_perm(a) != p) continue;
    for (const auto& b : all) {
      if (oorder_of_perm(b) != q) continue;
      if (oorder_of_perm(ocompose(a, b)) == r) return {a, b};
    }
  }
  FAIL("no permutation pair realizes the triple");
  return {base, base};
}

Presentation von_dyck(long p, long q, long r) {
  Presentation pres;
  pres.generators = {"x", "y"};
  pres.relators = {generator_power(0, Int(p)), generator_power(1, Int(q)),
                   word_power(Word{1, 2}, Int(r))};
  return pres;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST_CASE("word algebra") {
  CHECK(free_reduce(Word{1, -1}) == Word{});
  CHECK(free_reduce(Word{1, 2, -2, -1, 3}) == Word{3});
  CHECK(free_reduce(Word{1, -2, 2, 1}) == Word{1, 1});
  CHECK(inverse_word(Word{1, 2, -3}) == Word{3, -2, -1});
  CHECK(word_power(Word{1}, Int(3)) == Word{1, 1, 1});
  CHECK(word_power(Word{1, 2}, Int(-2)) == Word{-2, -1, -2, -1});
  CHECK(word_power(Word{1}, Int(0)) == Word{});
  CHECK(generator_power(2, Int(2)) == Word{3, 3});
  CHECK(generator_power(0, Int(-1)) == Word{-1});
  CHECK(commutator(Word{1}, Word{2}) == Word{-1, -2, 1, 2});
}

TEST_CASE("presentation parsing and printing") {
  Presentation p = parse_presentation("gens: a b\na^2\nb^-1 a b a\n# comment\n");
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == Word{1, 1});
  CHECK(p.relators[1] == Word{-2, 1, 2, 1});
  CHECK(print_word(p, p.relators[0]) == "a^2");
  CHECK(print_word(p, p.relators[1]) == "b^-1 a b a");
  CHECK(print_word(p, Word{}) == "1");

  Presentation again = parse_presentation(print_presentation(p));
  CHECK(again.generators == p.generators);
  CHECK(again.relators == p.relators);

  CHECK_THROWS_AS(parse_presentation("a^2\n"), SchemaError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nb^2\n"), SchemaError);
  CHECK_THROWS_AS(parse_presentation("gens: a a\n"), SchemaError);
  CHECK_THROWS_AS(parse_presentation("gens: a\na^1/2\n"), SchemaError);
  CHECK_THROWS_AS(parse_presentation(""), SchemaError);
}

TEST_CASE("abelianization from the exponent matrix") {
  Presentation z5 = parse_presentation("gens: a\na^5\n");
  CHECK(z5.abelianization().to_string() == "Z/5");

  Presentation q8 = parse_presentation("gens: a b\na^4\na^2 b^-2\nb^-1 a b a\n");
  FGAbelianGroup ab = q8.abelianization();
  CHECK(ab.free_rank == 0);
  CHECK(ab.invariant_factors == IntVec{2, 2});

  Presentation free2 = parse_presentation("gens: a b\n");
  CHECK(free2.abelianization().to_string() == "Z^2");
}

TEST_CASE("coset enumeration on cyclic and trivial groups") {
  CHECK(todd_coxeter(parse_presentation("gens: a\na^5\n")).order() == 5);
  CHECK(todd_coxeter(parse_presentation("gens: a\na\n")).order() == 1);
  CHECK(todd_coxeter(parse_presentation("gens: a b\na b^-1\na^6\n")).order() == 6);
  // infinite group: the guard must fire
  CHECK_THROWS_AS(todd_coxeter(parse_presentation("gens: a\n"), 500), CosetOverflowError);
}

TEST_CASE("quaternion group of order eight") {
  Presentation q8 = parse_presentation("gens: a b\na^4\na^2 b^-2\nb^-1 a b a\n");
  CosetTable t = todd_coxeter(q8);
  CHECK(t.order() == 8);
  // one element of order two, six of order four
  CHECK(t.element_order(Word{1}) == 4);
  CHECK(t.element_order(Word{2}) == 4);
  CHECK(t.element_order(Word{1, 2}) == 4);
  CHECK(t.element_order(Word{1, 1}) == 2);

  std::vector<Perm> gens;
  for (size_t i = 0; i < t.num_generators; ++i) gens.push_back(t.generator_permutation(i));
  PermGroup g = PermGroup::generated_by(t.order(), gens);
  CHECK(g.order() == 8);
  CHECK_FALSE(g.is_abelian());
  auto series = derived_series(g);
  REQUIRE(series.size() == 3);  // Q8 > Z/2 > 1
  CHECK(series[1].order() == 2);
  CHECK(series[2].order() == 1);
  CHECK(quotient_invariants(series[0], series[1]).invariant_factors == IntVec{2, 2});
}

TEST_CASE("triangle group orders match explicit permutation models") {
  struct Row {
    size_t deg, p, q, r, order;
  };
  for (const Row& row : {Row{4, 2, 3, 3, 12}, Row{4, 2, 3, 4, 24}, Row{5, 2, 3, 5, 60}}) {
    auto [a, b] = find_triple_pair(row.deg, row.p, row.q, row.r);
    size_t concrete = closure_order({a, b}, row.deg);
    CHECK(concrete == row.order);
    CosetTable t = todd_coxeter(von_dyck(static_cast<long>(row.p), static_cast<long>(row.q),
                                         static_cast<long>(row.r)));
    CHECK(t.order() == concrete);
  }
}

TEST_CASE("dihedral triangle groups") {
  for (long k = 1; k <= 10; ++k) {
    CosetTable t = todd_coxeter(von_dyck(2, 2, k));
    CHECK(t.order() == static_cast<size_t>(2 * k));
  }
}

TEST_CASE("binary octahedral group") {
  // <x,y | x^3 = y^4 = (xy)^2> has order 48; the common power is central
  Presentation p;
  p.generators = {"x", "y"};
  Word x3 = generator_power(0, Int(3));
  Word y4 = generator_power(1, Int(4));
  Word xy2 = word_power(Word{1, 2}, Int(2));
  p.relators = {free_reduce(concat(x3, inverse_word(y4))),
                free_reduce(concat(xy2, inverse_word(y4)))};
  CosetTable t = todd_coxeter(p);
  CHECK(t.order() == 48);
  CHECK(t.element_order(y4) == 2);
  CHECK(p.abelianization().invariant_factors == IntVec{2});
}

TEST_CASE("abelianization agrees with the permutation derived quotient") {
  auto check_one = [](const std::string& text) {
    Presentation p = parse_presentation(text);
    CosetTable t = todd_coxeter(p);
    std::vector<Perm> gens;
    for (size_t i = 0; i < t.num_generators; ++i) gens.push_back(t.generator_permutation(i));
    PermGroup g = PermGroup::generated_by(t.order(), gens);
    FGAbelianGroup from_perms = quotient_invariants(g, derived_subgroup(g));
    FGAbelianGroup from_snf = p.abelianization();
    CHECK(from_snf.free_rank == 0);
    CHECK(from_perms.invariant_factors == from_snf.invariant_factors);
  };
  check_one("gens: a b\na^4\na^2 b^-2\nb^-1 a b a\n");       // Q8
  check_one("gens: x y\nx^2\ny^3\nx y x y x y\n");           // A4
  check_one("gens: x y\nx^2\ny^3\nx y x y x y x y\n");       // S4
  check_one("gens: x y\nx^2\ny^3\nx y x y x y x y x y\n");   // A5, perfect
  check_one("gens: a b\na^2\nb^2\na b a b a b\n");           // S3
  check_one("gens: a\na^12\n");                              // Z/12
}

TEST_CASE("permutation group machinery") {
  // V4 inside S4
  Perm dbl = {1, 0, 3, 2}, cross = {2, 3, 0, 1};
  PermGroup v4 = PermGroup::generated_by(4, {dbl, cross});
  CHECK(v4.order() == 4);
  CHECK(v4.is_abelian());
  CHECK(abelian_invariants(v4).invariant_factors == IntVec{2, 2});
  CHECK(abelian_invariants_by_counting(v4).invariant_factors == IntVec{2, 2});

  // Z/6 as a single cycle, and Z/2 x Z/4 from disjoint cycles
  PermGroup z6 = PermGroup::generated_by(6, {Perm{1, 2, 3, 4, 5, 0}});
  CHECK(abelian_invariants(z6).invariant_factors == IntVec{6});
  PermGroup z2z4 = PermGroup::generated_by(6, {Perm{1, 0, 2, 3, 4, 5}, Perm{0, 1, 3, 4, 5, 2}});
  CHECK(abelian_invariants(z2z4).invariant_factors == IntVec{2, 4});
  CHECK(abelian_invariants_by_counting(z2z4).invariant_factors == IntVec{2, 4});

  // S4 is solvable with derived series 24 > 12 > 4 > 1
  PermGroup s4 = PermGroup::generated_by(4, {Perm{1, 2, 3, 0}, Perm{1, 0, 2, 3}});
  CHECK(s4.order() == 24);
  CHECK(is_solvable(s4));
  auto series = derived_series(s4);
  REQUIRE(series.size() == 4);
  CHECK(series[1].order() == 12);
  CHECK(series[2].order() == 4);
  CHECK(series[3].order() == 1);
  for (size_t i = 0; i + 1 < series.size(); ++i) {
    PermGroup ref = derived_subgroup_elementwise(series[i]);
    CHECK(ref.order() == series[i + 1].order());
    CHECK(series[i + 1].is_subgroup_of(ref));
  }

  // A5 is perfect, hence not solvable
  PermGroup a5 = PermGroup::generated_by(5, {Perm{1, 2, 0, 3, 4}, Perm{0, 1, 3, 4, 2},
                                             Perm{1, 0, 3, 2, 4}});
  CHECK(a5.order() == 60);
  CHECK(is_perfect(a5));
  CHECK_FALSE(is_solvable(a5));

  CHECK(perm_order(Perm{1, 2, 3, 4, 0}) == 5);
  CHECK(perm_order(identity_perm(4)) == 1);
  CHECK_THROWS_AS(abelian_invariants(s4), NotAbelianError);
}

TEST_CASE("jordan decomposition") {
  PermGroup s4 = PermGroup::generated_by(4, {Perm{1, 2, 3, 0}, Perm{1, 0, 2, 3}});
  auto jd = jordan_decomposition(s4, {Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1}});
  CHECK(jd.normal_part.invariant_factors == IntVec{2, 2});
  CHECK(jd.rank == 2);
  CHECK(jd.index == 6);

  // a single transposition is not normal in S4
  CHECK_THROWS_AS(jordan_decomposition(s4, {Perm{1, 0, 2, 3}}), NotNormalError);
  // S3 inside S4 is not abelian
  CHECK_THROWS_AS(jordan_decomposition(s4, {Perm{1, 0, 2, 3}, Perm{1, 2, 0, 3}}),
                  NotAbelianError);
}

TEST_CASE("coset table determinism") {
  Presentation p = parse_presentation("gens: a b\na^4\na^2 b^-2\nb^-1 a b a\n");
  CosetTable t1 = todd_coxeter(p);
  CosetTable t2 = todd_coxeter(p);
  CHECK(t1.table == t2.table);
}
