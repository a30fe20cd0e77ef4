#include <catch2/catch_amalgamated.hpp>

#include <pdcox/corpus.hpp>
#include <pdcox/fundgrp.hpp>

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

using namespace pdcox;

// ---------------------------------------------------------------------------
// Oracles: binary and ordinary triangle group presentations written down
// directly, compared with the divisor-derived groups by order and by the
// multiset of element orders (computed with a local closure, not the library
// group code).
// ---------------------------------------------------------------------------

namespace {

using OPerm = std::vector<long>;

OPerm ocompose(const OPerm& a, const OPerm& b) {
  OPerm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<size_t>(a[i])];
  return out;
}

size_t oorder(const OPerm& a) {
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

// multiset of element orders of the group generated by the coset action
std::map<size_t, size_t> order_spectrum(const CosetTable& t) {
  std::vector<OPerm> gens;
  for (size_t i = 0; i < t.num_generators; ++i) gens.push_back(t.generator_permutation(i));
  OPerm id(t.order());
  std::iota(id.begin(), id.end(), 0);
  std::set<OPerm> seen{id};
  std::vector<OPerm> queue{id};
  for (size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : gens) {
      OPerm nxt = ocompose(queue[head], g);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  std::map<size_t, size_t> spec;
  for (const auto& p : seen) ++spec[oorder(p)];
  return spec;
}

// <x,y | x^p = y^q = (xy)^r>, the binary triangle group when 1/p+1/q+1/r > 1
Presentation binary_triangle(long p, long q, long r) {
  Presentation pres;
  pres.generators = {"x", "y"};
  Word xp = generator_power(0, Int(p));
  Word yq = generator_power(1, Int(q));
  Word xyr = word_power(Word{1, 2}, Int(r));
  pres.relators = {free_reduce(concat(xp, inverse_word(yq))),
                   free_reduce(concat(xyr, inverse_word(yq)))};
  return pres;
}

// <x,y | x^p, y^q, (xy)^r>, the ordinary triangle group
Presentation plain_triangle(long p, long q, long r) {
  Presentation pres;
  pres.generators = {"x", "y"};
  pres.relators = {generator_power(0, Int(p)), generator_power(1, Int(q)),
                   word_power(Word{1, 2}, Int(r))};
  return pres;
}

PolyhedralDivisor corpus_divisor(const std::string& name) {
  for (const auto& e : curated_corpus())
    if (e.name == name) return e.divisor;
  throw std::runtime_error("missing corpus entry: " + name);
}

Mark mark1d(const std::string& point, Rat v) {
  Cone half = Cone::from_rays(1, {{Int(1)}});
  return Mark{P1Point::parse(point), SigmaPolyhedron({RatVec{v}}, half)};
}

Int normal_part_order(const JordanDecomposition& jd) {
  Int n = 1;
  for (const auto& f : jd.normal_part.invariant_factors) n *= f;
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST_CASE("relation lattices on hand-checked cones") {
  Cone half = Cone::from_rays(1, {{Int(1)}});
  Cone quad = Cone::from_rays(2, {{Int(1), Int(0)}, {Int(0), Int(1)}});
  Cone skew = Cone::from_rays(2, {{Int(1), Int(0)}, {Int(1), Int(2)}});

  // the ray of the half line always meets a degree interval inside it
  SigmaPolyhedron deg1({RatVec{Rat(1, 2)}}, half);
  CHECK(torus_relation_lattice(half, deg1).empty());

  // interior degree in the quadrant leaves both axes free
  SigmaPolyhedron deg2({RatVec{Rat(1, 2), Rat(1, 2)}}, quad);
  CHECK(torus_relation_lattice(quad, deg2) ==
        std::vector<IntVec>{IntVec{1, 0}, IntVec{0, 1}});

  // skew cone: both rays qualify but they only span an index two sublattice
  SigmaPolyhedron deg3({RatVec{Rat(1), Rat(1)}}, skew);
  CHECK(torus_relation_lattice(skew, deg3) ==
        std::vector<IntVec>{IntVec{1, 0}, IntVec{0, 2}});

  // one-dimensional marks: the vertex ray of the cone over the coefficient
  SigmaPolyhedron c_half({RatVec{Rat(1, 2)}}, half);
  CHECK(mark_relation_lattice(c_half, deg1) == std::vector<IntVec>{IntVec{1, 2}});
  SigmaPolyhedron c_neg({RatVec{Rat(-1, 2)}}, half);
  CHECK(mark_relation_lattice(c_neg, deg1) == std::vector<IntVec>{IntVec{-1, 2}});
  SigmaPolyhedron c_third({RatVec{Rat(-2, 3)}}, half);
  CHECK(mark_relation_lattice(c_third, deg1) == std::vector<IntVec>{IntVec{-2, 3}});

  // lattice vertex in the skew cone: smooth faces of the cone over it span
  // everything the toric picture predicts
  SigmaPolyhedron c_skew({RatVec{Rat(1), Rat(1)}}, skew);
  CHECK(mark_relation_lattice(c_skew, deg3) ==
        std::vector<IntVec>{IntVec{1, 0, 0}, IntVec{0, 1, 1}, IntVec{0, 0, 2}});

  // every mark row leaves with nonnegative loop exponent
  for (const auto& e : curated_corpus()) {
    SigmaPolyhedron deg = e.divisor.degree_polyhedron();
    size_t r = e.divisor.rank();
    for (const auto& m : e.divisor.marks())
      for (const auto& row : mark_relation_lattice(m.coefficient, deg))
        CHECK(row[r] >= 0);
  }
}

TEST_CASE("presentation shape") {
  Pi1Report rep = pi1_report(corpus_divisor("r1_dihedral_2_2_2"));
  const Presentation& p = rep.presentation;
  REQUIRE(p.generators == std::vector<std::string>{"t1", "b1", "b2", "b3"});
  REQUIRE(p.relators.size() == 7);
  CHECK(print_word(p, p.relators[0]) == "b1 b2 b3");
  CHECK(print_word(p, p.relators[1]) == "t1^-1 b1^-1 t1 b1");
  CHECK(print_word(p, p.relators[2]) == "t1^-1 b2^-1 t1 b2");
  CHECK(print_word(p, p.relators[3]) == "t1^-1 b3^-1 t1 b3");
  CHECK(print_word(p, p.relators[4]) == "t1 b1^2");
  CHECK(print_word(p, p.relators[5]) == "t1 b2^2");
  CHECK(print_word(p, p.relators[6]) == "t1^-1 b3^2");
  CHECK_NOTHROW(p.validate());

  Presentation back = parse_presentation(print_presentation(p));
  CHECK(back.generators == p.generators);
  CHECK(back.relators == p.relators);
}

TEST_CASE("simply connected instances") {
  for (const std::string name : {"r1_smooth_plane", "r2_smooth_conv", "r3_smooth_point",
                                 "r2_toric_quotient"}) {
    INFO(name);
    Pi1Report rep = pi1_report(corpus_divisor(name));
    CHECK(rep.klt);
    REQUIRE(rep.order.has_value());
    CHECK(*rep.order == 1);
    CHECK(rep.abelianization.to_string() == "0");
    REQUIRE(rep.jordan.has_value());
    CHECK(rep.jordan->rank == 0);
    CHECK(rep.jordan->index == 1);
    CHECK(rep.solvable == true);
  }
}

TEST_CASE("cyclic quotients") {
  struct Row {
    const char* name;
    long order;
    long normal;
  };
  // order = mu1 * mu2 * (v1 + v2), the class group determinant
  for (const Row& row : {Row{"r1_cyclic_2_2", 4, 2}, Row{"r1_cyclic_5_5", 10, 2},
                         Row{"r1_cyclic_6_4", 10, 5}, Row{"r1_cyclic_conv_2_2", 4, 2}}) {
    INFO(row.name);
    Pi1Report rep = pi1_report(corpus_divisor(row.name));
    REQUIRE(rep.order.has_value());
    CHECK(*rep.order == row.order);
    CHECK(rep.abelianization.invariant_factors == IntVec{row.order});
    CHECK(rep.abelianization.free_rank == 0);
    REQUIRE(rep.jordan.has_value());
    CHECK(normal_part_order(*rep.jordan) == row.normal);
    CHECK(rep.jordan->index * normal_part_order(*rep.jordan) == *rep.order);
    CHECK(rep.solvable == true);
  }

  // in higher rank the torus directions die and only the loop part remains
  for (const std::string name : {"r2_cyclic_2_2", "r3_cyclic_2_2"}) {
    INFO(name);
    Pi1Report rep = pi1_report(corpus_divisor(name));
    CHECK(*rep.order == 2);
    CHECK(rep.abelianization.invariant_factors == IntVec{2});
  }
  Pi1Report conv = pi1_report(corpus_divisor("r2_cyclic_conv_2_2"));
  CHECK(conv.order.has_value());
  CHECK(conv.abelianization.free_rank == 0);
}

TEST_CASE("rank one gives binary polyhedral groups") {
  struct Row {
    const char* name;
    long p, q, r;
    size_t order;
    IntVec ab;
    bool solvable;
  };
  std::vector<Row> rows = {
      Row{"r1_dihedral_2_2_2", 2, 2, 2, 8, IntVec{2, 2}, true},
      Row{"r1_dihedral_3_2_2", 3, 2, 2, 12, IntVec{4}, true},
      Row{"r1_tetrahedral", 3, 3, 2, 24, IntVec{3}, true},
      Row{"r1_octahedral", 4, 3, 2, 48, IntVec{2}, true},
      Row{"r1_icosahedral", 5, 3, 2, 120, IntVec{}, false},
  };
  for (const Row& row : rows) {
    INFO(row.name);
    Pi1Report rep = pi1_report(corpus_divisor(row.name));
    CosetTable got = todd_coxeter(rep.presentation);
    CosetTable want = todd_coxeter(binary_triangle(row.p, row.q, row.r));
    CHECK(got.order() == row.order);
    CHECK(want.order() == row.order);
    CHECK(order_spectrum(got) == order_spectrum(want));
    CHECK(rep.abelianization.invariant_factors == row.ab);
    CHECK(rep.abelianization.free_rank == 0);
    CHECK(rep.solvable == row.solvable);
    // the central torus generator is the unique involution
    REQUIRE(rep.jordan.has_value());
    CHECK(normal_part_order(*rep.jordan) == 2);
    CHECK(rep.jordan->index == Int(static_cast<long>(row.order)) / 2);
  }
}

TEST_CASE("higher rank gives ordinary triangle groups") {
  struct Row {
    const char* name;
    long p, q, r;
    size_t order;
    bool solvable;
  };
  std::vector<Row> rows = {
      Row{"r2_dihedral_4_2_2", 2, 2, 4, 8, true},
      Row{"r2_tetrahedral", 3, 3, 2, 12, true},
      Row{"r2_octahedral", 4, 3, 2, 24, true},
      Row{"r2_icosahedral", 5, 3, 2, 60, false},
      Row{"r3_dihedral_2_2_2", 2, 2, 2, 4, true},
      Row{"r3_tetrahedral", 3, 3, 2, 12, true},
      Row{"r3_octahedral", 4, 3, 2, 24, true},
      Row{"r3_icosahedral", 5, 3, 2, 60, false},
  };
  for (const Row& row : rows) {
    INFO(row.name);
    Pi1Report rep = pi1_report(corpus_divisor(row.name));
    CosetTable got = todd_coxeter(rep.presentation);
    CosetTable want = todd_coxeter(plain_triangle(row.p, row.q, row.r));
    CHECK(got.order() == row.order);
    CHECK(want.order() == row.order);
    CHECK(order_spectrum(got) == order_spectrum(want));
    CHECK(rep.solvable == row.solvable);
    // all torus directions are killed here
    REQUIRE(rep.jordan.has_value());
    CHECK(rep.jordan->index == Int(static_cast<long>(row.order)));
  }

  // same multiplicity triple, different groups: the rank one instance is the
  // binary dihedral group (one involution), the rank three one is Klein four
  auto binary = order_spectrum(todd_coxeter(
      pi1_presentation(corpus_divisor("r1_dihedral_2_2_2"))));
  auto plain = order_spectrum(todd_coxeter(
      pi1_presentation(corpus_divisor("r3_dihedral_2_2_2"))));
  CHECK(binary[2] == 1);
  CHECK(binary[4] == 6);
  CHECK(plain[2] == 3);
  CHECK(plain.count(4) == 0);
}

TEST_CASE("moving the marked points does not change the group") {
  Cone half = Cone::from_rays(1, {{Int(1)}});
  auto build = [&](const char* a, const char* b, const char* c) {
    return PolyhedralDivisor(
        half, {mark1d(a, Rat(1, 4)), mark1d(b, Rat(1, 3)), mark1d(c, Rat(-1, 2))});
  };
  Pi1Report base = pi1_report(build("0", "1", "inf"));
  for (auto [a, b, c] : {std::tuple{"1", "inf", "0"}, std::tuple{"2", "5", "-1"},
                         std::tuple{"1/3", "-7", "4"}}) {
    Pi1Report other = pi1_report(build(a, b, c));
    CHECK(other.order == base.order);
    CHECK(other.abelianization.invariant_factors == base.abelianization.invariant_factors);
  }
}

TEST_CASE("log terminality fails and the group is reported infinite") {
  Cone half = Cone::from_rays(1, {{Int(1)}});
  PolyhedralDivisor d(half, {mark1d("0", Rat(1, 7)), mark1d("1", Rat(1, 3)),
                             mark1d("inf", Rat(1, 2))});
  Pi1Report rep = pi1_report(d);
  CHECK_FALSE(rep.klt);
  CHECK_FALSE(rep.order.has_value());
  CHECK_FALSE(rep.solvable.has_value());
  CHECK_FALSE(rep.jordan.has_value());
  // exponent matrix determinant is 41 by direct expansion
  CHECK(rep.abelianization.invariant_factors == IntVec{41});
  CHECK(rep.abelianization.free_rank == 0);
}

TEST_CASE("report consistency across the corpus") {
  auto entries = curated_corpus();
  for (const auto& e : random_corpus(123, 10)) entries.push_back(e);
  for (const auto& e : entries) {
    INFO(e.name);
    Pi1Report rep = pi1_report(e.divisor);
    CHECK(rep.klt);
    REQUIRE(rep.order.has_value());
    CHECK(*rep.order >= 1);
    CHECK(rep.abelianization.free_rank == 0);
    CHECK(rep.presentation.relators[0].size() == e.divisor.marks().size());
    CHECK_NOTHROW(rep.presentation.validate());
    REQUIRE(rep.jordan.has_value());
    CHECK(rep.jordan->index * normal_part_order(*rep.jordan) == *rep.order);
  }
}
