#include <catch2/catch_amalgamated.hpp>

#include <pdcox/logpair.hpp>

#include <array>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

using namespace pdcox;

namespace {

P1LogPair make_pair(std::vector<std::pair<std::string, Rat>> pts) {
  P1LogPair out;
  for (auto& [p, c] : pts) out.points.emplace_back(P1Point::parse(p), c);
  return out;
}

// pair with coefficients 1 - 1/n at 0, 1, infinity (as many as given)
P1LogPair standard_pair(const std::vector<long>& mults) {
  const char* pts[] = {"0", "1", "inf", "2", "3"};
  P1LogPair out;
  for (size_t i = 0; i < mults.size(); ++i)
    out.points.emplace_back(P1Point::parse(pts[i]), Rat(1) - Rat(1, mults[i]));
  return out;
}

IntVec reduced_degree(const GradedRingPresentation& p, size_t var) {
  const CoxVariable& v = p.variables[var];
  IntVec deg(v.degree.size());
  for (size_t c = 0; c < deg.size(); ++c) deg[c] = v.exponent * v.degree[c];
  for (size_t c = 0; c < p.grading_group.invariant_factors.size(); ++c)
    deg[c] = mod_reduce(deg[c], p.grading_group.invariant_factors[c]);
  return deg;
}

}  // namespace

TEST_CASE("standard approximation picks the largest standard value below") {
  auto q = [](long n, long d) { return Rat(n, d); };
  CHECK(standard_approximation(Rat(0)) == 0);
  CHECK(standard_approximation(q(1, 2)) == q(1, 2));
  CHECK(standard_approximation(q(2, 5)) == 0);
  CHECK(standard_approximation(q(7, 10)) == q(2, 3));
  CHECK(standard_approximation(q(3, 4)) == q(3, 4));
  CHECK(standard_approximation(q(9, 10)) == q(9, 10));
  CHECK(standard_approximation(q(49, 100)) == 0);

  // characterization on a grid: result is standard, at most c, and the next
  // standard value is already above c
  for (long k = 0; k < 60; ++k) {
    Rat c(k, 60);
    Rat sc = standard_approximation(c);
    INFO(to_string(c));
    CHECK(sc <= c);
    Rat gap = Rat(1) - sc;
    CHECK(numer(gap) == 1);  // sc = 1 - 1/n
    Int n = denom(gap);
    CHECK(Rat(1) - Rat(1) / Rat(n + 1) > c);
  }

  CHECK_THROWS_AS(standard_approximation(Rat(1)), SchemaError);
  CHECK_THROWS_AS(standard_approximation(Rat(-1, 2)), SchemaError);
  CHECK_THROWS_AS(standard_approximation(Rat(2)), SchemaError);

  P1LogPair pair = make_pair({{"0", Rat(2, 5)}, {"1", Rat(7, 10)}, {"inf", Rat(1, 2)}});
  P1LogPair approx = standard_approximation(pair);
  REQUIRE(approx.points.size() == 3);
  CHECK(approx.points[0].second == 0);
  CHECK(approx.points[1].second == Rat(2, 3));
  CHECK(approx.points[2].second == Rat(1, 2));
  CHECK(approx.points[1].first == P1Point::rational(Rat(1)));
}

TEST_CASE("class group of two marked points") {
  for (long n = 1; n <= 8; ++n) {
    for (long m = 1; m <= 8; ++m) {
      INFO(n << "," << m);
      P1LogPair pair;
      if (n > 1) pair.points.emplace_back(P1Point::parse("0"), Rat(1) - Rat(1, n));
      if (m > 1) pair.points.emplace_back(P1Point::infinity(), Rat(1) - Rat(1, m));
      P1ClassGroup cl = p1_class_group(pair);
      long g = std::gcd(n, m);
      CHECK(cl.group.free_rank == 1);
      CHECK(cl.group.invariant_factors == (g > 1 ? IntVec{g} : IntVec{}));
      // generators follow the surviving points (trivial ones are dropped,
      // then the list is padded); free coordinates solve a*d0 = b*d1
      std::vector<long> mult;
      if (n > 1) mult.push_back(n);
      if (m > 1) mult.push_back(m);
      while (mult.size() < 2) mult.push_back(1);
      long h = std::gcd(mult[0], mult[1]);
      REQUIRE(cl.generator_degrees.size() == 2);
      size_t t = cl.group.invariant_factors.size();
      CHECK(cl.generator_degrees[0][t] == mult[1] / h);
      CHECK(cl.generator_degrees[1][t] == mult[0] / h);
    }
  }
}

TEST_CASE("cox rings of platonic triples") {
  std::vector<std::array<long, 3>> triples = {{2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 2, 5},
                                              {2, 2, 6}, {2, 2, 7}, {2, 3, 3}, {2, 3, 4},
                                              {2, 3, 5}, {3, 3, 2}, {4, 3, 2}, {5, 3, 2}};
  for (const auto& [a, b, c] : triples) {
    INFO(a << "," << b << "," << c);
    GradedRingPresentation p = p1_cox(standard_pair({a, b, c}));
    REQUIRE(p.variables.size() == 3);
    CHECK(p.variables[0].name == "x");
    CHECK(p.variables[1].name == "y");
    CHECK(p.variables[2].name == "z");
    CHECK(p.variables[0].exponent == a);
    CHECK(p.variables[1].exponent == b);
    CHECK(p.variables[2].exponent == c);
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].theta == CoxScalar(Rat(1)));

    // homogeneity: all three blocks of x^a + y^b + z^c share one degree
    IntVec d0 = reduced_degree(p, 0);
    CHECK(d0 == reduced_degree(p, 1));
    CHECK(d0 == reduced_degree(p, 2));

    // free part of the variable weights is (bc, ac, ab)/gcd
    long g = std::gcd(std::gcd(a * b, b * c), a * c);
    size_t t = p.grading_group.invariant_factors.size();
    CHECK(p.variables[0].degree[t] == b * c / g);
    CHECK(p.variables[1].degree[t] == a * c / g);
    CHECK(p.variables[2].degree[t] == a * b / g);
  }

  GradedRingPresentation icosa = p1_cox(standard_pair({2, 3, 5}));
  CHECK(icosa.relations[0].to_string(icosa.variables) == "x^2 + y^3 + z^5");
  CHECK(icosa.grading_group.free_rank == 1);
  CHECK(icosa.grading_group.invariant_factors.empty());
  CHECK(icosa.variables[0].degree == IntVec{15});
  CHECK(icosa.variables[1].degree == IntVec{10});
  CHECK(icosa.variables[2].degree == IntVec{6});

  // non-standard coefficients are approximated before anything else
  GradedRingPresentation rounded =
      p1_cox(make_pair({{"0", Rat(3, 5)}, {"1", Rat(3, 5)}, {"inf", Rat(1, 2)}}));
  CHECK(rounded.relations[0].to_string(rounded.variables) == "x^2 + y^2 + z^2");
}

TEST_CASE("cox rings with at most two nontrivial points") {
  GradedRingPresentation one = p1_cox(make_pair({{"0", Rat(1, 2)}}));
  REQUIRE(one.variables.size() == 2);
  CHECK(one.variables[0].name == "x");
  CHECK(one.variables[1].name == "y");
  CHECK(one.variables[0].exponent == 2);
  CHECK(one.variables[1].exponent == 1);
  CHECK(one.relations.empty());
  CHECK(one.grading_group == FGAbelianGroup{1, {}});
  CHECK(one.variables[0].degree == IntVec{1});
  CHECK(one.variables[1].degree == IntVec{2});

  GradedRingPresentation none = p1_cox(P1LogPair{});
  CHECK(none.variables.size() == 2);
  CHECK(none.relations.empty());
  CHECK(none.variables[0].degree == IntVec{1});
  CHECK(none.variables[1].degree == IntVec{1});
  CHECK(smooth_at_origin(none));

  // points with coefficient zero are dropped entirely
  GradedRingPresentation dropped =
      p1_cox(make_pair({{"0", Rat(1, 3)}, {"1", Rat(1, 2)}, {"inf", Rat(5, 6)}}));
  REQUIRE(dropped.variables.size() == 2);
  CHECK(dropped.variables[0].exponent == 2);
  CHECK(dropped.variables[1].exponent == 6);
}

TEST_CASE("log pair rejections") {
  CHECK_THROWS_AS(p1_class_group(standard_pair({2, 2, 2, 2})), NotLogFanoError);
  CHECK_THROWS_AS(p1_cox(standard_pair({2, 3, 7})), NotLogFanoError);
  CHECK_THROWS_AS(p1_cox(standard_pair({3, 3, 3})), NotLogFanoError);
  CHECK_THROWS_AS(p1_cox(standard_pair({4, 4, 2})), NotLogFanoError);

  // order of points does not matter for the platonic test
  CHECK_NOTHROW(p1_cox(standard_pair({5, 3, 2})));
  CHECK_NOTHROW(p1_cox(standard_pair({2, 5, 3})));

  CHECK_THROWS_AS(p1_class_group(make_pair({{"0", Rat(1)}})), SchemaError);
  CHECK_THROWS_AS(p1_class_group(make_pair({{"0", Rat(-1, 4)}})), SchemaError);
  CHECK_THROWS_AS(p1_class_group(make_pair({{"0", Rat(1, 2)}, {"0", Rat(1, 3)}})),
                  DuplicatePointError);
}
