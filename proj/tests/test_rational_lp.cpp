#include <gtest/gtest.h>

#include <random>

#include "lamanbkk/rational_lp.hpp"

using namespace lamanbkk;

TEST(ParseRational, AcceptsIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("2.25"), Rational(9, 4));
  EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+1.0"), Rational(1));
}

TEST(ParseRational, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1/2.5", "--1", "."}) EXPECT_THROW(parse_rational(bad), InputError) << bad;
}

TEST(LinearAlgebra, DeterminantRankAndSolve) {
  QMatrix m{{2, 1}, {1, 3}};
  EXPECT_EQ(determinant(m), Rational(5));
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(rank({{1, 2}, {2, 4}}), 1u);
  QVector x;
  ASSERT_TRUE(solve_linear(m, {3, 4}, x));
  EXPECT_EQ(x, (QVector{1, 1}));
  EXPECT_FALSE(solve_linear({{1, 2}, {2, 4}}, {1, 1}, x));
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, (QMatrix{{Rational(3, 5), Rational(-1, 5)}, {Rational(-1, 5), Rational(2, 5)}}));
  EXPECT_EQ(multiply(*inv, {3, 4}), (QVector{1, 1}));
  EXPECT_FALSE(inverse({{1, 2}, {2, 4}}).has_value());
  EXPECT_FALSE(inverse({{0, 1}, {0, 1}}).has_value());
}

TEST(Simplex, BoundaryOfLowerEnvelopeIsZero) {
  LinearProgram lp(1);
  lp.objective = {1};
  lp.add({1}, Relation::LessEqual, 0);
  lp.add({1}, Relation::GreaterEqual, 0);
  LPOutcome out = solve(lp);
  ASSERT_EQ(out.status, LPStatus::Optimal);
  EXPECT_EQ(out.point, (QVector{0}));
  EXPECT_EQ(out.value, 0);
  EXPECT_TRUE(verify_optimal(lp, out));
}

TEST(Simplex, SingleUpperBound) {
  LinearProgram lp(1);
  lp.objective = {1};
  lp.add({1}, Relation::LessEqual, 5);
  LPOutcome out = solve(lp);
  ASSERT_EQ(out.status, LPStatus::Optimal);
  EXPECT_EQ(out.point, (QVector{5}));
  EXPECT_TRUE(verify_optimal(lp, out));
}

TEST(Simplex, ContradictoryBoundsGiveFarkasCertificate) {
  LinearProgram lp(1);
  lp.add({1}, Relation::LessEqual, 0);
  lp.add({1}, Relation::GreaterEqual, 1);
  LPOutcome out = solve(lp);
  ASSERT_EQ(out.status, LPStatus::Infeasible);
  EXPECT_TRUE(verify_farkas(lp, out));
}

TEST(Simplex, UnboundedRayImprovesObjective) {
  LinearProgram lp(2);
  lp.objective = {1, 1};
  lp.add({1, -1}, Relation::LessEqual, 1);
  lp.lower = {Rational(0), Rational(0)};
  LPOutcome out = solve(lp);
  ASSERT_EQ(out.status, LPStatus::Unbounded);
  ASSERT_EQ(out.ray.size(), 2u);
  EXPECT_GT(dot(lp.objective, out.ray), 0);
  EXPECT_TRUE(satisfies(lp, out.point));
  // Moving along the ray stays feasible.
  QVector far = out.point;
  for (std::size_t i = 0; i < far.size(); ++i) far[i] += 1000 * out.ray[i];
  EXPECT_TRUE(satisfies(lp, far));
}

TEST(Simplex, VariableBoundsAreHonoured) {
  LinearProgram lp(2);
  lp.objective = {1, -1};
  lp.lower = {Rational(-2), Rational(1)};
  lp.upper = {Rational(3), Rational(4)};
  LPOutcome out = solve(lp);
  ASSERT_EQ(out.status, LPStatus::Optimal);
  EXPECT_EQ(out.point, (QVector{3, 1}));
  EXPECT_EQ(out.value, 2);
  EXPECT_TRUE(verify_optimal(lp, out));
}

TEST(Simplex, InfeasibleBoundsOnly) {
  LinearProgram lp(1);
  lp.lower = {Rational(2)};
  lp.upper = {Rational(1)};
  LPOutcome out = solve(lp);
  ASSERT_EQ(out.status, LPStatus::Infeasible);
  EXPECT_TRUE(verify_farkas(lp, out));
}

TEST(Feasible, EmptySystemGivesOrigin) {
  auto x = feasible(3, {});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (QVector{0, 0, 0}));
}

TEST(Feasible, SimplexPoint) {
  std::vector<LinearConstraint> cons{{{1, 1}, Relation::Equal, 1},
                                     {{1, 0}, Relation::GreaterEqual, 0},
                                     {{0, 1}, Relation::GreaterEqual, 0}};
  auto x = feasible(2, cons);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + (*x)[1], 1);
  EXPECT_GE((*x)[0], 0);
  EXPECT_GE((*x)[1], 0);
}

TEST(Feasible, ReportsInfeasibility) {
  LPOutcome cert;
  std::vector<LinearConstraint> cons{{{1}, Relation::GreaterEqual, 1}, {{1}, Relation::LessEqual, 0}};
  EXPECT_FALSE(feasible(1, cons, &cert).has_value());
  LinearProgram lp(1);
  lp.constraints = cons;
  EXPECT_TRUE(verify_farkas(lp, cert));
}

TEST(Simplex, DegenerateCycleProneProblemTerminates) {
  // A classic degenerate instance on which the largest-coefficient rule cycles.
  LinearProgram lp(4);
  lp.objective = {Rational(3, 4), -20, Rational(1, 2), -6};
  lp.add({Rational(1, 4), -8, -1, 9}, Relation::LessEqual, 0);
  lp.add({Rational(1, 2), -12, Rational(-1, 2), 3}, Relation::LessEqual, 0);
  lp.add({0, 0, 1, 0}, Relation::LessEqual, 1);
  lp.lower = std::vector<std::optional<Rational>>(4, Rational(0));
  LPOutcome out = solve(lp);
  ASSERT_EQ(out.status, LPStatus::Optimal);
  EXPECT_EQ(out.value, Rational(5, 4));
  EXPECT_TRUE(verify_optimal(lp, out));
}

namespace {

// Optimum of a 2-variable LP over a bounded region by scanning all
// intersections of constraint lines.
std::optional<Rational> vertex_scan_optimum(const LinearProgram& lp) {
  std::optional<Rational> best;
  const auto& c = lp.constraints;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      QVector x;
      if (!solve_linear({c[i].row, c[j].row}, {c[i].rhs, c[j].rhs}, x)) continue;
      if (!satisfies(lp, x)) continue;
      Rational v = dot(lp.objective, x);
      if (!best || v > *best) best = v;
    }
  return best;
}

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST(SimplexProperty, MatchesVertexScanOnRandomBoxedPrograms) {
  std::mt19937_64 rng(2024);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp(2);
    lp.objective = {small_rational(rng), small_rational(rng)};
    for (int s : {0, 1}) {
      lp.add(unit_vector(2, s), Relation::LessEqual, 10);
      lp.add(unit_vector(2, s), Relation::GreaterEqual, -10);
    }
    std::uniform_int_distribution<int> count(1, 5), rel(0, 2);
    for (int k = count(rng); k > 0; --k)
      lp.add({small_rational(rng), small_rational(rng)}, static_cast<Relation>(rel(rng)), small_rational(rng));
    LPOutcome out = solve(lp);
    auto expected = vertex_scan_optimum(lp);
    if (expected) {
      ASSERT_EQ(out.status, LPStatus::Optimal) << "trial " << trial;
      EXPECT_EQ(out.value, *expected) << "trial " << trial;
      EXPECT_TRUE(verify_optimal(lp, out)) << "trial " << trial;
      for (const auto& r : out.reduced_costs) EXPECT_LE(r, 0);
      ++optimal;
    } else {
      ASSERT_EQ(out.status, LPStatus::Infeasible) << "trial " << trial;
      EXPECT_TRUE(verify_farkas(lp, out)) << "trial " << trial;
      ++infeasible;
    }
  }
  EXPECT_GT(optimal, 50);
  EXPECT_GT(infeasible, 10);
}

TEST(SimplexProperty, DeterministicBasis) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    LinearProgram lp(3);
    lp.objective = {small_rational(rng), small_rational(rng), small_rational(rng)};
    for (int k = 0; k < 6; ++k)
      lp.add({small_rational(rng), small_rational(rng), small_rational(rng)}, Relation::LessEqual, 5 + small_rational(rng));
    LPOutcome a = solve(lp), b = solve(lp);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.basis, b.basis);
    EXPECT_EQ(a.point, b.point);
  }
}
