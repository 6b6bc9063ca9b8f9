#include <gtest/gtest.h>

#include <random>

#include "lamanbkk/poly_system.hpp"

using namespace lamanbkk;

namespace {

Framework with_lengths(const Graph& g, Rational base = 5) {
  std::map<Edge, Rational> lengths;
  Rational next = 7;
  for (const auto& e : g.edges()) {
    if (e == Edge(1, 2)) {
      lengths[e] = base;
    } else {
      lengths[e] = next;
      next += 1;
    }
  }
  return Framework(g, lengths);
}

Constants ones_with(const Rational& l12) {
  Constants c;
  c.c1 = c.c2 = c.c3 = 1;
  c.l12 = l12;
  return c;
}

std::vector<Graph> sample_laman_graphs() {
  std::vector<Graph> out;
  for (int n = 3; n <= 6; ++n)
    for (const auto& g : laman_catalog(n))
      if (g.has_edge(1, 2)) out.push_back(g);
  out.push_back(k33_graph());
  out.push_back(desargues_graph());
  return out;
}

QVector exponent_vector(const Exponent& e) { return QVector(e.begin(), e.end()); }

}  // namespace

TEST(ConstantsType, Validation) {
  Constants c = Constants::defaults(3);
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.c1, 1);
  EXPECT_EQ(Constants::defaults(1).c1, 2);
  EXPECT_NO_THROW(Constants::defaults(1).validate());
  c.c2 = 0;
  EXPECT_THROW(c.validate(), InputError);
  c = Constants::defaults(3);
  c.c1 = 3;
  EXPECT_THROW(c.validate(), InputError);
}

TEST(BuildSoe, TriangleExpansion) {
  Framework f(triangle_graph(), {{{1, 2}, 3}, {{1, 3}, 4}, {{2, 3}, 5}});
  PolySystem sys = build_soe(f, ones_with(3));
  ASSERT_EQ(sys.polys.size(), 6u);
  EXPECT_EQ(sys.variables, (std::vector<std::string>{"x1", "y1", "x2", "y2", "x3", "y3"}));
  EXPECT_EQ(to_string(sys.polys[4], sys.variables), "x1^2 - 2*x1*x3 + y1^2 - 2*y1*y3 + x3^2 + y3^2 - 16");
  EXPECT_EQ(to_string(sys.polys[0], sys.variables), "x1 - 1");
  EXPECT_EQ(to_string(sys.polys[2], sys.variables), "x2 - 2");
}

TEST(BuildSoe, CountsAndDegrees) {
  for (const auto& g : sample_laman_graphs()) {
    const int n = g.vertex_count();
    PolySystem sys = build_soe(with_lengths(g), Constants::defaults(5));
    ASSERT_EQ(sys.polys.size(), 2u * n);
    int quadratics = 0;
    for (std::size_t j = 0; j < sys.polys.size(); ++j) {
      const int d = sys.polys[j].total_degree();
      EXPECT_EQ(d, j < 4 ? 1 : 2);
      quadratics += d == 2;
    }
    EXPECT_EQ(quadratics, 2 * n - 4);
  }
  PolySystem d = build_soe(with_lengths(desargues_graph()), Constants::defaults(5));
  std::vector<int> degrees;
  for (const auto& p : d.polys) degrees.push_back(p.total_degree());
  EXPECT_EQ(degrees, (std::vector<int>{1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2}));
}

TEST(BuildSoe, RequiresBaseEdgeAndLaman) {
  Graph no_base = Graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_THROW(build_soe(with_lengths(no_base), Constants::defaults(5)), InputError);
  Graph short_graph(4, {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_THROW(build_soe(with_lengths(short_graph), Constants::defaults(5)), InputError);
  EXPECT_THROW(build_soe(with_lengths(triangle_graph()), Constants::defaults(4)), InputError);
}

TEST(BuildSoe, OrderingPutsDoubledUnitVectorsInPlace) {
  for (const auto& g : sample_laman_graphs()) {
    PolySystem sys = build_soe(with_lengths(g), Constants::defaults(5));
    auto polys = newton_polytopes(sys);
    const std::size_t k = polys.size();
    for (std::size_t j = 4; j < k; ++j) EXPECT_TRUE(polys[j].contains_vertex(unit_vector(k, j, 2))) << "j=" << j;
    for (const auto& p : polys) EXPECT_TRUE(p.contains_vertex(QVector(k)));
  }
}

TEST(BuildSubsoe, Shape) {
  Framework f(triangle_graph(), {{{1, 2}, 3}, {{1, 3}, 4}, {{2, 3}, 5}});
  PolySystem sys = build_subsoe(f, ones_with(3));
  EXPECT_EQ(sys.polys.size(), 9u);
  EXPECT_EQ(sys.variables.size(), 9u);
  EXPECT_EQ(sys.variables[6], "s1");

  Framework h = with_lengths(henneberg_apply({{StepI{1, 3}, StepI{3, 4}}}));
  PolySystem sub = build_subsoe(h, Constants::defaults(5));
  const auto& names = sub.variables;
  bool found_edge = false;
  for (std::size_t j = 0; j < sub.labels.size(); ++j) {
    if (sub.labels[j] == "edge 3-4") {
      found_edge = true;
      EXPECT_EQ(to_string(sub.polys[j], names), "-2*x3*x4 - 2*y3*y4 + s3 + s4 - 100");
    }
    if (sub.labels[j] == "circle 5") {
      EXPECT_EQ(to_string(sub.polys[j], names), "-x5^2 - y5^2 + s5");
      auto np = hull_vertices(sub.polys[j].support());
      EXPECT_EQ(np.vertex_count(), 3u);
      EXPECT_FALSE(np.contains_vertex(QVector(names.size())));
    }
  }
  EXPECT_TRUE(found_edge);
}

TEST(BuildSubsoe, ConstantTermsExceptCircles) {
  for (const auto& g : sample_laman_graphs()) {
    PolySystem sys = build_subsoe(with_lengths(g), Constants::defaults(5));
    const int n = g.vertex_count();
    ASSERT_EQ(sys.polys.size(), 3u * n);
    for (std::size_t j = 0; j < sys.polys.size(); ++j) {
      bool has_constant = sys.polys[j].terms().count(Exponent(3 * n, 0)) > 0;
      EXPECT_EQ(has_constant, j < sys.polys.size() - n) << "j=" << j;
    }
  }
}

TEST(NewtonPolytopes, Examples) {
  Framework f = with_lengths(henneberg_apply({{StepI{1, 3}}}));
  PolySystem sys = build_soe(f, Constants::defaults(5));
  auto polys = newton_polytopes(sys);
  const std::size_t k = 8;
  EXPECT_EQ(polys[0].vertices(), (std::vector<QVector>{QVector(k), unit_vector(k, 0)}));
  for (std::size_t j = 4; j < k; ++j) {
    EXPECT_EQ(polys[j].vertex_count(), 5u);
    for (auto [a, b] : polys[j].edges()) (void)a, (void)b;
    EXPECT_EQ(polys[j].edges().size(), 10u);
  }
}

TEST(FaceSystem, Examples) {
  Framework f(triangle_graph(), {{{1, 2}, 3}, {{1, 3}, 4}, {{2, 3}, 5}});
  PolySystem sys = build_soe(f, ones_with(3));
  const auto& names = sys.variables;
  PolySystem pos = face_system(sys, QVector(6, 1));
  for (const auto& p : pos.polys) {
    ASSERT_EQ(p.terms().size(), 1u);
    EXPECT_EQ(p.terms().begin()->first, Exponent(6, 0));
  }
  PolySystem first = face_system(sys, unit_vector(6, 0));
  EXPECT_EQ(to_string(first.polys[0], names), "-1");
  EXPECT_THROW(face_system(sys, QVector(6)), InputError);

  PolySystem deg = face_system(sys, degeneracy_direction(3));
  EXPECT_EQ(to_string(deg.polys[4], names), "x3^2 + y3^2");
  EXPECT_EQ(to_string(deg.polys[0], names), "x1 - 1");

  Framework g = with_lengths(henneberg_apply({{StepI{1, 3}, StepI{3, 4}}}));
  PolySystem big = build_soe(g, Constants::defaults(5));
  PolySystem face = face_system(big, degeneracy_direction(5));
  for (std::size_t j = 0; j < big.labels.size(); ++j)
    if (big.labels[j] == "edge 3-4") {
      EXPECT_EQ(to_string(face.polys[j], big.variables), "x3^2 - 2*x3*x4 + y3^2 - 2*y3*y4 + x4^2 + y4^2");
    }
}

TEST(FaceSystem, KeepsExactlyTheMinimisers) {
  std::mt19937_64 rng(13);
  PolySystem sys = build_subsoe(with_lengths(desargues_graph()), Constants::defaults(5));
  const std::size_t k = sys.variables.size();
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    QVector w(k);
    for (auto& x : w) x = coord(rng);
    if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; })) w[0] = 1;
    PolySystem face = face_system(sys, w);
    for (std::size_t j = 0; j < sys.polys.size(); ++j) {
      Rational best;
      bool first = true;
      for (const auto& [e, c] : sys.polys[j].terms()) {
        Rational v = dot(w, exponent_vector(e));
        if (first || v < best) best = v;
        first = false;
      }
      for (const auto& [e, c] : sys.polys[j].terms()) {
        bool kept = face.polys[j].terms().count(e) > 0;
        EXPECT_EQ(kept, dot(w, exponent_vector(e)) == best);
      }
    }
  }
}

TEST(Evaluate, Examples) {
  Framework f(triangle_graph(), {{{1, 2}, 3}, {{1, 3}, 4}, {{2, 3}, 5}});
  PolySystem sys = build_soe(f, ones_with(3));
  std::vector<GaussianRational> pt(6, GaussianRational(0));
  pt[0] = GaussianRational(1);
  EXPECT_TRUE(evaluate(sys.polys[0], pt).is_zero());

  Polynomial circle(2);
  circle.add_term({2, 0}, 1);
  circle.add_term({0, 2}, 1);
  EXPECT_TRUE(evaluate(circle, {GaussianRational(1), GaussianRational(0, 1)}).is_zero());
  EXPECT_EQ(evaluate(circle, {GaussianRational(1, 1), GaussianRational(2)}), GaussianRational(4, 2));

  Polynomial zero = sys.polys[4] - sys.polys[4];
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(evaluate(zero, pt).is_zero());
}

TEST(WitnessCheck, FaceSystemVanishesButSystemDoesNot) {
  for (const auto& g : sample_laman_graphs()) {
    Framework f = with_lengths(g);
    Constants c = Constants::defaults(5);
    EXPECT_TRUE(witness_check(f, c));
    const int n = g.vertex_count();
    auto values = evaluate(build_soe(f, c), degeneracy_witness(n, c));
    for (int j = 0; j < 4; ++j) EXPECT_TRUE(values[j].is_zero());
    bool some_nonzero = false;
    for (const auto& v : values) some_nonzero |= !v.is_zero();
    EXPECT_TRUE(some_nonzero);
    for (const auto& x : degeneracy_witness(n, c)) EXPECT_FALSE(x.is_zero());
  }
}

TEST(Bezout, Values) {
  for (const auto& g : sample_laman_graphs()) {
    const int n = g.vertex_count();
    Framework f = with_lengths(g);
    Integer soe = 1, sub = 1;
    for (int i = 0; i < n - 2; ++i) soe *= 4;
    for (int i = 0; i < 3 * n - 4; ++i) sub *= 2;
    EXPECT_EQ(bezout(build_soe(f, Constants::defaults(5))), soe);
    EXPECT_EQ(bezout(build_subsoe(f, Constants::defaults(5))), sub);
  }
  Framework t(triangle_graph(), {{{1, 2}, 3}, {{1, 3}, 4}, {{2, 3}, 5}});
  EXPECT_EQ(bezout(build_subsoe(t, ones_with(3))), Integer(32));
}
