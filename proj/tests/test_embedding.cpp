#include <gtest/gtest.h>

#include <random>

#include "lamanbkk/embedding.hpp"
#include "lamanbkk/mixed_volume.hpp"

using namespace lamanbkk;

namespace {

HennebergSequence chain(int n) {
  HennebergSequence seq;
  for (int v = 4; v <= n; ++v) seq.steps.push_back(StepI{v - 2, v - 1});
  return seq;
}

HennebergSequence random_h1(int n, std::mt19937_64& rng) {
  HennebergSequence seq;
  for (int v = 4; v <= n; ++v) {
    std::uniform_int_distribution<int> pick(1, v - 1);
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    seq.steps.push_back(StepI{a, b});
  }
  return seq;
}

long double distance(const std::array<long double, 2>& a, const std::array<long double, 2>& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

}  // namespace

TEST(TightLengths, Recipe) {
  Framework t = tight_lengths(HennebergSequence{});
  EXPECT_EQ(t.graph().vertex_count(), 3);
  EXPECT_EQ(t.length({1, 2}), Rational(3));
  EXPECT_EQ(t.length({1, 3}), Rational(4));
  EXPECT_EQ(t.length({2, 3}), Rational(5));

  Framework one = tight_lengths({{StepI{1, 3}}});
  EXPECT_EQ(one.length({1, 4}), Rational(13));
  EXPECT_EQ(one.length({3, 4}), Rational(14));

  // Each new pair exceeds the sum of everything assigned before it.
  HennebergSequence seq = chain(8);
  Framework f = tight_lengths(seq);
  Rational before = 12;
  for (int v = 4; v <= 8; ++v) {
    Rational a = f.length({v - 2, v}), b = f.length({v - 1, v});
    EXPECT_EQ(a, before + 1);
    EXPECT_EQ(b, before + 2);
    before += a + b;
  }
}

TEST(TightLengths, RejectsStepTwo) {
  HennebergSequence seq{{StepI{1, 3}, StepI{2, 4}, StepII{3, 4, 5, {4, 5}}}};
  EXPECT_THROW(tight_lengths(seq), InputError);
  EXPECT_THROW(enumerate_h1(tight_lengths(chain(6)), seq), InputError);
}

TEST(EnumerateH1, TriangleMirrorPair) {
  Framework t = tight_lengths(HennebergSequence{});
  auto emb = enumerate_h1(t, HennebergSequence{});
  ASSERT_EQ(emb.size(), 2u);
  EXPECT_EQ(emb[0].points[0], (std::array<long double, 2>{0, 0}));
  EXPECT_EQ(emb[0].points[1], (std::array<long double, 2>{3, 0}));
  EXPECT_NEAR(static_cast<double>(emb[0].points[2][0]), 0.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(emb[0].points[2][1]), 4.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(emb[1].points[2][1]), -4.0, 1e-15);
  for (const auto& e : emb) EXPECT_TRUE(verify_embedding(t, e, Rational(1, 1000000000)));
}

TEST(EnumerateH1, TightCountsUpToEight) {
  std::mt19937_64 rng(4);
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      HennebergSequence seq = trial == 0 ? chain(n) : random_h1(n, rng);
      Framework f = tight_lengths(seq);
      auto emb = enumerate_h1(f, seq);
      EXPECT_EQ(emb.size(), std::size_t{1} << (n - 2)) << "n=" << n;
      for (const auto& e : emb) {
        EXPECT_LT(e.residual, 1e-9L);
        EXPECT_FALSE(e.tangent);
        EXPECT_TRUE(verify_embedding(f, e, Rational(1, 1000000000)));
      }
    }
  }
}

TEST(EnumerateH1, SixVerticesGiveSixteen) {
  HennebergSequence seq{{StepI{1, 3}, StepI{2, 4}, StepI{3, 5}}};
  EXPECT_EQ(enumerate_h1(tight_lengths(seq), seq).size(), 16u);
}

TEST(EnumerateH1, UnreachableVertexGivesNothing) {
  HennebergSequence seq{{StepI{1, 2}}};
  Graph g = henneberg_apply(seq);
  Framework f(g, {{{1, 2}, 3}, {{1, 3}, 4}, {{2, 3}, 5}, {{1, 4}, 20}, {{2, 4}, 1}});
  EXPECT_TRUE(enumerate_h1(f, seq).empty());
}

TEST(EnumerateH1, TangencyCountedOnce) {
  HennebergSequence seq{{StepI{1, 2}}};
  Framework f(henneberg_apply(seq), {{{1, 2}, 3}, {{1, 3}, 4}, {{2, 3}, 5}, {{1, 4}, 1}, {{2, 4}, 2}});
  auto emb = enumerate_h1(f, seq);
  ASSERT_EQ(emb.size(), 2u);
  for (const auto& e : emb) {
    EXPECT_TRUE(e.tangent);
    EXPECT_EQ(e.branch.back(), 0);
    EXPECT_NEAR(static_cast<double>(e.points[3][0]), 1.0, 1e-12);
  }
}

TEST(EnumerateH1, InputChecks) {
  Framework flat(triangle_graph(), {{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 2}});
  EXPECT_THROW(enumerate_h1(flat, HennebergSequence{}), InputError);
  EXPECT_THROW(enumerate_h1(tight_lengths(chain(5)), chain(4)), InputError);
}

TEST(EnumerateH1, CoincidentCentresAreDegenerate) {
  std::array<long double, 2> p{1, 2};
  EXPECT_THROW(detail::circle_intersection(p, 3.0L, p, 3.0L), DegenerateInput);
  EXPECT_TRUE(detail::circle_intersection(p, 3.0L, p, 2.0L).points.empty());
}

TEST(EnumerateH1, CircleIntersectionOrientation) {
  auto hits = detail::circle_intersection<long double>({0, 0}, 5, {6, 0}, 5);
  ASSERT_EQ(hits.points.size(), 2u);
  EXPECT_NEAR(static_cast<double>(hits.points[0][1]), 4.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(hits.points[1][1]), -4.0, 1e-15);
  EXPECT_TRUE(detail::circle_intersection<long double>({0, 0}, 1, {6, 0}, 1).points.empty());
}

TEST(VerifyEmbedding, PerturbationAndReflection) {
  Framework t = tight_lengths(HennebergSequence{});
  auto emb = enumerate_h1(t, HennebergSequence{});
  Embedding<long double> bent = emb[0];
  bent.points[2][0] += 1e-3L;
  EXPECT_FALSE(verify_embedding(t, bent, Rational(1, 1000000000)));
  EXPECT_TRUE(verify_embedding(t, reflect(emb[0]), Rational(1, 1000000000)));
  Embedding<long double> short_list = emb[0];
  short_list.points.pop_back();
  EXPECT_FALSE(verify_embedding(t, short_list, Rational(1, 1000000000)));
}

TEST(EnumerateH1, ClosedUnderReflection) {
  std::mt19937_64 rng(12);
  for (int n = 4; n <= 7; ++n) {
    HennebergSequence seq = random_h1(n, rng);
    Framework f = tight_lengths(seq);
    auto emb = enumerate_h1(f, seq);
    for (const auto& e : emb) {
      Embedding<long double> r = reflect(e);
      bool matched = std::any_of(emb.begin(), emb.end(), [&](const Embedding<long double>& o) {
        for (std::size_t v = 0; v < o.points.size(); ++v)
          if (distance(o.points[v], r.points[v]) > 1e-9L * (1 + std::abs(o.points[v][0]) + std::abs(o.points[v][1])))
            return false;
        return true;
      });
      EXPECT_TRUE(matched);
    }
  }
}

TEST(EnumerateH1, CountAtMostMixedVolume) {
  std::mt19937_64 rng(99);
  for (int n = 3; n <= 6; ++n) {
    HennebergSequence seq = random_h1(n, rng);
    Framework f = tight_lengths(seq);
    std::size_t count = enumerate_h1(f, seq).size();
    MVResult mv = mv_for_graph(f, GraphMVOptions{});
    EXPECT_LE(Rational(static_cast<long>(count)), mv.value);

    // Arbitrary lengths never exceed the bound either.
    std::map<Edge, Rational> lengths;
    std::uniform_int_distribution<int> len(2, 9);
    for (const auto& e : f.graph().edges()) lengths[e] = len(rng);
    lengths[Edge(1, 2)] = 6;
    lengths[Edge(1, 3)] = 5;
    lengths[Edge(2, 3)] = 4;
    Framework g(f.graph(), lengths);
    EXPECT_LE(enumerate_h1(g, seq).size(), std::size_t{1} << (n - 2));
  }
}

TEST(EnumerateH1, HigherPrecisionAgrees) {
  HennebergSequence seq = chain(6);
  Framework f = tight_lengths(seq);
  auto a = enumerate_h1<double>(f, seq);
  auto b = enumerate_h1<long double>(f, seq);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].branch, b[i].branch);
}
