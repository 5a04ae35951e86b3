#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dp3/quiver.hpp"
#include "support.hpp"

using namespace dp3;
using dp3::testing::x;

namespace {

int toric_count(const QuiverMatrix& b) {
  int n = 0;
  for (int v = 1; v <= 6; ++v) n += is_toric(b, v);
  return n;
}

std::vector<int> toric_vertices(const QuiverMatrix& b) {
  std::vector<int> out;
  for (int v = 1; v <= 6; ++v)
    if (is_toric(b, v)) out.push_back(v);
  return out;
}

}  // namespace

TEST(Quiver, InitialMatrixRows) {
  QuiverMatrix expected{{{0, 0, -1, 1, -1, 1},
                         {0, 0, 1, -1, 1, -1},
                         {1, -1, 0, 0, -1, 1},
                         {-1, 1, 0, 0, 1, -1},
                         {1, -1, 1, -1, 0, 0},
                         {-1, 1, -1, 1, 0, 0}}};
  EXPECT_EQ(initial_quiver(), expected);
  EXPECT_EQ(initial_seed().b, expected);
  EXPECT_TRUE(is_skew_symmetric(expected));
}

TEST(Quiver, InitialClusterAndArrow16) {
  Seed s = initial_seed();
  for (int i = 0; i < 6; ++i) EXPECT_EQ(s.cluster[i], x(i + 1));
  EXPECT_EQ(s.b[0][5], 1);
  EXPECT_EQ(s.b[5][0], -1);
}

TEST(Quiver, InitialVerticesAllToric) {
  QuiverMatrix b = initial_quiver();
  for (int v = 1; v <= 6; ++v) {
    EXPECT_EQ(in_degree(b, v), 2);
    EXPECT_EQ(out_degree(b, v), 2);
    EXPECT_TRUE(is_toric(b, v));
  }
}

TEST(Quiver, FirstMutationExchange) {
  Seed s = mutate(initial_seed(), 1);
  EXPECT_EQ(s.cluster[0], div_exact(x(3) * x(5) + x(4) * x(6), x(1)));
  for (int i = 1; i < 6; ++i) EXPECT_EQ(s.cluster[i], x(i + 1));
}

TEST(Quiver, MatrixMutationRule) {
  QuiverMatrix b = initial_quiver();
  for (int v = 1; v <= 6; ++v) {
    QuiverMatrix m = mutate(b, v);
    int k = v - 1;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        int want;
        if (i == k || j == k)
          want = -b[i][j];
        else
          want = b[i][j] + (b[i][k] > 0 ? 1 : b[i][k] < 0 ? -1 : 0) * std::max(b[i][k] * b[k][j], 0);
        ASSERT_EQ(m[i][j], want);
      }
  }
}

TEST(Quiver, SingleMutationGivesModel2) {
  EXPECT_EQ(classify_model(initial_quiver()), 1);
  for (int v = 1; v <= 6; ++v) EXPECT_EQ(classify_model(mutate(initial_quiver(), v)), 2) << v;
}

TEST(Quiver, ModelPathToModel4) {
  QuiverMatrix b = mutate(mutate(initial_quiver(), 1), 4);
  EXPECT_EQ(classify_model(b), 3);
  EXPECT_EQ(toric_count(b), 5);
  b = mutate(b, 3);
  EXPECT_EQ(classify_model(b), 4);
  EXPECT_EQ(toric_count(b), 3);
}

TEST(Quiver, ReferencesClassifyToThemselves) {
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(classify_model(model_reference(m)), m);
}

TEST(Quiver, EdgeReversalKeepsModel) {
  for (int m = 1; m <= 4; ++m) {
    QuiverMatrix r = model_reference(m);
    for (auto& row : r)
      for (auto& e : row) e = -e;
    EXPECT_EQ(classify_model(r), m);
  }
}

TEST(Quiver, NotAModel) {
  EXPECT_FALSE(classify_model(QuiverMatrix{}).has_value());
  QuiverMatrix b = initial_quiver();
  b[0][5] = 3;
  b[5][0] = -3;
  EXPECT_FALSE(classify_model(b).has_value());
}

TEST(Quiver, SerializeRoundTrip) {
  Seed s = mutate(mutate(initial_seed(), 1), 4);
  EXPECT_EQ(parse_seed(serialize(s)), s);
}

TEST(QuiverProperty, MutationIsInvolution) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pick(1, 6);
  for (int t = 0; t < 100; ++t) {
    Seed s = initial_seed();
    int len = pick(rng);
    for (int i = 0; i < len; ++i) s = mutate(s, pick(rng));
    int v = pick(rng);
    ASSERT_EQ(mutate(mutate(s, v), v), s);
  }
}

TEST(QuiverProperty, SkewSymmetryPreserved) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> pick(1, 6);
  for (int t = 0; t < 500; ++t) {
    QuiverMatrix b = initial_quiver();
    for (int i = 0; i < 12; ++i) {
      try {
        b = mutate(b, pick(rng));
      } catch (const std::overflow_error&) {
        break;
      }
      ASSERT_TRUE(is_skew_symmetric(b));
      for (int d = 0; d < 6; ++d) ASSERT_EQ(b[d][d], 0);
    }
  }
}

// Laurent phenomenon with positive coefficients along toric walks of length 10
TEST(QuiverProperty, ToricWalksStayLaurentPositive) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    Seed s = initial_seed();
    for (int i = 0; i < 10; ++i) {
      auto tv = toric_vertices(s.b);
      ASSERT_FALSE(tv.empty());
      s = mutate(s, tv[std::uniform_int_distribution<std::size_t>(0, tv.size() - 1)(rng)]);
      for (const auto& c : s.cluster) ASSERT_TRUE(c.all_coefficients_positive());
    }
  }
}

// the same for arbitrary vertices, shorter words since non-toric mutations grow quickly
TEST(QuiverProperty, ArbitraryWalksStayLaurentPositive) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> pick(1, 6);
  for (int t = 0; t < 40; ++t) {
    Seed s = initial_seed();
    for (int i = 0; i < 6; ++i) {
      s = mutate(s, pick(rng));
      for (const auto& c : s.cluster) ASSERT_TRUE(c.all_coefficients_positive());
    }
  }
}

TEST(QuiverProperty, ModelTransitionsAreAdjacent) {
  std::mt19937_64 rng(31);
  std::set<std::pair<int, int>> seen;
  for (int t = 0; t < 200; ++t) {
    QuiverMatrix b = initial_quiver();
    int model = 1;
    for (int i = 0; i < 12; ++i) {
      auto tv = toric_vertices(b);
      b = mutate(b, tv[std::uniform_int_distribution<std::size_t>(0, tv.size() - 1)(rng)]);
      auto m = classify_model(b);
      ASSERT_TRUE(m.has_value());
      ASSERT_LE(std::abs(*m - model), 1) << model << " -> " << *m;
      if (*m == model) {
        ASSERT_EQ(model, 3);
      }
      seen.insert({std::min(model, *m), std::max(model, *m)});
      model = *m;
    }
  }
  EXPECT_EQ(seen, (std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 3}, {3, 4}}));
}

// of the three double-arrow vertices of Model 3 only one reaches Model 4; the other two stay in Model 3
TEST(Quiver, ModelThreeNeighbours) {
  QuiverMatrix b = mutate(mutate(initial_quiver(), 1), 4);
  ASSERT_EQ(classify_model(b), 3);
  std::vector<int> to(7, 0);
  for (int v : toric_vertices(b)) to[v] = *classify_model(mutate(b, v));
  EXPECT_EQ(to, (std::vector<int>{0, 3, 3, 4, 2, 2, 0}));
  EXPECT_EQ(in_degree(b, 6), 4);
  EXPECT_EQ(out_degree(b, 6), 4);
}

TEST(Quiver, MutationOverflowIsReported) {
  QuiverMatrix b{};
  b[0][1] = 1 << 16;
  b[1][0] = -(1 << 16);
  b[1][2] = 1 << 16;
  b[2][1] = -(1 << 16);
  EXPECT_THROW(mutate(b, 2), std::overflow_error);
}
