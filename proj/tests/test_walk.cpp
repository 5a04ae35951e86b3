#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dp3/formula.hpp"
#include "dp3/walk.hpp"
#include "support.hpp"

using namespace dp3;
using dp3::testing::x;

namespace {

TauWord random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), sym(1, 5);
  TauWord w(len(rng));
  for (auto& t : w) t = sym(rng);
  return w;
}

}  // namespace

TEST(Walk, TauDefinitions) {
  EXPECT_EQ(tau_to_mutations(1).mutations, (std::vector<int>{1, 2}));
  EXPECT_EQ(tau_to_mutations(2).mutations, (std::vector<int>{3, 4}));
  EXPECT_EQ(tau_to_mutations(2).cycle, (std::vector<int>{3, 4}));
  EXPECT_EQ(tau_to_mutations(4).mutations, (std::vector<int>{1, 4, 1, 5, 1}));
  EXPECT_EQ(tau_to_mutations(4).cycle, (std::vector<int>{1, 4, 5}));
  EXPECT_EQ(tau_to_mutations(5).mutations, (std::vector<int>{2, 3, 2, 6, 2}));
  EXPECT_EQ(tau_to_mutations(5).cycle, (std::vector<int>{2, 3, 6}));
  EXPECT_THROW(tau_to_mutations(6), std::out_of_range);
}

TEST(Walk, EmptyWordIsIdentity) {
  EXPECT_EQ(apply_tau_word(initial_seed(), {}), initial_seed());
  EXPECT_EQ(parse_tau_word(""), TauWord{});
}

TEST(Walk, EachTauRestoresTheQuiver) {
  for (int t = 1; t <= 5; ++t) EXPECT_EQ(apply_tau(initial_seed(), t).b, initial_quiver()) << t;
}

TEST(Walk, Tau12CubedRestoresCluster) {
  EXPECT_EQ(apply_tau_word(initial_seed(), {1, 2, 1, 2, 1, 2}), initial_seed());
}

TEST(Walk, InitialPrism) {
  Prism want{{{0, -1, 1}, {0, -1, 0}, {-1, 0, 0}, {-1, 0, 1}, {0, 0, 1}, {0, 0, 0}}};
  EXPECT_EQ(prism_of({}), want);
  EXPECT_EQ(initial_alcove(), (Alcove{{{{0, -1}, {-1, 0}, {0, 0}}}}));
}

TEST(Walk, ExampleWordAlcoveAndPrism) {
  TauWord s1{1, 2, 3, 1, 2, 3, 2, 1};
  EXPECT_EQ(alcove_of(s1), (Alcove{{{{1, 3}, {1, 2}, {0, 3}}}}));
  Prism want{{{1, 3, -1}, {1, 3, 0}, {1, 2, 0}, {1, 2, -1}, {0, 3, -1}, {0, 3, 0}}};
  TauWord w = s1;
  w.push_back(4);
  EXPECT_EQ(prism_of(w), want);
}

TEST(Walk, ExampleWordCluster) {
  TauWord w{1, 2, 3, 1, 2, 3, 2, 1, 4};
  Seed s = apply_tau_word(initial_seed(), w);
  Prism p = prism_of(w);
  for (int r = 0; r < 6; ++r) EXPECT_EQ(s.cluster[r], cluster_variable(p[r])) << r;
  EXPECT_EQ(s.cluster[0].at_ones(), 393216);
}

TEST(Walk, TauFourFiveHasInfiniteOrder) {
  std::set<Prism> seen;
  TauWord w;
  for (int m = 0; m < 12; ++m) {
    EXPECT_TRUE(seen.insert(prism_of(w)).second) << m;
    w.push_back(4);
    w.push_back(5);
  }
}

TEST(Walk, FactorWord) {
  FactoredWord f = factor_word({1, 4, 2, 5, 3});
  EXPECT_EQ(f.s1, (TauWord{1, 2, 3}));
  EXPECT_EQ(f.s2, (TauWord{4, 5}));
  f = factor_word({4, 4, 1});
  EXPECT_EQ(f.s1, (TauWord{1}));
  EXPECT_TRUE(f.s2.empty());
  EXPECT_THROW(factor_word({4, 1, 4}, true), NotFactorable);
  EXPECT_NO_THROW(factor_word({4, 1, 5}, true));
}

TEST(Walk, ParseWords) {
  EXPECT_EQ(parse_tau_word("t1 t2 tau3 t4"), (TauWord{1, 2, 3, 4}));
  EXPECT_EQ(parse_mutation_word("m1 m4 m3"), (std::vector<int>{1, 4, 3}));
  EXPECT_THROW(parse_tau_word("t9"), ParseError);
  EXPECT_THROW(parse_mutation_word("m0"), ParseError);
  EXPECT_EQ(to_string(TauWord{1, 4}), "t1 t4");
}

TEST(Walk, LocateInitialVariable) {
  EXPECT_EQ(locate_variable(x(1), 2), (LatticePoint{0, -1, 1}));
  EXPECT_EQ(locate_variable(x(6), 2), (LatticePoint{0, 0, 0}));
}

TEST(Walk, LocateModel4Entry) {
  Seed s = apply_mutations(initial_seed(), {1, 4, 3});
  EXPECT_EQ(classify_model(s.b), 4);
  EXPECT_EQ(locate_variable(s.cluster[2], 4), prism_of({2, 1})[1]);
  EXPECT_EQ(s.cluster[2], apply_tau_word(initial_seed(), {2, 1}).cluster[1]);
}

TEST(Walk, LocateNonMember) {
  EXPECT_THROW(locate_variable(div_exact(x(1) + x(2), x(3)), 3), NotFound);
}

TEST(WalkProperty, CoxeterRelations) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 15; ++t) {
    Seed s = apply_tau_word(initial_seed(), random_word(rng, 5));
    for (int i = 1; i <= 5; ++i) ASSERT_EQ(apply_tau_word(s, {i, i}), s) << "tau" << i << " squared";
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (i != j) {
          ASSERT_EQ(apply_tau_word(s, {i, j, i, j, i, j}), s) << i << j;
        }
    for (int i = 1; i <= 3; ++i)
      for (int j = 4; j <= 5; ++j) ASSERT_EQ(apply_tau_word(s, {i, j}), apply_tau_word(s, {j, i})) << i << j;
  }
}

TEST(WalkProperty, MutationMatchesFormulaOnPrism) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    TauWord w = random_word(rng, 6);
    Seed s = apply_tau_word(initial_seed(), w);
    Prism p = prism_of(w);
    for (int r = 0; r < 6; ++r) ASSERT_EQ(s.cluster[r], cluster_variable(p[r])) << to_string(w) << " entry " << r;
  }
}

TEST(WalkProperty, SingleStepsMoveThePrismLocally) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 200; ++t) {
    TauWord w = random_word(rng, 8);
    Prism before = prism_of(w);
    for (int s = 1; s <= 5; ++s) {
      TauWord w2 = w;
      w2.push_back(s);
      Prism after = prism_of(w2);
      if (s <= 3) {
        // one alcove vertex is reflected, so exactly the two points above it change
        int changed = 0;
        for (int r = 0; r < 6; ++r) {
          changed += before[r] != after[r];
          ASSERT_EQ(before[r].k, after[r].k);
        }
        ASSERT_EQ(changed, 2) << to_string(w2);
      } else {
        int shifts = 0;
        for (int r = 0; r < 6; ++r) {
          ASSERT_EQ(before[r].i, after[r].i);
          ASSERT_EQ(before[r].j, after[r].j);
        }
        auto lo = [](const Prism& p) {
          return std::min_element(p.begin(), p.end(), [](auto& a, auto& b) { return a.k < b.k; })->k;
        };
        shifts = lo(after) - lo(before);
        ASSERT_EQ(std::abs(shifts), 1) << to_string(w2);
      }
    }
  }
}

TEST(WalkProperty, AlcovesStayUnitTriangles) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 300; ++t) {
    TauWord w = random_word(rng, 10);
    FactoredWord f = factor_word(w);
    Alcove a = alcove_of(f.s1);
    for (int r = 0; r < 3; ++r) ASSERT_EQ(mod_pos(a.v[r].first - a.v[r].second, 3), (r + 1) % 3);
    // the three edge vectors are unit steps of the triangulated square lattice
    for (int r = 0; r < 3; ++r) {
      int di = a.v[(r + 1) % 3].first - a.v[r].first, dj = a.v[(r + 1) % 3].second - a.v[r].second;
      ASSERT_TRUE(std::abs(di) <= 1 && std::abs(dj) <= 1 && di * dj <= 0 && (di != 0 || dj != 0));
    }
  }
}
