#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "dp3/dimer.hpp"
#include "dp3/tiling.hpp"
#include "support.hpp"

using namespace dp3;
using dp3::testing::x;

namespace {

const LatticePoint kBase[6] = {{0, -1, 1}, {0, -1, 0}, {-1, 0, 0}, {-1, 0, 1}, {0, 0, 1}, {0, 0, 0}};

// true if b is a cyclic rotation of a or of a reversed
bool same_cycle(std::vector<int> a, std::vector<int> b) {
  if (a.size() != b.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (a == b) return true;
      std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

std::set<std::pair<int, int>> keys(const CutSubgraph& g) {
  std::set<std::pair<int, int>> out;
  for (const auto& v : g.vertices) out.insert({v.key.x, v.key.y});
  return out;
}

int balance(const CutSubgraph& g) {
  int d = 0;
  for (const auto& v : g.vertices) d += v.color == Color::black ? 1 : -1;
  return d;
}

}  // namespace

TEST(Tiling, FanCycles) {
  TilingGraph t = build_window(4);
  int complete = 0;
  for (int v = 0; v < static_cast<int>(t.vertices.size()); ++v) {
    std::vector<int> cyc = t.face_cycle(v);
    if (cyc.empty()) continue;
    ++complete;
    switch (t.vertices[v].cls) {
      case DegreeClass::white6:
        ASSERT_TRUE(same_cycle({1, 6, 4, 2, 5, 3}, cyc));
        break;
      case DegreeClass::white3a:
        ASSERT_TRUE(same_cycle({1, 4, 5}, cyc));
        break;
      case DegreeClass::white3b:
        ASSERT_TRUE(same_cycle({2, 3, 6}, cyc));
        break;
      case DegreeClass::black4:
        ASSERT_TRUE(same_cycle({1, 6, 2, 5}, cyc) || same_cycle({3, 6, 4, 5}, cyc) || same_cycle({1, 4, 2, 3}, cyc));
        break;
    }
  }
  EXPECT_GT(complete, 100);
}

TEST(Tiling, EdgesJoinOppositeColors) {
  TilingGraph t = build_window(3);
  for (const auto& e : t.edges) {
    ASSERT_NE(t.vertices[e.u].color, t.vertices[e.v].color);
    ASSERT_LT(e.face_a, e.face_b);
  }
}

TEST(Tiling, FundamentalDomainCounts) {
  TilingGraph t = build_window(4);
  auto in_cell = [](VertexKey k) { return k.x >= 0 && k.x < 6 && k.y >= 0 && k.y < 6; };
  int white = 0, black = 0, edges = 0;
  std::map<int, int> label_uses;
  for (const auto& v : t.vertices)
    if (in_cell(v.key)) (v.color == Color::white ? white : black)++;
  for (const auto& e : t.edges) {
    int w = t.vertices[e.u].color == Color::white ? e.u : e.v;
    if (!in_cell(t.vertices[w].key)) continue;
    ++edges;
    ++label_uses[e.face_a];
    ++label_uses[e.face_b];
  }
  EXPECT_EQ(white, 3);
  EXPECT_EQ(black, 3);
  EXPECT_EQ(edges, 12);
  // each quadrilateral face has four edges, so every label occurs four times
  for (int f = 1; f <= 6; ++f) EXPECT_EQ(label_uses[f], 4) << f;
  EXPECT_EQ(white + black - edges + 6, 0);
}

TEST(Tiling, WhiteSixEdgeLabels) {
  TilingGraph t = build_window(3);
  std::vector<std::vector<std::pair<int, int>>> around(t.vertices.size());
  for (const auto& e : t.edges) {
    around[e.u].push_back({e.face_a, e.face_b});
    around[e.v].push_back({e.face_a, e.face_b});
  }
  std::vector<std::pair<int, int>> want{{1, 6}, {4, 6}, {2, 4}, {2, 5}, {3, 5}, {1, 3}};
  std::sort(want.begin(), want.end());
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if (t.vertices[v].cls != DegreeClass::white6 || around[v].size() != 6) continue;
    std::sort(around[v].begin(), around[v].end());
    ASSERT_EQ(around[v], want);
  }
}

TEST(Tiling, RawBaseContourIsOneEdge) {
  CutSubgraph g = cut(phi(kBase[0]));
  EXPECT_FALSE(g.is_core);
  ASSERT_EQ(g.vertices.size(), 2u);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0].face_a, 4);
  EXPECT_EQ(g.edges[0].face_b, 5);
  EXPECT_EQ(partition_function(g), LaurentPoly::var(4, -1) * LaurentPoly::var(5, -1));
}

TEST(Tiling, RawCoveringMonomials) {
  for (int r : {0, 3, 4}) EXPECT_EQ(cut(phi(kBase[r])).covering_monomial(), x(1) * x(4) * x(5)) << r;
  for (int r : {1, 2, 5}) EXPECT_EQ(cut(phi(kBase[r])).covering_monomial(), x(2) * x(3) * x(6)) << r;
}

TEST(Tiling, BaseCases) {
  for (int r = 0; r < 6; ++r) {
    CutSubgraph raw = cut(phi(kBase[r]));
    EXPECT_EQ(c_value(raw), x(r + 1)) << r;
    EXPECT_EQ(c_value(core(raw)), x(r + 1)) << r;
  }
}

TEST(Tiling, CoreOfBaseContourIsForced) {
  // the single edge is a forced pair, so peeling leaves nothing and moves its weight into m(G)
  CutSubgraph g = core(cut(phi(kBase[0])));
  EXPECT_TRUE(g.is_core);
  EXPECT_TRUE(g.vertices.empty());
  EXPECT_EQ(g.covering_monomial(), x(1));
  EXPECT_EQ(partition_function(g), LaurentPoly(1));
}

TEST(Tiling, CoveringMonomialAfterPeeling) {
  CutSubgraph g = core(cut({2, -2, 1, 1, -1, 0}));
  EXPECT_EQ(g.covering_monomial(), x(1) * x(2) * x(3) * x(4) * x(5).pow(3) * x(6).pow(2));
}

TEST(Tiling, DragonCores) {
  for (int n = 1; n <= 3; ++n) {
    CutSubgraph g = core(cut(phi({0, n, 1})));
    EXPECT_EQ(balance(g), 0);
    EXPECT_EQ(match_count(g), mpz_class(1) << (n * (n + 1))) << n;
  }
}

TEST(Tiling, AntiparallelContours) {
  for (const SixTuple& t : {SixTuple{5, -5, 3, 0, 0, -2}, SixTuple{-5, 5, -2, 0, 0, 3}}) {
    CutSubgraph g = core(cut(t));
    EXPECT_EQ(balance(g), 0) << to_string(t);
    EXPECT_GT(match_count(g), 0) << to_string(t);
  }
  // same outline, different subgraphs
  EXPECT_NE(keys(cut({5, -5, 5, 0, 0, 0})), keys(cut({5, -5, 4, 0, 0, -1})));
  EXPECT_NE(keys(cut({5, -5, 4, 0, 0, -1})), keys(cut({5, -5, 3, 0, 0, -2})));
  // off the image of phi the core can be unmatchable
  EXPECT_THROW(core(cut({5, -5, 5, 0, 0, 0})), NoPerfectMatching);
}

TEST(Tiling, Errors) {
  EXPECT_THROW(cut(phi({1, 3, -1}), build_window(2)), WindowTooSmall);
  EXPECT_THROW(cut(phi({0, 0, 3})), SelfIntersecting);
  CutSubgraph g = core(cut(phi({1, 3, -1})));
  EXPECT_THROW(special_point(g, 0, 0), IndexOutOfRange);
  EXPECT_THROW(special_point(g, 0, 3), IndexOutOfRange);
  EXPECT_THROW(special_point(g, 2, 1), IndexOutOfRange);
  EXPECT_THROW(special_point_key(g.contour, 6, 1), IndexOutOfRange);
}

TEST(Tiling, SpecialPointColors) {
  CutSubgraph g = core(cut(phi({1, 3, -1})));
  for (int s = 0; s < 6; ++s) {
    int v = first_special_point(g, s);
    if (g.contour[s] == 0) {
      EXPECT_EQ(v, -1);
      continue;
    }
    ASSERT_GE(v, 0) << s;
    EXPECT_EQ(g.vertices[v].color, g.contour[s] > 0 ? Color::black : Color::white) << s;
  }
}

TEST(Tiling, LostFaces) {
  const int white[6] = {2, 5, 3, 1, 6, 4}, black[6] = {5, 3, 1, 6, 4, 2};
  for (int s = 0; s < 6; ++s) {
    EXPECT_EQ(lost_face(s, Color::white), white[s]);
    EXPECT_EQ(lost_face(s, Color::black), black[s]);
  }
}

TEST(Tiling, RemovingInteriorVertexIsTotal) {
  CutSubgraph g = core(cut(phi({1, 2, 0})));
  int v = static_cast<int>(g.vertices.size()) / 2;
  CutSubgraph h = remove_vertices(g, {v});
  EXPECT_EQ(h.vertices.size() + 1, g.vertices.size());
  EXPECT_EQ(h.find(g.vertices[v].key), -1);
  EXPECT_EQ(match_count(h), 0);
}

TEST(Tiling, SvgExport) {
  std::string svg = to_svg(cut(phi({1, 3, -1})));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_EQ(svg, to_svg(cut(phi({1, 3, -1}))));
}

TEST(TilingProperty, CoresAreBalanced) {
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j)
      for (int k = -3; k <= 4; ++k) {
        SixTuple t = phi({i, j, k});
        if (is_self_intersecting(t)) continue;
        CutSubgraph g = core(cut(t));
        ASSERT_EQ(balance(g), 0) << to_string(t);
      }
}

// removing the index-th special point of a side leaves the core cut out by the shifted contour
TEST(TilingProperty, SpecialPointRemovalShiftsContour) {
  int checked = 0, absent = 0, unmatchable = 0;
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j)
      for (int k = -1; k <= 2; ++k) {
        SixTuple t = phi({i, j, k});
        if (is_self_intersecting(t)) continue;
        CutSubgraph g = core(cut(t));
        for (int s = 0; s < 6; ++s) {
          if (t[s] == 0) continue;
          SixTuple shifted = t[s] > 0 ? t + removal_shift(s) : t - removal_shift(s);
          if (is_self_intersecting(shifted)) continue;
          std::optional<CutSubgraph> want;
          try {
            want = core(cut(shifted));
          } catch (const NoPerfectMatching&) {
          }
          for (int idx = 1; idx <= std::abs(t[s]); ++idx) {
            int v;
            try {
              v = special_point(g, s, idx);
            } catch (const PointAbsent&) {
              ++absent;
              continue;
            }
            if (!want) {
              ASSERT_THROW(remove_point(g, v), NoPerfectMatching) << to_string(t) << " side " << s;
              ++unmatchable;
              continue;
            }
            CutSubgraph got = remove_point(g, v);
            ASSERT_TRUE(same_up_to_translation(got, *want))
                << to_string(t) << " side " << s << " index " << idx << " -> " << to_string(shifted);
            ++checked;
          }
        }
      }
  EXPECT_GT(checked, 1000);
  RecordProperty("absent", absent);
  RecordProperty("unmatchable", unmatchable);
}
