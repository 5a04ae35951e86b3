#include "dp3/kuo.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dp3/formula.hpp"

namespace dp3 {

namespace {

unsigned bit(int pos) { return 1u << pos; }

// rotation r such that colors r, r+1, ... satisfy pred
template <class Pred>
int find_rotation(const std::array<Color, 4>& c, Pred pred) {
  for (int r = 0; r < 4; ++r)
    if (pred(c[r], c[(r + 1) % 4], c[(r + 2) % 4], c[(r + 3) % 4])) return r;
  throw std::logic_error("no rotation fits the color pattern");
}

int count_black(const std::array<Color, 4>& c) {
  return static_cast<int>(std::count(c.begin(), c.end(), Color::black));
}

std::array<unsigned, 6> used_masks(const KuoTerms& t) {
  return {t.lhs[0], t.lhs[1], t.rhs[0][0], t.rhs[0][1], t.rhs[1][0], t.rhs[1][1]};
}

SixTuple target_contour(const SixTuple& outer, const std::array<int, 4>& sides, const std::array<int, 4>& signs,
                        unsigned mask) {
  SixTuple u = outer;
  for (int q = 0; q < 4; ++q)
    if (mask & (1u << q))
      for (int s = 0; s < 6; ++s) u[s] += signs[q] * removal_shift(sides[q])[s];
  return u;
}

constexpr int kMaxCandidates = 5;

// special point indices for which every H - S has the target core, if any
std::optional<std::array<int, 4>> choose_indices(const SixTuple& outer, const std::array<int, 4>& sides,
                                                 const std::array<int, 4>& signs, const KuoTerms& t) {
  CutSubgraph h;
  try {
    h = cut(outer);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::array<std::vector<std::pair<int, int>>, 4> cand;  // (index, vertex)
  for (int q = 0; q < 4; ++q) {
    const int len = std::abs(outer[sides[q]]);
    std::vector<int> order;
    for (int x = 1; x <= len; ++x) order.push_back(x);
    const double mid = (len + 1) / 2.0;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return std::abs(a - mid) < std::abs(b - mid); });
    for (int x : order) {
      const int v = h.find(special_point_key(outer, sides[q], x));
      if (v >= 0 && cand[q].size() < kMaxCandidates) cand[q].emplace_back(x, v);
    }
    if (cand[q].empty()) return std::nullopt;
  }
  std::map<unsigned, std::optional<CutSubgraph>> targets;
  for (unsigned m : used_masks(t)) {
    if (targets.count(m)) continue;
    try {
      targets[m] = core(cut(target_contour(outer, sides, signs, m)));
    } catch (const std::exception&) {
      targets[m] = std::nullopt;
    }
  }
  std::array<std::size_t, 4> at{};
  while (true) {
    bool ok = true;
    for (const auto& [m, target] : targets) {
      std::vector<int> drop;
      for (int q = 0; q < 4; ++q)
        if (m & (1u << q)) drop.push_back(cand[q][at[q]].second);
      try {
        ok = false;
        if (target) {
          const CutSubgraph g = core(remove_vertices(h, drop));
          ExponentVector e = g.monomial_exponents();
          for (int q = 0; q < 4; ++q)
            if (m & (1u << q)) --e[lost_face(sides[q], signs[q] > 0 ? Color::black : Color::white) - 1];
          ok = e == target->monomial_exponents() && same_up_to_translation(g, *target);
        }
      } catch (const NoPerfectMatching&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok) return std::array<int, 4>{cand[0][at[0]].first, cand[1][at[1]].first, cand[2][at[2]].first,
                                      cand[3][at[3]].first};
    int q = 3;
    while (q >= 0 && ++at[q] == cand[q].size()) at[q--] = 0;
    if (q < 0) return std::nullopt;
  }
}

}  // namespace

std::string to_string(KuoVariant v) {
  switch (v) {
    case KuoVariant::balanced: return "balanced";
    case KuoVariant::unbalanced: return "unbalanced";
    case KuoVariant::nonalternating: return "non-alternating";
    case KuoVariant::monochromatic: return "monochromatic";
  }
  return "?";
}

KuoVariant kuo_variant(const std::array<Color, 4>& c) {
  const int b = count_black(c);
  if (b == 0 || b == 4) return KuoVariant::monochromatic;
  if (b == 1 || b == 3) return KuoVariant::unbalanced;
  if (c[0] != c[1] && c[1] != c[2] && c[2] != c[3]) return KuoVariant::balanced;
  return KuoVariant::nonalternating;
}

KuoTerms kuo_terms(const std::array<Color, 4>& c) {
  KuoTerms t;
  switch (kuo_variant(c)) {
    case KuoVariant::balanced:
      t.lhs = {0u, 15u};
      t.rhs = {{{bit(0) | bit(1), bit(2) | bit(3)}, {bit(0) | bit(3), bit(1) | bit(2)}}};
      break;
    case KuoVariant::monochromatic:
      t.lhs = {bit(0) | bit(2), bit(1) | bit(3)};
      t.rhs = {{{bit(0) | bit(1), bit(2) | bit(3)}, {bit(1) | bit(2), bit(3) | bit(0)}}};
      break;
    case KuoVariant::nonalternating: {
      const int r = find_rotation(c, [](Color a, Color b, Color x, Color y) { return a == b && x == y; });
      const unsigned q0 = bit(r), q1 = bit((r + 1) % 4), q2 = bit((r + 2) % 4), q3 = bit((r + 3) % 4);
      t.lhs = {q0 | q3, q1 | q2};
      t.rhs = {{{0u, 15u}, {q0 | q2, q1 | q3}}};
      break;
    }
    case KuoVariant::unbalanced: {
      const int r = find_rotation(c, [](Color a, Color b, Color x, Color) { return a == b && b == x; });
      const unsigned q0 = bit(r), q1 = bit((r + 1) % 4), q2 = bit((r + 2) % 4), q3 = bit((r + 3) % 4);
      t.lhs = {q1, q0 | q2 | q3};
      t.rhs = {{{q0, q1 | q2 | q3}, {q2, q0 | q1 | q3}}};
      break;
    }
  }
  return t;
}

KuoCheck kuo_check(const CutSubgraph& h, const std::array<int, 4>& points, KuoVariant variant,
                   const PfOptions& opt) {
  std::array<Color, 4> colors;
  for (int x = 0; x < 4; ++x) {
    if (points[x] < 0 || points[x] >= static_cast<int>(h.vertices.size()))
      throw PreconditionViolated("point " + std::to_string(x + 1) + " is not a vertex of the graph");
    for (int y = 0; y < x; ++y)
      if (points[x] == points[y]) throw PreconditionViolated("the four points must be distinct");
    colors[x] = h.vertices[points[x]].color;
  }
  if (kuo_variant(colors) != variant)
    throw PreconditionViolated("point colors form a " + to_string(kuo_variant(colors)) + " pattern, not " +
                               to_string(variant));
  int black = 0;
  for (const Vertex& v : h.vertices) black += v.color == Color::black;
  const int white = static_cast<int>(h.vertices.size()) - black;
  // excess of the color holding the majority of the four points
  const bool majority_black = count_black(colors) >= 2;
  const int excess = majority_black ? black - white : white - black;
  const int need = variant == KuoVariant::unbalanced ? 1 : (variant == KuoVariant::monochromatic ? 2 : 0);
  if (excess != need)
    throw PreconditionViolated("color classes have sizes " + std::to_string(black) + " black and " +
                               std::to_string(white) + " white, which does not fit the " + to_string(variant) +
                               " identity");

  const KuoTerms t = kuo_terms(colors);
  KuoCheck out;
  out.variant = variant;
  std::array<bool, 16> have{};
  auto w = [&](unsigned mask) -> const LaurentPoly& {
    if (!have[mask]) {
      std::vector<int> drop;
      for (int x = 0; x < 4; ++x)
        if (mask & bit(x)) drop.push_back(points[x]);
      out.w[mask] = partition_function(remove_vertices(h, drop), opt);
      have[mask] = true;
    }
    return out.w[mask];
  };
  out.lhs = w(t.lhs[0]) * w(t.lhs[1]);
  out.rhs = w(t.rhs[0][0]) * w(t.rhs[0][1]) + w(t.rhs[1][0]) * w(t.rhs[1][1]);
  out.holds = out.lhs == out.rhs;
  return out;
}

std::vector<KuoInstance> kuo_instances(const RecurrenceTerms& r) {
  const SixTuple c = phi(r.lhs[0]);
  const SixTuple d = phi(r.lhs[1]) - c;
  auto pair_key = [](LatticePoint a, LatticePoint b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
  std::multiset<std::pair<LatticePoint, LatticePoint>> want = {pair_key(r.rhs1[0], r.rhs1[1]),
                                                              pair_key(r.rhs2[0], r.rhs2[1])};
  std::vector<KuoInstance> out;
  std::array<int, 6> cv;
  for (int code = 0; code < 729; ++code) {
    int plus = 0, minus = 0;
    for (int x = 0, v = code; x < 6; ++x, v /= 3) {
      cv[x] = v % 3 - 1;
      plus += cv[x] > 0;
      minus += cv[x] < 0;
    }
    if (plus != 2 || minus != 2) continue;
    SixTuple sum{};
    for (int x = 0; x < 6; ++x)
      for (int s = 0; s < 6; ++s) sum[s] += cv[x] * removal_shift(x)[s];
    if (sum != d) continue;
    std::array<int, 4> sup;
    for (int x = 0, n = 0; x < 6; ++x)
      if (cv[x]) sup[n++] = x;
    for (unsigned s1 = 0; s1 < 16; ++s1) {
      std::array<int, 4> sign;
      SixTuple outer = c;
      for (int q = 0; q < 4; ++q) {
        const bool in_s1 = s1 & bit(q);
        sign[q] = in_s1 ? -cv[sup[q]] : cv[sup[q]];
        if (in_s1)
          for (int s = 0; s < 6; ++s) outer[s] += cv[sup[q]] * removal_shift(sup[q])[s];
      }
      bool ok = true;
      for (int q = 0; q < 4 && ok; ++q) ok = outer[sup[q]] != 0 && (outer[sup[q]] > 0) == (sign[q] > 0);
      if (!ok || is_self_intersecting(outer)) continue;
      std::array<Color, 4> colors;
      for (int q = 0; q < 4; ++q) colors[q] = sign[q] > 0 ? Color::black : Color::white;
      const KuoTerms t = kuo_terms(colors);
      if (std::set<unsigned>{t.lhs[0], t.lhs[1]} != std::set<unsigned>{s1, 15u & ~s1}) continue;
      auto point_of = [&](unsigned mask) -> std::optional<LatticePoint> {
        SixTuple u = outer;
        for (int q = 0; q < 4; ++q)
          if (mask & bit(q))
            for (int s = 0; s < 6; ++s) u[s] += sign[q] * removal_shift(sup[q])[s];
        if (is_self_intersecting(u)) return std::nullopt;
        return phi_inverse(u);
      };
      std::multiset<std::pair<LatticePoint, LatticePoint>> got;
      for (const auto& pr : t.rhs) {
        const auto a = point_of(pr[0]), b = point_of(pr[1]);
        if (!a || !b) {
          ok = false;
          break;
        }
        got.insert(pair_key(*a, *b));
      }
      if (!ok || got != want) continue;
      const auto indices = choose_indices(outer, sup, sign, t);
      if (!indices) continue;
      KuoInstance inst;
      inst.indices = *indices;
      inst.terms = r;
      inst.outer = outer;
      inst.sides = sup;
      inst.signs = sign;
      inst.s1 = s1;
      inst.variant = kuo_variant(colors);
      out.push_back(inst);
    }
  }
  return out;
}

KuoInstanceCheck check_instance(const KuoInstance& inst, const PfOptions& opt) {
  const CutSubgraph h = cut(inst.outer);
  std::array<int, 4> pts;
  for (int q = 0; q < 4; ++q) {
    pts[q] = special_point(h, inst.sides[q], inst.indices[q]);
  }
  KuoInstanceCheck out;
  out.kuo = kuo_check(h, pts, inst.variant, opt);
  out.matches_formula = true;
  const LaurentPoly m = h.covering_monomial();
  std::array<Color, 4> colors;
  for (int q = 0; q < 4; ++q) colors[q] = inst.signs[q] > 0 ? Color::black : Color::white;
  const KuoTerms t = kuo_terms(colors);
  for (unsigned mask = 0; mask < 16; ++mask) {
    const auto used = used_masks(t);
    if (std::find(used.begin(), used.end(), mask) == used.end()) continue;
    ExponentVector lost{};
    for (int q = 0; q < 4; ++q)
      if (mask & bit(q)) ++lost[lost_face(inst.sides[q], inst.signs[q] > 0 ? Color::black : Color::white) - 1];
    const auto p = phi_inverse(target_contour(inst.outer, inst.sides, inst.signs, mask));
    if (!p) {
      out.matches_formula = false;
      continue;
    }
    out.points[mask] = *p;
    ExponentVector inv;
    for (int l = 0; l < kVars; ++l) inv[l] = -lost[l];
    if (m * LaurentPoly::monomial(inv) * out.kuo.w[mask] != cluster_variable(*p)) out.matches_formula = false;
  }
  return out;
}

const std::vector<FigureInstance>& figure_instances() {
  static const std::vector<FigureInstance> table = {
      {28, {0, 5, 3}, Recurrence::R1, KuoVariant::balanced},
      {29, {0, 5, 3}, Recurrence::R2, KuoVariant::balanced},
      {30, {-5, 3, 1}, Recurrence::R4, KuoVariant::unbalanced},
      {31, {-3, -2, 1}, Recurrence::R4, KuoVariant::unbalanced},
      {32, {1, 3, 1}, Recurrence::R4, KuoVariant::unbalanced},
      {33, {-5, 6, 6}, Recurrence::R2, KuoVariant::nonalternating},
      {34, {0, 4, 0}, Recurrence::R2, KuoVariant::monochromatic},
  };
  return table;
}

std::optional<KuoInstance> figure_instance(int number) {
  for (const FigureInstance& f : figure_instances()) {
    if (f.number != number) continue;
    for (const RecurrenceTerms& r : recurrence_instances(f.p)) {
      if (r.kind != f.kind) continue;
      for (const KuoInstance& inst : kuo_instances(r))
        if (inst.variant == f.variant) return inst;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Recurrence> classify_shift(int di, int dj, int dk) {
  for (int t = 0; t < 6; ++t) {
    const auto [ui, uj] = plane_step(t);
    const auto [wi, wj] = plane_step(t + 1);
    if (di == ui + wi && dj == uj + wj && (dk == 1 || dk == -1)) return Recurrence::R4;
    if (di == 2 * ui && dj == 2 * uj && dk == 0) return Recurrence::R2;
    if (di == ui && dj == uj && (dk == 2 || dk == -2)) return Recurrence::R1;
  }
  return std::nullopt;
}

Lat2 superposition_shift(const SixTuple& c, const SixTuple& shifted) {
  const int da = shifted[0] - c[0], df = shifted[5] - c[5];
  const Lat2 left{-1, 0}, down_right{1, -1};
  Lat2 s;
  if (da >= 2) s = s + left;
  if (da <= -2) s = s - left;
  if (df >= 2) s = s + down_right;
  if (df <= -2) s = s - down_right;
  if (std::abs(da) < 2 && std::abs(df) < 2) {
    if (df == 0) s = left * da;
    if (da == 0) s = down_right * df;
  }
  return s;
}

}  // namespace dp3
