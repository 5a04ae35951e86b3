#include "dp3/dimer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace dp3 {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// a monomial 1/prod x_l^(e_l) is packed as sum e_l << (kField * (l-1))
constexpr int kField = 10;
constexpr int kMaxPairs = (1 << kField) - 1;

struct MatchGraph {
  int n = 0;
  std::vector<std::vector<std::pair<int, u64>>> adj;
  bool balanced = true;
};

u64 edge_key(const Edge& e) { return (u64{1} << (kField * (e.face_a - 1))) + (u64{1} << (kField * (e.face_b - 1))); }

MatchGraph build(const CutSubgraph& g) {
  MatchGraph m;
  m.n = static_cast<int>(g.vertices.size());
  if (m.n / 2 > kMaxPairs) throw std::length_error("graph too large for packed monomials");
  m.adj.resize(m.n);
  for (const Edge& e : g.edges) {
    m.adj[e.u].emplace_back(e.v, edge_key(e));
    m.adj[e.v].emplace_back(e.u, edge_key(e));
  }
  int black = 0;
  for (const Vertex& v : g.vertices) black += v.color == Color::black;
  m.balanced = 2 * black == m.n;
  return m;
}

mpz_class to_mpz(u128 x) {
  mpz_class r;
  const u64 parts[2] = {static_cast<u64>(x), static_cast<u64>(x >> 64)};
  mpz_import(r.get_mpz_t(), 2, -1, sizeof(u64), 0, 0, parts);
  return r;
}

u128 checked_add(u128 a, u128 b) {
  const u128 s = a + b;
  if (s < a) throw std::overflow_error("matching count exceeds 128 bits");
  return s;
}

template <class Terms>
LaurentPoly to_laurent(const Terms& terms) {
  LaurentPoly p;
  for (const auto& [key, coef] : terms) {
    ExponentVector e;
    for (int l = 0; l < kVars; ++l) e[l] = -static_cast<int>((key >> (kField * l)) & kMaxPairs);
    p.add_term(e, to_mpz(coef));
  }
  return p;
}

class Enumerator {
 public:
  Enumerator(const MatchGraph& g, u64 budget) : g_(g), budget_(budget), matched_(g.n, 0), deg_(g.n) {
    for (int v = 0; v < g.n; ++v) deg_[v] = static_cast<int>(g.adj[v].size());
  }

  std::unordered_map<u64, u128> run() {
    search(g_.n, 0);
    return std::move(out_);
  }

 private:
  void set_matched(int v, int delta) {
    matched_[v] = delta < 0;
    for (const auto& [u, w] : g_.adj[v]) deg_[u] += delta;
  }

  void search(int remaining, u64 key) {
    if (remaining == 0) {
      if (++leaves_ > budget_) throw BudgetExceeded(leaves_ - 1, budget_);
      out_[key] += 1;
      return;
    }
    int best = -1, best_deg = std::numeric_limits<int>::max();
    for (int v = 0; v < g_.n; ++v) {
      if (matched_[v] || deg_[v] >= best_deg) continue;
      best = v;
      best_deg = deg_[v];
      if (best_deg <= 1) break;
    }
    if (best_deg == 0) return;
    set_matched(best, -1);
    for (const auto& [u, w] : g_.adj[best]) {
      if (matched_[u]) continue;
      set_matched(u, -1);
      search(remaining - 2, key + w);
      set_matched(u, +1);
    }
    set_matched(best, +1);
  }

  const MatchGraph& g_;
  u64 budget_;
  u64 leaves_ = 0;
  std::vector<char> matched_;
  std::vector<int> deg_;
  std::unordered_map<u64, u128> out_;
};

// sorted by key
using Poly = std::vector<std::pair<u64, u128>>;

void merge_into(Poly& dst, const Poly& src, u64 shift) {
  if (dst.empty()) {
    dst.reserve(src.size());
    for (const auto& [k, c] : src) dst.emplace_back(k + shift, c);
    return;
  }
  Poly r;
  r.reserve(dst.size() + src.size());
  std::size_t a = 0, b = 0;
  while (a < dst.size() || b < src.size()) {
    if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first + shift)) {
      r.push_back(dst[a++]);
    } else if (a == dst.size() || src[b].first + shift < dst[a].first) {
      r.emplace_back(src[b].first + shift, src[b].second);
      ++b;
    } else {
      r.emplace_back(dst[a].first, checked_add(dst[a].second, src[b].second));
      ++a;
      ++b;
    }
  }
  dst.swap(r);
}

struct MaskHash {
  std::size_t operator()(u128 m) const {
    const u64 lo = static_cast<u64>(m), hi = static_cast<u64>(m >> 64);
    return std::hash<u64>()(lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x632be59bd9b4e019ULL));
  }
};

constexpr int kMaxBand = 127;

struct SweepOrder {
  std::vector<int> order;  // order[pos] = vertex
  int band = 0;            // largest position gap along an edge
  int frontier = 0;        // largest number of vertices ahead already touched
};

SweepOrder sweep_order(const CutSubgraph& g, const MatchGraph& m, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  std::vector<std::pair<double, int>> proj;
  for (int v = 0; v < m.n; ++v) {
    const auto [x, y] = key_to_plane(g.vertices[v].key);
    proj.emplace_back(x * c + y * s, v);
  }
  std::sort(proj.begin(), proj.end());
  SweepOrder so;
  std::vector<int> pos(m.n);
  for (int p = 0; p < m.n; ++p) {
    so.order.push_back(proj[p].second);
    pos[proj[p].second] = p;
  }
  // frontier after position p: vertices beyond p adjacent to something at or before p
  std::vector<int> first_touch(m.n, m.n);  // by position
  for (int v = 0; v < m.n; ++v)
    for (const auto& [u, w] : m.adj[v]) {
      const int pv = pos[v], pu = pos[u];
      so.band = std::max(so.band, std::abs(pv - pu));
      if (pv < pu) first_touch[pu] = std::min(first_touch[pu], pv);
    }
  std::vector<int> delta(m.n + 1, 0);
  for (int p = 0; p < m.n; ++p)
    if (first_touch[p] < p) {
      ++delta[first_touch[p]];
      --delta[p];
    }
  int run = 0;
  for (int p = 0; p < m.n; ++p) so.frontier = std::max(so.frontier, run += delta[p]);
  return so;
}

SweepOrder best_order(const CutSubgraph& g, const MatchGraph& m) {
  SweepOrder best;
  bool have = false;
  for (int step = 0; step < 12; ++step) {
    // the small tilt keeps ties in projection from lining up with lattice rows
    SweepOrder so = sweep_order(g, m, step * M_PI / 12 + 0.01);
    if (so.band > kMaxBand) continue;
    if (!have || so.frontier < best.frontier || (so.frontier == best.frontier && so.band < best.band)) {
      best = std::move(so);
      have = true;
    }
  }
  if (!have) throw std::length_error("no sweep order with bandwidth below 128");
  return best;
}

struct TransferResult {
  Poly value;
  std::size_t width = 0;
};

TransferResult transfer(const CutSubgraph& g, const MatchGraph& m) {
  TransferResult res;
  if (m.n == 0) {
    res.value = {{0, 1}};
    return res;
  }
  const SweepOrder so = best_order(g, m);
  std::vector<int> pos(m.n);
  for (int p = 0; p < m.n; ++p) pos[so.order[p]] = p;
  // forward neighbours by position
  std::vector<std::vector<std::pair<int, u64>>> ahead(m.n);
  for (int v = 0; v < m.n; ++v)
    for (const auto& [u, w] : m.adj[v])
      if (pos[u] > pos[v]) ahead[pos[v]].emplace_back(pos[u] - pos[v], w);

  // bit d of a state: the vertex d positions after the current one is already matched
  std::unordered_map<u128, Poly, MaskHash> cur, next;
  cur[0] = {{0, 1}};
  for (int p = 0; p < m.n; ++p) {
    next.clear();
    for (auto& [mask, poly] : cur) {
      if (mask & 1) {
        merge_into(next[mask >> 1], poly, 0);
        continue;
      }
      for (const auto& [d, w] : ahead[p]) {
        const u128 bit = u128{1} << d;
        if (mask & bit) continue;
        merge_into(next[(mask | bit) >> 1], poly, w);
      }
    }
    cur.swap(next);
    res.width = std::max(res.width, cur.size());
    if (cur.empty()) return res;
  }
  auto it = cur.find(0);
  if (it != cur.end()) res.value = std::move(it->second);
  return res;
}

}  // namespace

LaurentPoly partition_function(const CutSubgraph& g, const PfOptions& opt) {
  const MatchGraph m = build(g);
  if (m.n % 2 || !m.balanced) return LaurentPoly();
  if (opt.engine == Engine::transfer) return to_laurent(transfer(g, m).value);
  Enumerator e(m, opt.budget);
  return to_laurent(e.run());
}

mpz_class match_count(const CutSubgraph& g, const PfOptions& opt) { return partition_function(g, opt).at_ones(); }

LaurentPoly c_value(const CutSubgraph& g, const PfOptions& opt) {
  return g.covering_monomial() * partition_function(g, opt);
}

std::size_t transfer_width(const CutSubgraph& g) {
  const MatchGraph m = build(g);
  return transfer(g, m).width;
}

std::pair<int, int> plane_step(int direction) {
  static constexpr std::pair<int, int> steps[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  return steps[((direction % 6) + 6) % 6];
}

RecurrenceTerms recurrence_terms(const LatticePoint& p, Recurrence kind, int direction, int dk) {
  RecurrenceTerms r;
  r.kind = kind;
  r.direction = direction;
  auto at = [&](int di, int dj, int dkk) { return LatticePoint{p.i + di, p.j + dj, p.k + dkk}; };
  const auto [ui, uj] = plane_step(direction);
  const auto [wi, wj] = plane_step(direction + 1);
  switch (kind) {
    case Recurrence::R4:
      if (dk != 1 && dk != -1) throw std::invalid_argument("R4 needs dk = +1 or -1");
      r.dk = dk;
      r.lhs = {at(0, 0, 0), at(ui + wi, uj + wj, dk)};
      r.rhs1 = {at(ui, uj, 0), at(wi, wj, dk)};
      r.rhs2 = {at(ui, uj, dk), at(wi, wj, 0)};
      break;
    case Recurrence::R2:
      r.lhs = {at(0, 0, 0), at(2 * ui, 2 * uj, 0)};
      r.rhs1 = {at(ui, uj, -1), at(ui, uj, 1)};
      r.rhs2 = {at(ui, uj, 0), at(ui, uj, 0)};
      break;
    case Recurrence::R1:
      r.lhs = {at(0, 0, 0), at(ui, uj, -2)};
      r.rhs1 = {at(wi, wj, -1), at(ui - wi, uj - wj, -1)};
      r.rhs2 = {at(0, 0, -1), at(ui, uj, -1)};
      break;
  }
  return r;
}

std::vector<RecurrenceTerms> recurrence_instances(const LatticePoint& p) {
  std::vector<RecurrenceTerms> out;
  for (int t = 0; t < 6; ++t) {
    out.push_back(recurrence_terms(p, Recurrence::R4, t, 1));
    out.push_back(recurrence_terms(p, Recurrence::R4, t, -1));
    out.push_back(recurrence_terms(p, Recurrence::R2, t));
    out.push_back(recurrence_terms(p, Recurrence::R1, t));
  }
  return out;
}

RecurrenceCheck check_recurrence(const RecurrenceTerms& r, const PfOptions& opt) {
  const LatticePoint pts[6] = {r.lhs[0], r.lhs[1], r.rhs1[0], r.rhs1[1], r.rhs2[0], r.rhs2[1]};
  for (const auto& p : pts)
    if (is_self_intersecting(phi(p)))
      throw SkippedSelfIntersecting(to_string(phi(p)) + " for " + to_string(p) + " is self-intersecting");
  LaurentPoly c[6];
  for (int x = 0; x < 6; ++x) c[x] = c_value(core(cut(phi(pts[x]))), opt);
  RecurrenceCheck out;
  out.lhs = c[0] * c[1];
  out.rhs = c[2] * c[3] + c[4] * c[5];
  out.holds = out.lhs == out.rhs;
  return out;
}

RecurrenceCheck check_recurrence(const LatticePoint& p, Recurrence kind, int direction, int dk,
                                 const PfOptions& opt) {
  return check_recurrence(recurrence_terms(p, kind, direction, dk), opt);
}

std::string to_string(Recurrence r) {
  switch (r) {
    case Recurrence::R1: return "R1";
    case Recurrence::R2: return "R2";
    case Recurrence::R4: return "R4";
  }
  return "?";
}

}  // namespace dp3
