#include "dp3/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace dp3 {

namespace {

// label of the face in the sector at 30 + 60*s degrees around a white-6 vertex
constexpr int kSectorLabel[6] = {2, 4, 6, 1, 3, 5};

int direction_index(Lat2 d) {
  for (int x = 0; x < 6; ++x)
    if (lattice_direction(x) == d) return x;
  throw std::logic_error("not a unit lattice vector");
}

VertexKey white_key(Lat2 p) { return {6 * p.m, 6 * p.n}; }
VertexKey black_key(Lat2 p, Lat2 q) { return {3 * (p.m + q.m), 3 * (p.n + q.n)}; }

VertexKey center_key(const Triangle& t) {
  VertexKey k;
  for (const Lat2& c : t.corners()) {
    k.x += 2 * c.m;
    k.y += 2 * c.n;
  }
  return k;
}

std::pair<int, int> sorted_pair(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

// faces on either side of the half edge leaving p towards q
std::pair<int, int> half_edge_labels(Lat2 p, Lat2 q) {
  const int d = direction_index(q - p);
  return sorted_pair(kSectorLabel[d], kSectorLabel[(d + 5) % 6]);
}

int hex_norm(Lat2 p) { return std::max({std::abs(p.m), std::abs(p.n), std::abs(p.m + p.n)}); }

// winding number of the closed polygon around pt
int winding(Lat2 pt, const std::vector<Lat2>& poly) {
  auto cross = [](Lat2 a, Lat2 b, Lat2 p) { return long(b.m - a.m) * (p.n - a.n) - long(p.m - a.m) * (b.n - a.n); };
  int wn = 0;
  for (std::size_t x = 0; x + 1 < poly.size(); ++x) {
    const Lat2 a = poly[x], b = poly[x + 1];
    if (a.n <= pt.n) {
      if (b.n > pt.n && cross(a, b, pt) > 0) ++wn;
    } else if (b.n <= pt.n && cross(a, b, pt) < 0) {
      --wn;
    }
  }
  return wn;
}

Lat2 centroid3(const Triangle& t) {
  Lat2 s;
  for (const Lat2& c : t.corners()) s = s + c;
  return s;
}

std::vector<Lat2> scaled_polygon(const SixTuple& t) {
  std::vector<Lat2> poly;
  for (const Lat2& p : contour_path(t)) poly.push_back(p * 3);
  return poly;
}

bool is_inside(const Triangle& tr, const std::vector<Lat2>& poly3) { return winding(centroid3(tr), poly3) != 0; }

struct RawGraph {
  std::map<VertexKey, Vertex> vertices;
  std::map<std::pair<VertexKey, VertexKey>, std::pair<int, int>> edges;

  void add_vertex(VertexKey k, Color c, DegreeClass cls) { vertices.emplace(k, Vertex{k, c, cls}); }
  void add_edge(VertexKey a, VertexKey b, std::pair<int, int> labels) {
    edges.emplace(a < b ? std::pair{a, b} : std::pair{b, a}, labels);
  }

  void add_triangle(const Triangle& tr) {
    const auto cs = tr.corners();
    const auto ls = tr.labels();
    const VertexKey c = center_key(tr);
    add_vertex(c, Color::white, tr.up ? DegreeClass::white3b : DegreeClass::white3a);
    for (int x = 0; x < 3; ++x) {
      const Lat2 p = cs[x], q = cs[(x + 1) % 3];
      const VertexKey b = black_key(p, q);
      add_vertex(b, Color::black, DegreeClass::black4);
      add_vertex(white_key(p), Color::white, DegreeClass::white6);
      add_edge(c, b, sorted_pair(ls[x], ls[(x + 1) % 3]));
      add_edge(white_key(p), b, half_edge_labels(p, q));
      add_edge(white_key(q), b, half_edge_labels(q, p));
    }
  }
};

void fill_indexed(const RawGraph& raw, const std::set<VertexKey>& drop, std::vector<Vertex>& vs, std::vector<Edge>& es,
                  std::map<VertexKey, int>* index_out = nullptr) {
  std::map<VertexKey, int> index;
  for (const auto& [k, v] : raw.vertices) {
    if (drop.count(k)) continue;
    index.emplace(k, static_cast<int>(vs.size()));
    vs.push_back(v);
  }
  for (const auto& [ends, labels] : raw.edges) {
    auto a = index.find(ends.first), b = index.find(ends.second);
    if (a == index.end() || b == index.end()) continue;
    es.push_back(Edge{a->second, b->second, labels.first, labels.second});
  }
  if (index_out) *index_out = std::move(index);
}

// maximal runs of zero sides: (first side of run, length, side before, side after)
struct ZeroRun {
  int start, length, before, after;
};

std::vector<ZeroRun> zero_runs(const SixTuple& t) {
  std::vector<ZeroRun> runs;
  int first = -1;
  for (int s = 0; s < 6; ++s)
    if (t[s] != 0) {
      first = s;
      break;
    }
  if (first < 0) return runs;
  for (int off = 1; off <= 6;) {
    const int s = (first + off) % 6;
    if (t[s] != 0) {
      ++off;
      continue;
    }
    int len = 0;
    while (t[(s + len) % 6] == 0) ++len;
    runs.push_back({s, len, (s + 5) % 6, (s + len) % 6});
    off += len;
  }
  return runs;
}

CutSubgraph cut_impl(const SixTuple& t, const TilingGraph* window) {
  if (!closes(t)) throw std::invalid_argument(to_string(t) + " does not close up");
  if (is_self_intersecting(t)) throw SelfIntersecting(to_string(t) + " is self-intersecting");
  const auto pts = contour_path(t);
  const auto poly3 = scaled_polygon(t);
  int lo_m = 0, hi_m = 0, lo_n = 0, hi_n = 0;
  for (const Lat2& p : pts) {
    lo_m = std::min(lo_m, p.m);
    hi_m = std::max(hi_m, p.m);
    lo_n = std::min(lo_n, p.n);
    hi_n = std::max(hi_n, p.n);
  }
  CutSubgraph g;
  g.contour = t;
  RawGraph raw;
  for (int m = lo_m - 1; m <= hi_m + 1; ++m)
    for (int n = lo_n - 1; n <= hi_n + 1; ++n)
      for (bool up : {true, false}) {
        const Triangle tr{up, {m, n}};
        if (!is_inside(tr, poly3)) continue;
        if (window)
          for (const Lat2& c : tr.corners())
            if (!window->contains(c))
              throw WindowTooSmall("window of radius " + std::to_string(window->radius) + " does not hold " +
                                   to_string(t));
        g.inside.push_back(tr);
        const auto ls = tr.labels();
        for (int l : ls) ++g.face_counts[l - 1];
        raw.add_triangle(tr);
      }

  std::set<VertexKey> drop;
  for (int s = 0; s < 6; ++s) {
    const int len = t[s];
    const Lat2 d = lattice_direction(side_direction(s));
    if (len > 0) {
      for (int x = 0; x < len; ++x) {
        const Lat2 p = pts[s] + d * x;
        drop.insert(black_key(p, p + d));
      }
    } else if (len < 0) {
      const Lat2 dd = d * -1;
      for (int x = 0; x <= -len; ++x) drop.insert(white_key(pts[s] + dd * x));
    }
  }
  for (const ZeroRun& r : zero_runs(t)) {
    if (t[r.before] <= 0 || t[r.after] <= 0 || r.length < 2) continue;
    if (r.length != 3)
      throw CutDiagnostic("zero run of length " + std::to_string(r.length) + " between positive sides in " +
                          to_string(t));
    drop.insert(white_key(pts[r.start]));
  }
  for (const VertexKey& k : drop)
    if (raw.vertices.count(k)) g.removed.push_back(k);
  fill_indexed(raw, drop, g.vertices, g.edges);
  return g;
}

}  // namespace

std::array<Lat2, 3> Triangle::corners() const {
  if (up) return {base, base + Lat2{1, 0}, base + Lat2{0, 1}};
  return {base, base + Lat2{0, 1}, base + Lat2{-1, 1}};
}

std::array<int, 3> Triangle::labels() const {
  if (up) return {kSectorLabel[0], kSectorLabel[2], kSectorLabel[4]};
  return {kSectorLabel[1], kSectorLabel[3], kSectorLabel[5]};
}

bool TilingGraph::contains(Lat2 p) const { return hex_norm(p) <= radius; }

std::vector<int> TilingGraph::face_cycle(int v) const {
  const VertexKey c = vertices[v].key;
  std::vector<std::pair<double, const Edge*>> around;
  for (const Edge& e : edges) {
    if (e.u != v && e.v != v) continue;
    const VertexKey o = vertices[e.u == v ? e.v : e.u].key;
    const auto [x0, y0] = key_to_plane(c);
    const auto [x1, y1] = key_to_plane(o);
    around.emplace_back(std::atan2(y1 - y0, x1 - x0), &e);
  }
  const std::size_t full = vertices[v].cls == DegreeClass::white6 ? 6 : (vertices[v].cls == DegreeClass::black4 ? 4 : 3);
  if (around.size() != full) return {};
  std::sort(around.begin(), around.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> out;
  for (std::size_t x = 0; x < around.size(); ++x) {
    const Edge& a = *around[x].second;
    const Edge& b = *around[(x + 1) % around.size()].second;
    for (int l : {a.face_a, a.face_b})
      if (l == b.face_a || l == b.face_b) out.push_back(l);
  }
  return out;
}

TilingGraph build_window(int radius) {
  if (radius < 1) throw std::invalid_argument("window radius must be positive");
  TilingGraph g;
  g.radius = radius;
  RawGraph raw;
  for (int m = -radius - 1; m <= radius + 1; ++m)
    for (int n = -radius - 1; n <= radius + 1; ++n)
      for (bool up : {true, false}) {
        const Triangle tr{up, {m, n}};
        const auto cs = tr.corners();
        if (std::all_of(cs.begin(), cs.end(), [&](Lat2 c) { return g.contains(c); })) {
          g.triangles.push_back(tr);
          raw.add_triangle(tr);
        }
      }
  fill_indexed(raw, {}, g.vertices, g.edges, &g.index);
  return g;
}

int window_radius_for(int max_side) { return 3 * std::max(max_side, 1) + 1; }

int CutSubgraph::find(VertexKey k) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), k,
                             [](const Vertex& v, const VertexKey& key) { return v.key < key; });
  return it != vertices.end() && it->key == k ? static_cast<int>(it - vertices.begin()) : -1;
}

ExponentVector CutSubgraph::monomial_exponents() const {
  ExponentVector e;
  for (int l = 0; l < 6; ++l) e[l] = face_counts[l] - forced_counts[l];
  return e;
}

LaurentPoly CutSubgraph::covering_monomial() const { return LaurentPoly::monomial(monomial_exponents()); }

CutSubgraph cut(const SixTuple& t, const TilingGraph& window) { return cut_impl(t, &window); }

CutSubgraph cut(const SixTuple& t) { return cut_impl(t, nullptr); }

CutSubgraph core(const CutSubgraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> inc(n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    inc[g.edges[e].u].push_back(e);
    inc[g.edges[e].v].push_back(e);
  }
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(inc[v].size());
    if (deg[v] == 0) throw NoPerfectMatching("isolated vertex in " + to_string(g.contour));
  }
  for (int v = n - 1; v >= 0; --v)
    if (deg[v] == 1) stack.push_back(v);
  CutSubgraph r = g;
  auto other = [&](int e, int v) { return g.edges[e].u == v ? g.edges[e].v : g.edges[e].u; };
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (!alive[v] || deg[v] != 1) continue;
    int e = -1;
    for (int f : inc[v])
      if (alive[other(f, v)]) e = f;
    const int u = other(e, v);
    alive[v] = alive[u] = 0;
    r.forced.push_back(g.edges[e]);
    ++r.forced_counts[g.edges[e].face_a - 1];
    ++r.forced_counts[g.edges[e].face_b - 1];
    for (int f : inc[u]) {
      const int w = other(f, u);
      if (!alive[w]) continue;
      if (--deg[w] == 0) throw NoPerfectMatching("peeling isolates a vertex in " + to_string(g.contour));
      if (deg[w] == 1) stack.push_back(w);
    }
  }
  std::vector<int> gone;
  for (int v = 0; v < n; ++v)
    if (!alive[v]) gone.push_back(v);
  CutSubgraph out = remove_vertices(r, gone);
  out.removed = g.removed;
  out.is_core = true;
  return out;
}

CutSubgraph remove_vertices(const CutSubgraph& g, const std::vector<int>& vs) {
  std::vector<char> drop(g.vertices.size(), 0);
  for (int v : vs) {
    if (v < 0 || v >= static_cast<int>(g.vertices.size())) throw std::out_of_range("no such vertex");
    drop[v] = 1;
  }
  CutSubgraph r = g;
  r.vertices.clear();
  r.edges.clear();
  r.is_core = false;
  std::vector<int> newid(g.vertices.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (drop[v]) {
      r.removed.push_back(g.vertices[v].key);
      continue;
    }
    newid[v] = static_cast<int>(r.vertices.size());
    r.vertices.push_back(g.vertices[v]);
  }
  for (const Edge& e : g.edges)
    if (newid[e.u] >= 0 && newid[e.v] >= 0) r.edges.push_back(Edge{newid[e.u], newid[e.v], e.face_a, e.face_b});
  return r;
}

CutSubgraph remove_point(const CutSubgraph& g, int v) { return core(remove_vertices(g, {v})); }

bool same_up_to_translation(const CutSubgraph& a, const CutSubgraph& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  if (a.vertices.empty()) return true;
  const VertexKey ma = a.vertices.front().key, mb = b.vertices.front().key;
  const int dx = ma.x - mb.x, dy = ma.y - mb.y;
  if (dx % 6 || dy % 6) return false;
  for (std::size_t v = 0; v < a.vertices.size(); ++v) {
    const VertexKey kb = b.vertices[v].key;
    if (a.vertices[v].key != VertexKey{kb.x + dx, kb.y + dy}) return false;
  }
  // vertex lists are sorted and aligned, so edges compare by index
  auto edge_set = [](const CutSubgraph& g) {
    std::set<std::tuple<int, int, int, int>> s;
    for (const Edge& e : g.edges) s.emplace(std::min(e.u, e.v), std::max(e.u, e.v), e.face_a, e.face_b);
    return s;
  };
  return edge_set(a) == edge_set(b);
}

VertexKey special_point_key(const SixTuple& t, int side, int index) {
  if (side < 0 || side > 5) throw IndexOutOfRange("side must be 0..5");
  const int len = t[side];
  if (index < 1 || index > std::abs(len))
    throw IndexOutOfRange("side " + std::string(1, char('A' + side)) + " has " + std::to_string(std::abs(len)) +
                          " special points, asked for " + std::to_string(index));
  const auto pts = contour_path(t);
  const auto poly3 = scaled_polygon(t);
  const Lat2 d = lattice_direction(side_direction(side)) * (len > 0 ? 1 : -1);
  const Lat2 p = pts[side] + d * (index - 1), q = p + d;
  const int di = direction_index(d);
  for (int turn : {1, 5}) {
    const Lat2 apex = p + lattice_direction(di + turn);
    Triangle tr{true, p};
    // find the unit triangle with corners p, q, apex
    for (bool up : {true, false})
      for (const Lat2& base : {p, q, apex}) {
        const Triangle cand{up, base};
        const auto cs = cand.corners();
        auto has = [&](Lat2 x) { return std::find(cs.begin(), cs.end(), x) != cs.end(); };
        if (has(p) && has(q) && has(apex)) tr = cand;
      }
    if (!is_inside(tr, poly3)) continue;
    return len > 0 ? black_key(p, apex) : white_key(apex);
  }
  throw std::logic_error("no interior triangle on side " + std::to_string(side) + " of " + to_string(t));
}

int special_point(const CutSubgraph& g, int side, int index) {
  const VertexKey k = special_point_key(g.contour, side, index);
  const int v = g.find(k);
  if (v < 0) throw PointAbsent("special point " + std::to_string(index) + " of side " + std::to_string(side) +
                               " is not in the graph");
  return v;
}

int first_special_point(const CutSubgraph& g, int side) {
  for (int x = 1; x <= std::abs(g.contour[side]); ++x) {
    const int v = g.find(special_point_key(g.contour, side, x));
    if (v >= 0) return v;
  }
  return -1;
}

int lost_face(int side, Color color) {
  static constexpr int white[6] = {2, 5, 3, 1, 6, 4};
  static constexpr int black[6] = {5, 3, 1, 6, 4, 2};
  return color == Color::white ? white[side] : black[side];
}

std::pair<double, double> key_to_plane(VertexKey k) { return to_plane(k.x / 6.0, k.y / 6.0); }

std::string to_svg(const CutSubgraph& g, double scale) {
  static const char* fills[6] = {"#f4d03f", "#85c1e9", "#f1948a", "#82e0aa", "#d7bde2", "#f8c471"};
  double minx = 1e18, maxx = -1e18, miny = 1e18, maxy = -1e18;
  auto at = [&](VertexKey k) {
    auto [x, y] = key_to_plane(k);
    return std::pair{x * scale, -y * scale};
  };
  auto grow = [&](std::pair<double, double> p) {
    minx = std::min(minx, p.first);
    maxx = std::max(maxx, p.first);
    miny = std::min(miny, p.second);
    maxy = std::max(maxy, p.second);
  };
  for (const Lat2& p : contour_path(g.contour)) grow(at(white_key(p)));
  std::ostringstream body;
  char buf[256];
  for (const Triangle& tr : g.inside) {
    const auto cs = tr.corners();
    const auto ls = tr.labels();
    const auto c = at(center_key(tr));
    for (int x = 0; x < 3; ++x) {
      const auto w = at(white_key(cs[x]));
      const auto m1 = at(black_key(cs[x], cs[(x + 1) % 3]));
      const auto m2 = at(black_key(cs[x], cs[(x + 2) % 3]));
      std::snprintf(buf, sizeof buf, "<polygon points=\"%.2f,%.2f %.2f,%.2f %.2f,%.2f %.2f,%.2f\" fill=\"%s\"/>\n",
                    w.first, w.second, m1.first, m1.second, c.first, c.second, m2.first, m2.second, fills[ls[x] - 1]);
      body << buf;
    }
  }
  for (const Edge& e : g.edges) {
    const auto a = at(g.vertices[e.u].key), b = at(g.vertices[e.v].key);
    std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#333\"/>\n", a.first,
                  a.second, b.first, b.second);
    body << buf;
  }
  const double r = scale / 14;
  for (const VertexKey& k : g.removed) {
    const auto p = at(k);
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"2,2\"/>\n",
                  p.first, p.second, r);
    body << buf;
  }
  for (const Vertex& v : g.vertices) {
    const auto p = at(v.key);
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\" stroke=\"#000\"/>\n", p.first,
                  p.second, r, v.color == Color::black ? "#000" : "#fff");
    body << buf;
  }
  std::string contour_pts;
  for (const Lat2& p : contour_path(g.contour)) {
    const auto q = at(white_key(p));
    std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", contour_pts.empty() ? "" : " ", q.first, q.second);
    contour_pts += buf;
  }
  body << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" << scale / 12 << "\" points=\"" << contour_pts
       << "\"/>\n";
  const double pad = scale;
  std::ostringstream os;
  std::snprintf(buf, sizeof buf, "%.2f %.2f %.2f %.2f", minx - pad, miny - pad, maxx - minx + 2 * pad,
                maxy - miny + 2 * pad);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << buf << "\">\n" << body.str() << "</svg>\n";
  return os.str();
}

}  // namespace dp3
