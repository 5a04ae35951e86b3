#include "dp3/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dp3/laurent.hpp"

namespace dp3 {

Lat2 lattice_direction(int d) {
  static constexpr Lat2 dirs[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  return dirs[((d % 6) + 6) % 6];
}

int side_direction(int s) {
  static constexpr int dirs[6] = {5, 4, 3, 2, 1, 0};
  return dirs[s];
}

SixTuple phi(const LatticePoint& p) {
  const auto [i, j, k] = p;
  return {j + k, -i - j - k, i + k, j + 1 - k, -i - j - 1 + k, i + 1 - k};
}

std::optional<LatticePoint> phi_inverse(const SixTuple& t) {
  const int diff = t[0] - t[3] + 1;  // = 2k
  if (diff % 2) return std::nullopt;
  const int k = diff / 2;
  LatticePoint p{t[2] - k, t[0] - k, k};
  if (phi(p) != t) return std::nullopt;
  return p;
}

SixTuple sigma(const SixTuple& t, int m) { return {t[0] + m, t[1] - m, t[2] + m, t[3] - m, t[4] + m, t[5] - m}; }

SixTuple theta(const SixTuple& t) { return {-t[5], -t[0], -t[1], -t[2], -t[3], -t[4]}; }

SixTuple negate(const SixTuple& t) { return {-t[0], -t[1], -t[2], -t[3], -t[4], -t[5]}; }

bool closes(const SixTuple& t) { return t[0] + t[1] == t[3] + t[4] && t[2] + t[3] == t[5] + t[0]; }

int side_sum(const SixTuple& t) { return t[0] + t[1] + t[2] + t[3] + t[4] + t[5]; }

bool is_valid_closed(const SixTuple& t) { return closes(t) && side_sum(t) == 1; }

std::array<Lat2, 7> contour_path(const SixTuple& t, Lat2 start) {
  std::array<Lat2, 7> pts;
  pts[0] = start;
  for (int s = 0; s < 6; ++s) pts[s + 1] = pts[s] + lattice_direction(side_direction(s)) * t[s];
  return pts;
}

namespace {

long cross(Lat2 o, Lat2 a, Lat2 b) {
  return long(a.m - o.m) * (b.n - o.n) - long(a.n - o.n) * (b.m - o.m);
}

bool on_segment(Lat2 p, Lat2 a, Lat2 b) {
  return cross(a, b, p) == 0 && std::min(a.m, b.m) <= p.m && p.m <= std::max(a.m, b.m) &&
         std::min(a.n, b.n) <= p.n && p.n <= std::max(a.n, b.n);
}

bool segments_touch(Lat2 a, Lat2 b, Lat2 c, Lat2 d) {
  const long d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  return on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b);
}

}  // namespace

bool is_self_intersecting(const SixTuple& t) {
  const auto pts = contour_path(t);
  std::vector<std::pair<Lat2, Lat2>> segs;
  for (int s = 0; s < 6; ++s)
    if (t[s] != 0) segs.emplace_back(pts[s], pts[s + 1]);
  const int n = static_cast<int>(segs.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const auto [a, b] = segs[x];
      const auto [c, d] = segs[y];
      const bool next = y == x + 1, wrap = x == 0 && y == n - 1;
      if (next || wrap) {
        // consecutive segments share a corner; only a fold back along the same line intersects
        const Lat2 shared = next ? b : a, p = next ? a : b, q = next ? d : c;
        if (cross(shared, p, q) == 0) {
          const Lat2 u = p - shared, v = q - shared;
          if (long(u.m) * v.m + long(u.n) * v.n > 0) return true;
        }
      } else if (segments_touch(a, b, c, d)) {
        return true;
      }
    }
  return false;
}

namespace {

char sign_char(int x) { return x > 0 ? '+' : (x < 0 ? '-' : '0'); }

std::string rotate(const std::string& w, int r) { return w.substr(r) + w.substr(0, r); }

std::string flip_signs(const std::string& w) {
  std::string r = w;
  for (char& c : r) c = c == '+' ? '-' : (c == '-' ? '+' : '0');
  return r;
}

std::set<std::string> orbit_of(const std::string& w) {
  std::set<std::string> out;
  for (int r = 0; r < 6; ++r) {
    out.insert(rotate(w, r));
    out.insert(flip_signs(rotate(w, r)));
  }
  return out;
}

int zero_free_case(const std::string& w) {
  static const std::pair<const char*, int> bases[] = {{"+--+--", 1}, {"+--++-", 2}, {"+---+-", 3}, {"+-+-+-", 5}};
  for (const auto& [base, label] : bases)
    if (orbit_of(base).count(w)) return label;
  return 0;
}

}  // namespace

SignPattern sign_pattern(const SixTuple& t) {
  SignPattern sp;
  for (int x : t) sp.word += sign_char(x);
  const auto orb = orbit_of(sp.word);
  sp.orbit = *orb.begin();
  if (sp.word.find('0') == std::string::npos) {
    sp.case_label = zero_free_case(sp.word);
    return sp;
  }
  sp.case_label = 4;
  std::vector<int> zeros;
  for (int s = 0; s < 6; ++s)
    if (sp.word[s] == '0') zeros.push_back(s);
  std::set<int> labels;
  for (unsigned mask = 0; mask < (1u << zeros.size()); ++mask) {
    std::string w = sp.word;
    for (std::size_t z = 0; z < zeros.size(); ++z) w[zeros[z]] = (mask >> z) & 1 ? '+' : '-';
    if (int c = zero_free_case(w)) labels.insert(c);
  }
  sp.compatible.assign(labels.begin(), labels.end());
  return sp;
}

SixTuple removal_shift(int side) {
  SixTuple v{};
  v[side] = -1;
  v[(side + 1) % 6] = 1;
  v[(side + 5) % 6] = 1;
  return v;
}

std::string to_string(const SixTuple& t) {
  std::string s = "C(";
  for (int x = 0; x < 6; ++x) s += (x ? "," : "") + std::to_string(t[x]);
  return s + ")";
}

SixTuple parse_contour(const std::string& text) {
  std::string body = text;
  auto open = body.find('('), close = body.rfind(')');
  if (open != std::string::npos && close != std::string::npos && close > open)
    body = body.substr(open + 1, close - open - 1);
  for (char& c : body)
    if (c == ',') c = ' ';
  std::istringstream is(body);
  SixTuple t;
  for (int& x : t)
    if (!(is >> x)) throw ParseError("contour needs six integers: " + text);
  std::string rest;
  if (is >> rest) throw ParseError("trailing text in contour: " + text);
  return t;
}

std::pair<double, double> to_plane(double m, double n) { return {m + 0.5 * n, n * std::sqrt(3.0) / 2.0}; }

std::string contour_svg(const SixTuple& t, double scale) {
  const auto pts = contour_path(t);
  double minx = 1e9, maxx = -1e9, miny = 1e9, maxy = -1e9;
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : pts) {
    auto [x, y] = to_plane(p.m, p.n);
    xy.emplace_back(x * scale, -y * scale);
    minx = std::min(minx, x * scale);
    maxx = std::max(maxx, x * scale);
    miny = std::min(miny, -y * scale);
    maxy = std::max(maxy, -y * scale);
  }
  const double pad = scale;
  std::ostringstream os;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.2f %.2f %.2f %.2f", minx - pad, miny - pad, maxx - minx + 2 * pad,
                maxy - miny + 2 * pad);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << buf << "\">\n";
  os << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" << scale / 12 << "\" points=\"";
  for (std::size_t i = 0; i < xy.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", xy[i].first, xy[i].second);
    os << buf;
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace dp3
