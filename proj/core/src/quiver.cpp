#include "dp3/quiver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <numeric>
#include <sstream>

namespace dp3 {

namespace {

void check_vertex(int v) {
  if (v < 1 || v > kVars) throw std::out_of_range("vertex index must be 1..6");
}

int sgn(int x) { return (x > 0) - (x < 0); }

}  // namespace

QuiverMatrix initial_quiver() {
  return {{{0, 0, -1, 1, -1, 1},
           {0, 0, 1, -1, 1, -1},
           {1, -1, 0, 0, -1, 1},
           {-1, 1, 0, 0, 1, -1},
           {1, -1, 1, -1, 0, 0},
           {-1, 1, -1, 1, 0, 0}}};
}

Seed initial_seed() {
  Seed s;
  s.b = initial_quiver();
  for (int i = 0; i < kVars; ++i) s.cluster[i] = LaurentPoly::var(i + 1);
  return s;
}

QuiverMatrix mutate(const QuiverMatrix& b, int v) {
  check_vertex(v);
  const int k = v - 1;
  QuiverMatrix r{};
  for (int i = 0; i < kVars; ++i)
    for (int j = 0; j < kVars; ++j) {
      if (i == k || j == k)
        r[i][j] = -b[i][j];
      else
      {
        const long long v = b[i][j] + sgn(b[i][k]) * std::max(1LL * b[i][k] * b[k][j], 0LL);
        if (v > std::numeric_limits<int>::max() || v < -std::numeric_limits<int>::max())
          throw std::overflow_error("exchange matrix entry out of range");
        r[i][j] = static_cast<int>(v);
      }
    }
  return r;
}

Seed mutate(const Seed& s, int v) {
  check_vertex(v);
  const int k = v - 1;
  LaurentPoly out(1), in(1);
  for (int j = 0; j < kVars; ++j) {
    if (s.b[k][j] > 0) out *= s.cluster[j].pow(static_cast<unsigned>(s.b[k][j]));
    if (s.b[k][j] < 0) in *= s.cluster[j].pow(static_cast<unsigned>(-s.b[k][j]));
  }
  Seed r;
  r.b = mutate(s.b, v);
  r.cluster = s.cluster;
  r.cluster[k] = div_exact(out + in, s.cluster[k]);
  return r;
}

int out_degree(const QuiverMatrix& b, int v) {
  check_vertex(v);
  int d = 0;
  for (int j = 0; j < kVars; ++j) d += std::max(b[v - 1][j], 0);
  return d;
}

int in_degree(const QuiverMatrix& b, int v) {
  check_vertex(v);
  int d = 0;
  for (int j = 0; j < kVars; ++j) d += std::max(-b[v - 1][j], 0);
  return d;
}

bool is_toric(const QuiverMatrix& b, int v) { return in_degree(b, v) == 2 && out_degree(b, v) == 2; }
bool is_toric(const Seed& s, int v) { return is_toric(s.b, v); }

bool is_skew_symmetric(const QuiverMatrix& b) {
  for (int i = 0; i < kVars; ++i)
    for (int j = 0; j < kVars; ++j)
      if (b[i][j] != -b[j][i]) return false;
  return true;
}

const QuiverMatrix& model_reference(int model) {
  static const std::array<QuiverMatrix, 4> refs = [] {
    QuiverMatrix m1 = initial_quiver();
    QuiverMatrix m2 = mutate(m1, 1);
    QuiverMatrix m3 = mutate(m2, 4);
    QuiverMatrix m4 = mutate(m3, 3);
    return std::array<QuiverMatrix, 4>{m1, m2, m3, m4};
  }();
  if (model < 1 || model > 4) throw std::out_of_range("model must be 1..4");
  return refs[model - 1];
}

std::optional<int> classify_model(const QuiverMatrix& b) {
  std::array<int, kVars> perm;
  for (int model = 1; model <= 4; ++model) {
    const QuiverMatrix& ref = model_reference(model);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int sign : {1, -1}) {
        bool same = true;
        for (int i = 0; i < kVars && same; ++i)
          for (int j = 0; j < kVars; ++j)
            if (b[perm[i]][perm[j]] != sign * ref[i][j]) {
              same = false;
              break;
            }
        if (same) return model;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

std::string serialize(const Seed& s) {
  std::ostringstream os;
  for (const auto& row : s.b) {
    for (int j = 0; j < kVars; ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
  for (const auto& p : s.cluster) os << to_string(p) << '\n';
  return os.str();
}

Seed parse_seed(const std::string& text) {
  std::istringstream is(text);
  Seed s;
  std::string line;
  for (int i = 0; i < kVars; ++i) {
    if (!std::getline(is, line)) throw ParseError("seed: missing b-matrix row");
    std::istringstream row(line);
    for (int j = 0; j < kVars; ++j)
      if (!(row >> s.b[i][j])) throw ParseError("seed: b-matrix row needs 6 integers");
  }
  if (!is_skew_symmetric(s.b)) throw ParseError("seed: b-matrix is not skew-symmetric");
  for (int i = 0; i < kVars; ++i) {
    if (!std::getline(is, line)) throw ParseError("seed: missing cluster entry");
    s.cluster[i] = parse_laurent(line);
  }
  return s;
}

}  // namespace dp3
