#include "dp3/walk.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "dp3/formula.hpp"

namespace dp3 {

TauDefinition tau_to_mutations(int t) {
  switch (t) {
    case 1: return {{1, 2}, {1, 2}};
    case 2: return {{3, 4}, {3, 4}};
    case 3: return {{5, 6}, {5, 6}};
    case 4: return {{1, 4, 1, 5, 1}, {1, 4, 5}};
    case 5: return {{2, 3, 2, 6, 2}, {2, 3, 6}};
    default: throw std::out_of_range("tau symbol must be 1..5");
  }
}

Seed apply_mutations(const Seed& s, const std::vector<int>& word) {
  Seed r = s;
  for (int v : word) r = mutate(r, v);
  return r;
}

Seed apply_tau(const Seed& s, int t) {
  const TauDefinition def = tau_to_mutations(t);
  Seed m = apply_mutations(s, def.mutations);
  std::array<int, kVars> dest;
  for (int i = 0; i < kVars; ++i) dest[i] = i;
  const int n = static_cast<int>(def.cycle.size());
  for (int c = 0; c < n; ++c) dest[def.cycle[c] - 1] = def.cycle[(c + 1) % n] - 1;
  Seed r;
  for (int i = 0; i < kVars; ++i) {
    r.cluster[dest[i]] = std::move(m.cluster[i]);
    for (int j = 0; j < kVars; ++j) r.b[dest[i]][dest[j]] = m.b[i][j];
  }
  return r;
}

Seed apply_tau_word(const Seed& s, const TauWord& w) {
  Seed r = s;
  for (int t : w) r = apply_tau(r, t);
  return r;
}

bool Alcove::points_ne() const {
  // NE-pointing alcoves have two vertices sharing the larger j
  int maxj = std::max({v[0].second, v[1].second, v[2].second});
  int count = 0;
  for (const auto& p : v) count += p.second == maxj;
  return count == 2;
}

FactoredWord factor_word(const TauWord& w, bool strict) {
  FactoredWord f;
  int last_tail = 0;
  for (int t : w) {
    if (t < 1 || t > 5) throw std::out_of_range("tau symbol must be 1..5");
    if (t <= 3) {
      f.s1.push_back(t);
      continue;
    }
    if (strict && t == last_tail) throw NotFactorable("tau4/tau5 subword is not alternating");
    last_tail = t;
    if (!f.s2.empty() && f.s2.back() == t)
      f.s2.pop_back();
    else
      f.s2.push_back(t);
  }
  return f;
}

Alcove initial_alcove() { return Alcove{{{{0, -1}, {-1, 0}, {0, 0}}}}; }

Alcove flip(const Alcove& a, int r) {
  if (r < 1 || r > 3) throw std::out_of_range("alcove flip index must be 1..3");
  Alcove b = a;
  const auto& p = a.v[r % 3];
  const auto& q = a.v[(r + 1) % 3];
  auto& x = b.v[r - 1];
  x = {p.first + q.first - x.first, p.second + q.second - x.second};
  return b;
}

Alcove alcove_of(const TauWord& s1) {
  Alcove a = initial_alcove();
  for (int t : s1) a = flip(a, t);
  return a;
}

Prism prism_of(const TauWord& w) {
  const FactoredWord f = factor_word(w);
  const Alcove a = alcove_of(f.s1);
  const int n = static_cast<int>(f.s2.size());
  const bool down = !f.s2.empty() && f.s2.front() == 4;
  const int lo = down ? -n : n;            // the level equal to +-|S2|
  const int other = down ? -n + 1 : n + 1;  // the other level of the pair
  int k1, k2;
  if (n % 2) {
    k1 = lo;
    k2 = other;
  } else {
    k2 = lo;
    k1 = other;
  }
  const auto& [i1, j1] = a.v[0];
  const auto& [i2, j2] = a.v[1];
  const auto& [i3, j3] = a.v[2];
  return {LatticePoint{i1, j1, k1}, LatticePoint{i1, j1, k2}, LatticePoint{i2, j2, k2},
          LatticePoint{i2, j2, k1}, LatticePoint{i3, j3, k1}, LatticePoint{i3, j3, k2}};
}

namespace {

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int symbol_index(const std::string& tok, const std::vector<std::string>& prefixes, int hi) {
  for (const auto& pre : prefixes) {
    if (tok.rfind(pre, 0) != 0 || tok.size() == pre.size()) continue;
    const std::string rest = tok.substr(pre.size());
    if (rest.size() == 1 && rest[0] >= '1' && rest[0] <= '0' + hi) return rest[0] - '0';
  }
  throw ParseError("unrecognised symbol '" + tok + "'");
}

}  // namespace

TauWord parse_tau_word(const std::string& text) {
  TauWord w;
  for (const auto& tok : tokens(text)) w.push_back(symbol_index(tok, {"tau", "t", "T", "\xcf\x84"}, 5));
  return w;
}

std::string to_string(const TauWord& w) {
  std::string s;
  for (int t : w) s += (s.empty() ? "t" : " t") + std::to_string(t);
  return s;
}

std::vector<int> parse_mutation_word(const std::string& text) {
  std::vector<int> w;
  for (const auto& tok : tokens(text)) w.push_back(symbol_index(tok, {"mu", "m", "M", "\xce\xbc"}, 6));
  return w;
}

namespace {

struct FingerprintTable {
  ModPoint x;
  std::unordered_multimap<std::uint64_t, LatticePoint> table;
};

std::mutex table_mutex;
std::map<int, FingerprintTable> tables;

const FingerprintTable& table_for(int window) {
  std::lock_guard<std::mutex> lock(table_mutex);
  auto it = tables.find(window);
  if (it != tables.end()) return it->second;
  FingerprintTable t;
  t.x = fingerprint_point();
  for (int i = -window; i <= window; ++i)
    for (int j = -window; j <= window; ++j)
      for (int k = -window; k <= window; ++k) {
        LatticePoint p{i, j, k};
        t.table.emplace(cluster_variable_mod(p, t.x), p);
      }
  return tables.emplace(window, std::move(t)).first->second;
}

}  // namespace

LatticePoint locate_variable(const LaurentPoly& p, int window) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  const FingerprintTable& t = table_for(window);
  const auto [b, e] = t.table.equal_range(evaluate_mod(p, t.x));
  // fingerprints only shortlist; equality is decided on expanded polynomials
  for (auto it = b; it != e; ++it)
    if (cluster_variable(it->second) == p) return it->second;
  throw NotFound("no lattice point within window " + std::to_string(window) + " matches");
}

}  // namespace dp3
