#include "dp3/formula.hpp"

#include <map>
#include <mutex>
#include <random>

namespace dp3 {

long c_of(int i, int j) { return long(i) * i + long(i) * j + long(j) * j + 1; }
long a_of(int i, int j) { return c_of(i, j) + i + 2L * j; }
long b_of(int i, int j) { return c_of(i, j) + 2L * i + j; }

int residue_index(const LatticePoint& p) {
  static constexpr int table[6] = {6, 4, 2, 5, 3, 1};  // residue 0..5 -> r
  return table[mod_pos(2L * (p.i - p.j) + 3L * p.k, 6)];
}

ExponentProfile exponent_profile(const LatticePoint& p) {
  ExponentProfile e;
  e.alpha_a = static_cast<int>(floor_div(a_of(p.i, p.j), 3));
  e.alpha_b = static_cast<int>(floor_div(b_of(p.i, p.j), 3));
  e.alpha_c = static_cast<int>(floor_div(c_of(p.i, p.j), 3));
  e.alpha_d = static_cast<int>(floor_div(long(p.k - 1) * (p.k - 1), 4));
  e.alpha_e = static_cast<int>(floor_div(long(p.k) * p.k, 4));
  e.r = residue_index(p);
  return e;
}

namespace {

LaurentPoly mono(std::initializer_list<std::pair<int, int>> powers) {
  ExponentVector e{};
  for (auto [v, k] : powers) e[v - 1] += k;
  return LaurentPoly::monomial(e);
}

const std::array<LaurentPoly, 5>& blocks() {
  static const std::array<LaurentPoly, 5> b = {
      (mono({{3, 1}, {5, 1}}) + mono({{4, 1}, {6, 1}})) * mono({{1, -1}, {2, -1}}),
      (mono({{1, 1}, {6, 1}}) + mono({{2, 1}, {5, 1}})) * mono({{3, -1}, {4, -1}}),
      (mono({{1, 1}, {3, 1}}) + mono({{2, 1}, {4, 1}})) * mono({{5, -1}, {6, -1}}),
      (mono({{1, 1}, {3, 1}, {6, 1}}) + mono({{2, 1}, {3, 1}, {5, 1}}) + mono({{2, 1}, {4, 1}, {6, 1}})) *
          mono({{1, -1}, {4, -1}, {5, -1}}),
      (mono({{2, 1}, {4, 1}, {5, 1}}) + mono({{1, 1}, {3, 1}, {5, 1}}) + mono({{1, 1}, {4, 1}, {6, 1}})) *
          mono({{2, -1}, {3, -1}, {6, -1}}),
  };
  return b;
}

std::mutex power_mutex;
std::map<std::pair<int, int>, LaurentPoly> power_cache;

LaurentPoly block_power(int which, int n) {
  if (n == 0) return LaurentPoly(1);
  {
    std::lock_guard<std::mutex> lock(power_mutex);
    auto it = power_cache.find({which, n});
    if (it != power_cache.end()) return it->second;
  }
  LaurentPoly r = blocks()[which].pow(static_cast<unsigned>(n));
  std::lock_guard<std::mutex> lock(power_mutex);
  return power_cache.emplace(std::pair{which, n}, std::move(r)).first->second;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b) {
  u128 t = u128(a) * b;
  u64 lo = static_cast<u64>(t & kFingerprintPrime), hi = static_cast<u64>(t >> 61);
  u64 s = lo + hi;
  if (s >= kFingerprintPrime) s -= kFingerprintPrime;
  return s >= kFingerprintPrime ? s - kFingerprintPrime : s;
}

u64 addmod(u64 a, u64 b) {
  u64 s = a + b;
  return s >= kFingerprintPrime ? s - kFingerprintPrime : s;
}

u64 powmod(u64 b, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a) { return powmod(a, kFingerprintPrime - 2); }

}  // namespace

const LaurentPoly& block_A() { return blocks()[0]; }
const LaurentPoly& block_B() { return blocks()[1]; }
const LaurentPoly& block_C() { return blocks()[2]; }
const LaurentPoly& block_D() { return blocks()[3]; }
const LaurentPoly& block_E() { return blocks()[4]; }

LaurentPoly cluster_variable(const LatticePoint& p) {
  const ExponentProfile e = exponent_profile(p);
  const int pw[5] = {e.alpha_a, e.alpha_b, e.alpha_c, e.alpha_d, e.alpha_e};
  LaurentPoly r = LaurentPoly::var(e.r);
  for (int b = 0; b < 5; ++b)
    if (pw[b]) r = r * block_power(b, pw[b]);
  return r;
}

std::string factored_form(const LatticePoint& p) {
  const ExponentProfile e = exponent_profile(p);
  std::string s = "x" + std::to_string(e.r);
  const char names[5] = {'A', 'B', 'C', 'D', 'E'};
  const int pw[5] = {e.alpha_a, e.alpha_b, e.alpha_c, e.alpha_d, e.alpha_e};
  for (int b = 0; b < 5; ++b) {
    if (pw[b] == 0) continue;
    s += std::string(" ") + names[b];
    if (pw[b] != 1) s += "^" + std::to_string(pw[b]);
  }
  return s;
}

mpz_class predicted_count(const LatticePoint& p) {
  const ExponentProfile e = exponent_profile(p);
  mpz_class two, three;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(e.power_of_two()));
  mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned long>(e.power_of_three()));
  return two * three;
}

std::vector<FloorIdentityFailure> check_floor_identities(int lo, int hi) {
  std::vector<FloorIdentityFailure> out;
  auto fa = [](int i, int j) { return floor_div(a_of(i, j), 3); };
  auto fb = [](int i, int j) { return floor_div(b_of(i, j), 3); };
  auto fc = [](int i, int j) { return floor_div(c_of(i, j), 3); };
  using F = long (*)(int, int);
  const F f[3] = {+fa, +fb, +fc};
  auto fail = [&](const char* name, int i, int j, int k) { out.push_back({name, i, j, k}); };

  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j) {
      const long res = mod_pos(long(i) - j, 3);
      auto chi = [&](long want) { return long(res == want); };
      // column identities for a/b/c, indicator residues 1/2/0
      const long want3[3] = {1, 2, 0};
      const char* names3[3] = {"a-column", "b-column", "c-column"};
      for (int t = 0; t < 3; ++t)
        if (f[t](i, j) + f[t](i - 1, j + 2) != f[t](i - 1, j + 1) + f[t](i, j + 1) + chi(want3[t]))
          fail(names3[t], i, j, 0);
      // residue rr pairs: 1 -> (b,c), 2 -> (c,a), 0 -> (a,b)
      const int pair6[3] = {0, 1, 2};
      const int pair7[3] = {1, 2, 0};
      for (long rr : {0L, 1L, 2L}) {
        const F g = f[pair6[rr]], h = f[pair7[rr]];
        const std::string tag = "residue" + std::to_string(rr);
        if (g(i - 1, j + 1) + g(i + 1, j) != g(i, j) + g(i, j + 1) + chi(rr)) fail((tag + "-row").c_str(), i, j, 0);
        if (h(i, j + 1) + h(i - 1, j) != h(i, j) + h(i - 1, j + 1) + chi(rr)) fail((tag + "-diagonal").c_str(), i, j, 0);
      }
    }
  for (int k = lo; k <= hi; ++k) {
    auto q = [](long x) { return floor_div(x * x, 4); };
    const long even = (k % 2 == 0), odd = 1 - even;
    if (q(k) + q(k - 2) != 2 * q(k - 1) + even) fail("k-even", 0, 0, k);
    if (q(k + 1) + q(k - 1) != 2 * q(k) + odd) fail("k-odd", 0, 0, k);
  }
  return out;
}

ModPoint fingerprint_point() {
  std::mt19937_64 rng(0x5eed0d3ULL);
  ModPoint x;
  for (auto& v : x) v = 2 + rng() % (kFingerprintPrime - 3);
  return x;
}

std::uint64_t evaluate_mod(const LaurentPoly& p, const ModPoint& x) {
  ModPoint inv;
  for (int i = 0; i < kVars; ++i) inv[i] = invmod(x[i]);
  mpz_class m = static_cast<unsigned long>(kFingerprintPrime), c;
  u64 sum = 0;
  for (const auto& [e, coef] : p.terms()) {
    c = coef % m;
    if (c < 0) c += m;
    u64 t = c.get_ui();
    for (int i = 0; i < kVars; ++i)
      if (e[i]) t = mulmod(t, powmod(e[i] > 0 ? x[i] : inv[i], static_cast<u64>(e[i] > 0 ? e[i] : -e[i])));
    sum = addmod(sum, t);
  }
  return sum;
}

std::uint64_t cluster_variable_mod(const LatticePoint& p, const ModPoint& x) {
  static thread_local ModPoint cached_point{};
  static thread_local std::array<u64, 5> vals{};
  if (cached_point != x) {
    for (int b = 0; b < 5; ++b) vals[b] = evaluate_mod(blocks()[b], x);
    cached_point = x;
  }
  const ExponentProfile e = exponent_profile(p);
  u64 r = x[e.r - 1];
  const int pw[5] = {e.alpha_a, e.alpha_b, e.alpha_c, e.alpha_d, e.alpha_e};
  for (int b = 0; b < 5; ++b) r = mulmod(r, powmod(vals[b], static_cast<u64>(pw[b])));
  return r;
}

}  // namespace dp3
