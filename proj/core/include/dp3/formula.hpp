#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dp3/lattice.hpp"
#include "dp3/laurent.hpp"

namespace dp3 {

struct ExponentProfile {
  int alpha_a = 0, alpha_b = 0, alpha_c = 0, alpha_d = 0, alpha_e = 0;
  int r = 1;

  int power_of_two() const { return alpha_a + alpha_b + alpha_c; }
  int power_of_three() const { return alpha_d + alpha_e; }
  friend bool operator==(const ExponentProfile&, const ExponentProfile&) = default;
};

// floor division that rounds toward minus infinity
constexpr long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
constexpr long mod_pos(long a, long m) { return ((a % m) + m) % m; }

long c_of(int i, int j);
long a_of(int i, int j);
long b_of(int i, int j);
// r from 2(i-j)+3k mod 6 via {5,2,4,1,3,0} -> {1,...,6}
int residue_index(const LatticePoint& p);

ExponentProfile exponent_profile(const LatticePoint& p);

const LaurentPoly& block_A();
const LaurentPoly& block_B();
const LaurentPoly& block_C();
const LaurentPoly& block_D();
const LaurentPoly& block_E();

LaurentPoly cluster_variable(const LatticePoint& p);
std::string factored_form(const LatticePoint& p);
// 2^(aA+aB+aC) * 3^(aD+aE), the value of cluster_variable at x = 1
mpz_class predicted_count(const LatticePoint& p);

struct FloorIdentityFailure {
  std::string identity;
  int i = 0, j = 0, k = 0;
};
// floor-function identities behind the three-term recurrences, over [lo,hi]^3
std::vector<FloorIdentityFailure> check_floor_identities(int lo, int hi);

// evaluation modulo a fixed 61-bit prime, used to fingerprint polynomials
using ModPoint = std::array<std::uint64_t, kVars>;
constexpr std::uint64_t kFingerprintPrime = (std::uint64_t{1} << 61) - 1;
std::uint64_t cluster_variable_mod(const LatticePoint& p, const ModPoint& x);
std::uint64_t evaluate_mod(const LaurentPoly& p, const ModPoint& x);
ModPoint fingerprint_point();

}  // namespace dp3
