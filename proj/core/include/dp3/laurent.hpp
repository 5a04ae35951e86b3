#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace dp3 {

constexpr int kVars = 6;

// Exponents of x1..x6. std::array compares lexicographically, which is the
// canonical term order.
using ExponentVector = std::array<int, kVars>;
using Point6 = std::array<mpq_class, kVars>;

struct NonExactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, mpz_class>;

  LaurentPoly() = default;
  explicit LaurentPoly(long c);

  static LaurentPoly constant(const mpz_class& c);
  static LaurentPoly monomial(const ExponentVector& e, const mpz_class& c = 1);
  // x_i^power, i in 1..6
  static LaurentPoly var(int i, int power = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const ExponentVector& e, const mpz_class& c);

  // componentwise minimum / maximum exponent; zero vector for the zero polynomial
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;

  // value at x1 = ... = x6 = 1
  mpz_class at_ones() const;
  bool all_coefficients_positive() const;

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);
  LaurentPoly operator-() const;

  LaurentPoly shifted(const ExponentVector& by) const;
  LaurentPoly pow(unsigned n) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  TermMap terms_;
};

LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q);
LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
// throws NonExactDivision, or std::domain_error for q = 0
LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q);
mpq_class specialize(const LaurentPoly& p, const Point6& values);
std::size_t num_terms(const LaurentPoly& p);

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);

// "c * x1^e1 ... x6^e6" per term, canonical order, unit coefficients and ^1 elided
std::string to_string(const LaurentPoly& p);
LaurentPoly parse_laurent(const std::string& text);
std::string monomial_string(const ExponentVector& e);

}  // namespace dp3
