#include "dp3/laurent.hpp"

#include <cctype>
#include <sstream>

namespace dp3 {

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r;
  for (int i = 0; i < kVars; ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r;
  for (int i = 0; i < kVars; ++i) r[i] = a[i] - b[i];
  return r;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(ExponentVector{}, mpz_class(c));
}

LaurentPoly LaurentPoly::constant(const mpz_class& c) {
  LaurentPoly p;
  p.add_term(ExponentVector{}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& e, const mpz_class& c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::var(int i, int power) {
  if (i < 1 || i > kVars) throw std::out_of_range("variable index must be 1..6");
  ExponentVector e{};
  e[i - 1] = power;
  return monomial(e);
}

void LaurentPoly::add_term(const ExponentVector& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExponentVector LaurentPoly::min_exponents() const {
  ExponentVector m{};
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < kVars; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

ExponentVector LaurentPoly::max_exponents() const {
  ExponentVector m{};
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < kVars; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

mpz_class LaurentPoly::at_ones() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::all_coefficients_positive() const {
  for (const auto& [e, c] : terms_)
    if (c <= 0) return false;
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
  *this = *this * q;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& by) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + by, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1), base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  if (p.is_zero() || q.is_zero()) return r;
  mpz_class prod;
  for (const auto& [e1, c1] : p.terms())
    for (const auto& [e2, c2] : q.terms()) {
      prod = c1 * c2;
      r.add_term(e1 + e2, prod);
    }
  return r;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
std::size_t num_terms(const LaurentPoly& p) { return p.num_terms(); }

LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (q.is_monomial()) {
    const auto& [eq, cq] = *q.terms().begin();
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), cq.get_mpz_t()))
        throw NonExactDivision("coefficient not divisible by monomial divisor");
      r.add_term(e - eq, mpz_class(c / cq));
    }
    return r;
  }

  // shift to ordinary polynomials, then long division in lex order
  const ExponentVector sp = p.min_exponents(), sq = q.min_exponents();
  LaurentPoly rem = p.shifted(ExponentVector{} - sp);
  const LaurentPoly d = q.shifted(ExponentVector{} - sq);
  const auto& [ld, lc] = *d.terms().rbegin();
  LaurentPoly quot;
  mpz_class t;
  while (!rem.is_zero()) {
    const auto& [lr, cr] = *rem.terms().rbegin();
    ExponentVector e = lr - ld;
    for (int i = 0; i < kVars; ++i)
      if (e[i] < 0) throw NonExactDivision("leading term not divisible");
    if (!mpz_divisible_p(cr.get_mpz_t(), lc.get_mpz_t()))
      throw NonExactDivision("leading coefficient not divisible");
    t = cr / lc;
    quot.add_term(e, t);
    for (const auto& [de, dc] : d.terms()) rem.add_term(de + e, -t * dc);
  }
  return quot.shifted(sp - sq);
}

mpq_class specialize(const LaurentPoly& p, const Point6& values) {
  mpq_class sum = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class term = c;
    for (int i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      if (values[i] == 0) {
        if (e[i] < 0) throw ZeroDenominator("x" + std::to_string(i + 1) + " = 0 with negative exponent");
        term = 0;
        break;
      }
      mpz_class num, den;
      unsigned k = static_cast<unsigned>(e[i] < 0 ? -e[i] : e[i]);
      mpz_pow_ui(num.get_mpz_t(), values[i].get_num_mpz_t(), k);
      mpz_pow_ui(den.get_mpz_t(), values[i].get_den_mpz_t(), k);
      mpq_class f = e[i] > 0 ? mpq_class(num, den) : mpq_class(den, num);
      f.canonicalize();
      term *= f;
    }
    sum += term;
  }
  return sum;
}

std::string monomial_string(const ExponentVector& e) {
  std::string s;
  for (int i = 0; i < kVars; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += 'x' + std::to_string(i + 1);
    if (e[i] != 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    mpz_class a = abs(c);
    std::string mono = monomial_string(e);
    std::string body;
    if (mono.empty()) body = a.get_str();
    else if (a == 1) body = mono;
    else body = a.get_str() + " * " + mono;
    if (first) out += (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  std::string integer() {
    skip();
    std::size_t st = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::string tok = s.substr(st, i - st);
    if (tok.empty() || tok == "-" || tok == "+") throw ParseError("expected integer at offset " + std::to_string(st));
    return tok;
  }
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
  Lexer lx{text};
  LaurentPoly result;
  if (lx.eof()) throw ParseError("empty polynomial");
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++lx.i;
    } else if (!first) {
      throw ParseError("expected + or - at offset " + std::to_string(lx.i));
    }
    first = false;
    mpz_class coef = 1;
    ExponentVector e{};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      coef = mpz_class(lx.integer());
      any = true;
      if (lx.peek() == '*') ++lx.i;
    }
    while (lx.peek() == 'x') {
      ++lx.i;
      if (lx.i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[lx.i])))
        throw ParseError("expected variable index after x");
      int v = text[lx.i++] - '0';
      if (v < 1 || v > kVars) throw ParseError("variable index out of range");
      int pw = 1;
      if (lx.peek() == '^') {
        ++lx.i;
        pw = std::stoi(lx.integer());
      }
      e[v - 1] += pw;
      any = true;
      if (lx.peek() == '*') ++lx.i;
    }
    if (!any) throw ParseError("empty term at offset " + std::to_string(lx.i));
    result.add_term(e, sign * coef);
  }
  return result;
}

}  // namespace dp3
