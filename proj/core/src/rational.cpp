#include "deckclass/rational.hpp"

#include <stdexcept>

namespace deckclass {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}
std::string to_string(const BigInt& z) { return z.get_str(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::optional<Rational> exact_root(const Rational& value, unsigned deg) {
  if (deg == 0) throw std::invalid_argument("root degree must be positive");
  if (value < 0 && deg % 2 == 0) return std::nullopt;
  BigInt num = abs(value.get_num()), den = value.get_den();
  BigInt rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), deg)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), deg)) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  if (value < 0) r = -r;
  return r;
}

int sign(const Rational& r) { return sgn(r); }

BigInt root_multiplier(const BigInt& d, unsigned deg) {
  if (d <= 0) throw std::invalid_argument("root_multiplier expects a positive integer");
  BigInt rest = d, out = 1;
  for (unsigned long p = 2; p < 100000 && rest > 1; ++p) {
    if (p * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    if (e) out *= pow(BigInt(p), (e + deg - 1) / deg);
  }
  if (rest > 1) {
    BigInt r;
    // rest is prime here unless it has a factor beyond the trial bound.
    if (mpz_root(r.get_mpz_t(), rest.get_mpz_t(), deg))
      out *= r;
    else
      out *= rest;
  }
  return out;
}

}  // namespace deckclass
