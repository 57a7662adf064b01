#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace deckclass {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "-p" and "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
Rational ratio(const BigInt& num, const BigInt& den);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

// Exact rational deg-th root when one exists.
std::optional<Rational> exact_root(const Rational& value, unsigned deg);

int sign(const Rational& r);

// Smallest-ish r > 0 with d | r^deg (prime powers found by trial division,
// any leftover cofactor is taken whole).
BigInt root_multiplier(const BigInt& d, unsigned deg);

}  // namespace deckclass
