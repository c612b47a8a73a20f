#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace scst {

// GMP keeps mpq_class results in lowest terms with a positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// p/q in lowest terms. Throws InvalidInput when q == 0.
Rational ratio(const Integer& p, const Integer& q);

/// Exact 2^e for any integer exponent.
Rational pow2(long e);

Rational power(const Rational& base, unsigned long e);

/// Multinomial coefficient (sum k_i)! / prod k_i!.
Integer multinomial(const std::vector<unsigned>& parts);

/// (-1)^e for any integer e.
inline int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Floor-style modulus with a non-negative result for positive m.
inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

std::string to_string(const Integer& z);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws scst::Error(InvalidInput) on bad syntax.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

}  // namespace scst
