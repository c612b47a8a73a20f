#include "scst/rational.hpp"

#include "scst/errors.hpp"

namespace scst {

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational ratio(const Integer& p, const Integer& q) {
  if (q == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational out(1, p);
  out.canonicalize();
  return out;
}

Rational power(const Rational& base, unsigned long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer multinomial(const std::vector<unsigned>& parts) {
  unsigned long total = 0;
  for (unsigned p : parts) total += p;
  Integer out = factorial(total);
  for (unsigned p : parts) out /= factorial(p);
  return out;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer_literal(num)) {
    throw Error(ErrorCode::InvalidInput, "not a rational literal: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(integer_from(num));
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer_literal(den) || integer_from(den) == 0) {
    throw Error(ErrorCode::InvalidInput, "not a rational literal: '" + std::string(text) + "'");
  }
  Rational out(integer_from(num), integer_from(den));
  out.canonicalize();
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace scst
