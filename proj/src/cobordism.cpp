#include "scst/cobordism.hpp"

#include "scst/errors.hpp"

namespace scst {

SpinuExistence spinu_exists(const FourManifold& m, long p1, const CohClass& lambda, const Mod2Class& w2) {
  SpinuExistence out;
  const std::size_t rank = m.lattice.rank();
  if (w2.size() != rank) {
    out.failures.push_back("w2 has length " + std::to_string(w2.size()) + ", expected " + std::to_string(rank));
    return out;
  }
  if (lambda.size() != rank || !is_integral(lambda)) {
    out.failures.push_back("Lambda must be an integral class of length " + std::to_string(rank));
    return out;
  }
  // H^2 has no torsion here, so the 0/1 vector is always an integral lift.
  CohClass lift(rank);
  for (std::size_t i = 0; i < rank; ++i) lift[i] = w2[i] ? 1 : 0;

  Mod2Class expected = second_stiefel_whitney(m.lattice);
  for (std::size_t i = 0; i < rank; ++i) expected[i] ^= (w2[i] & 1);
  if (reduce_mod2(lambda) != expected) out.failures.push_back("Lambda is not congruent to w2 + w2(X) mod 2");

  Integer diff = Integer(p1) - m.lattice.square(lift).get_num();
  if (diff % 4 != 0) out.failures.push_back("p1 is not congruent to w^2 mod 4");

  out.exists = out.failures.empty();
  if (out.exists) out.lift = std::move(lift);
  return out;
}

SpinuStructure make_ft_n(const FourManifold& m, long n) {
  const auto cn = char_numbers(m);
  SpinuStructure t;
  t.p1 = 4 * n + cn.c1sq - 8 * cn.chi_h;
  t.c1 = zero_class(m.lattice.rank());
  t.w2 = second_stiefel_whitney(m.lattice);
  if (indices(m, t).n_a != n) {
    throw Error(ErrorCode::NonIntegralIndex, "constructed structure has n_a != " + std::to_string(n));
  }
  return t;
}

IndexData indices(const FourManifold& m, const SpinuStructure& t) {
  const auto cn = char_numbers(m);
  Rational lambda_sq = m.lattice.square(t.c1);
  if (!is_integer(lambda_sq)) throw Error(ErrorCode::NonIntegralIndex, "Lambda^2 is not an integer");
  Integer numerator = Integer(t.p1) + lambda_sq.get_num() - cn.c1sq + 8 * cn.chi_h;
  if (numerator % 4 != 0) {
    throw Error(ErrorCode::NonIntegralIndex, "n_a = " + to_string(numerator) + "/4 is not an integer");
  }
  IndexData out;
  out.d_a = -t.p1 - 3 * cn.chi_h;
  out.n_a = Integer(numerator / 4).get_si();
  return out;
}

long level(const FourManifold& m, const SpinuStructure& t, const CohClass& k) {
  Rational sq = m.lattice.square(k - t.c1) - t.p1;
  if (!is_integer(sq) || sq.get_num() % 4 != 0) {
    throw Error(ErrorCode::NonIntegralLevel, "((K - Lambda)^2 - p1)/4 = " + to_string(sq) + "/4 is not an integer");
  }
  return Integer(sq.get_num() / 4).get_si();
}

bool admissible_mn(long chi_h, long c1sq, long n, long m, bool require_odd_n) {
  const long c = chi_h - c1sq;
  if (m < 0) return false;
  if (!(1 < n && n <= 2 * chi_h)) return false;
  if (c - n - 2 * m - 1 < 0) return false;
  return !require_odd_n || n % 2 != 0;
}

bool admissible_mn(const FourManifold& mfd, long n, long m, bool require_odd_n) {
  const auto cn = char_numbers(mfd);
  return admissible_mn(cn.chi_h, cn.c1sq, n, m, require_odd_n);
}

RelationParams relation_params(long chi_h, long c1sq, long n, long m) {
  RelationParams p;
  p.n = n;
  p.m = m;
  p.v = m + 2;
  p.chi_h = chi_h;
  p.c = chi_h - c1sq;
  p.A = p.c - n - 2 * m - 1;
  p.delta = p.c + 4 * chi_h - 3 * n - 1;
  p.ell = 2 * chi_h - n;
  return p;
}

namespace {

// (delta - 2m)! / (l! A!)
Rational factorial_ratio(const RelationParams& p) {
  return ratio(factorial(static_cast<unsigned long>(p.delta - 2 * p.m)),
               factorial(static_cast<unsigned long>(p.ell)) * factorial(static_cast<unsigned long>(p.A)));
}

}  // namespace

Rational leading_coefficient(long chi_h, long c1sq, long m, long n) {
  auto p = relation_params(chi_h, c1sq, n, m);
  if (m < 0) throw Error(ErrorCode::NegativeIndex, "m = " + std::to_string(m) + " is negative");
  if (p.A < 0) throw Error(ErrorCode::NegativeIndex, "A = " + std::to_string(p.A) + " is negative");
  if (p.ell < 0) throw Error(ErrorCode::NegativeIndex, "l = " + std::to_string(p.ell) + " is negative");
  return neg_one_pow(m + p.ell) * pow2(p.ell - p.delta) * factorial_ratio(p);
}

LeadingTermWitness leading_identity_check(long chi_h, long c1sq, long m, long n, long r_xi) {
  if (!admissible_mn(chi_h, c1sq, n, m)) {
    throw Error(ErrorCode::Inadmissible, "(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) +
                                             ") is not admissible");
  }
  LeadingTermWitness w;
  w.params = relation_params(chi_h, c1sq, n, m);
  const auto& p = w.params;
  w.r_xi = r_xi;
  w.r_n = r_xi + p.delta + 1 - 3 * p.ell;
  if (r_xi < 0 || w.r_n < 0) {
    throw Error(ErrorCode::Inadmissible, "r_xi = " + std::to_string(r_xi) + " gives negative r_N");
  }
  w.closed_form = leading_coefficient(chi_h, c1sq, m, n);
  w.solved_form = factorial_ratio(p) * neg_one_pow(p.A + p.m + w.r_xi + w.r_n + 1) * pow2(-p.A - 2 * p.m - p.ell);
  w.exponents_agree = -p.A - 2 * p.m - p.ell == p.ell - p.delta;
  w.counting_holds = p.A + 2 * p.m + w.r_xi + p.ell == w.r_n + 2 * p.ell - 1;
  w.values_agree = w.closed_form == w.solved_form;
  return w;
}

Integer matching_count(unsigned long ell) {
  Integer den = factorial(ell);
  den <<= ell;
  return factorial(2 * ell) / den;
}

Integer odd_double_factorial(unsigned long ell) {
  Integer out = 1;
  for (unsigned long k = 1; k + 1 <= 2 * ell; k += 2) out *= k;
  return out;
}

std::string to_string(CoefficientStatus status) {
  switch (status) {
    case CoefficientStatus::KnownZero:
      return "known_zero";
    case CoefficientStatus::KnownValue:
      return "known_value";
    case CoefficientStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

CoefficientValue coefficient_oracle(const CoefficientQuery& q) {
  CoefficientValue out;
  if (q.k > q.ell) {
    out.status = CoefficientStatus::KnownZero;
    out.rule = "k_exceeds_level";
    return out;
  }
  if (q.j != 0 || q.k_dot_lambda != 0 || q.lambda_sq != 0) {
    out.rule = "outside_lambda_zero";
    return out;
  }
  const long n = 2 * q.chi_h - q.ell;
  const auto p = relation_params(q.chi_h, q.c1sq, n, q.m);
  if (q.i < 0 || q.k < 0 || q.i + 2 * q.k != p.delta - 2 * q.m) {
    out.rule = "off_degree";
    return out;
  }
  const bool admissible = admissible_mn(q.chi_h, q.c1sq, n, q.m);
  if (admissible && q.i == p.A && q.k == p.ell) {
    out.status = CoefficientStatus::KnownValue;
    out.value = leading_coefficient(q.chi_h, q.c1sq, q.m, n);
    out.rule = "leading_term";
    return out;
  }
  if (admissible && n % 2 != 0 && p.c >= 3 && q.i >= p.c - 3) {
    out.status = CoefficientStatus::KnownZero;
    out.rule = "determining_regime";
    return out;
  }
  out.rule = "undetermined";
  return out;
}

}  // namespace scst
