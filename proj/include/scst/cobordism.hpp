#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scst/manifold.hpp"

namespace scst {

/// Characteristic classes (p1, c1 = Lambda, w2) of a spin^u structure.
struct SpinuStructure {
  long p1 = 0;
  CohClass c1;
  Mod2Class w2;
};

struct SpinuExistence {
  bool exists = false;
  std::optional<CohClass> lift;  // integral lift of w2
  std::vector<std::string> failures;
};

/// The three existence conditions: w2 lifts, Lambda = w2 + w2(X) mod 2, and
/// p1 = w^2 mod 4 for the lift w.
SpinuExistence spinu_exists(const FourManifold& m, long p1, const CohClass& lambda, const Mod2Class& w2);

/// c1 = 0, p1 = 4n + c1^2 - 8 chi_h, w2 = w2(X). Verifies n_a = n.
SpinuStructure make_ft_n(const FourManifold& m, long n);

struct IndexData {
  long d_a = 0;
  long n_a = 0;
};

/// d_a = -p1 - 3 chi_h and n_a = (p1 + Lambda^2 - c1^2 + 8 chi_h)/4.
/// Throws NonIntegralIndex.
IndexData indices(const FourManifold& m, const SpinuStructure& t);

/// ((K - Lambda)^2 - p1)/4. Throws NonIntegralLevel.
long level(const FourManifold& m, const SpinuStructure& t, const CohClass& k);

/// 1 < n <= 2 chi_h and c - n - 2m - 1 >= 0 (m >= 0); require_odd_n adds n odd.
bool admissible_mn(long chi_h, long c1sq, long n, long m, bool require_odd_n = false);
bool admissible_mn(const FourManifold& mfd, long n, long m, bool require_odd_n = false);

/// The parameters of one vanishing relation with Lambda = 0.
struct RelationParams {
  long n = 0;
  long m = 0;
  long v = 0;  // m + 2, the induction index when n = 3
  long c = 0;
  long chi_h = 0;
  long A = 0;
  long delta = 0;
  long ell = 0;
};
RelationParams relation_params(long chi_h, long c1sq, long n, long m);

/// (-1)^{m+l} 2^{l-delta} (delta-2m)! / (l! A!). Throws NegativeIndex if A < 0 or l < 0.
Rational leading_coefficient(long chi_h, long c1sq, long m, long n);

struct LeadingTermWitness {
  long r_xi = 0;
  long r_n = 0;  // r_xi + delta + 1 - 3 l
  RelationParams params;
  Rational closed_form;    // the leading coefficient
  Rational solved_form;    // (delta-2m)!/(l! A!) (-1)^{A+m+r_xi+r_n+1} 2^{-A-2m-l}
  bool exponents_agree = false;  // -A - 2m - l == l - delta
  bool counting_holds = false;   // A + 2m + r_xi + l == r_n + 2l - 1
  bool values_agree = false;
  bool holds() const { return exponents_agree && counting_holds && values_agree; }
};

/// Cross-checks two closed forms of the leading coefficient. Throws
/// Inadmissible when the tuple is not admissible or r_n < 0.
LeadingTermWitness leading_identity_check(long chi_h, long c1sq, long m, long n, long r_xi);

/// (2l)! / (l! 2^l).
Integer matching_count(unsigned long ell);
/// (2l - 1)!!, with (-1)!! = 1.
Integer odd_double_factorial(unsigned long ell);

struct CoefficientQuery {
  long i = 0, j = 0, k = 0;
  long chi_h = 0, c1sq = 0;
  long k_dot_lambda = 0, lambda_sq = 0;
  long m = 0, ell = 0;
};

enum class CoefficientStatus { KnownZero, KnownValue, Unknown };
std::string to_string(CoefficientStatus status);

struct CoefficientValue {
  CoefficientStatus status = CoefficientStatus::Unknown;
  Rational value;    // meaningful for KnownValue
  std::string rule;  // short tag naming why the status was assigned
};

/// Known values of a_{i,j,k}. With Lambda = 0 the level fixes n = 2 chi_h - l
/// and c = chi_h - c1^2, so no further context is needed. Queries outside
/// j = 0, Lambda = 0, or off the degree line i + 2k = delta - 2m, are Unknown.
CoefficientValue coefficient_oracle(const CoefficientQuery& q);

}  // namespace scst
