#pragma once

#include <string>
#include <vector>

#include "scst/manifold.hpp"
#include "scst/multipoly.hpp"

namespace scst {

/// coefficient * SW^{w,i}(h) * Q(h)^k; the coefficient already includes 2^{2-c}.
struct DonaldsonTerm {
  long i = 0;
  long k = 0;
  Rational coefficient;
  MultiPoly sw;
};

struct DonaldsonSeries {
  std::string manifold;
  long delta = 0;
  long m = 0;
  bool gate_open = false;  // delta = -w^2 - 3 chi_h mod 4
  Rational prefactor;      // 2^{2-c}
  RationalMatrix quadratic;
  std::vector<DonaldsonTerm> terms;  // only terms with nonzero SW

  MultiPoly expand() const;
  Rational evaluate(const RationalVector& h) const;
  /// Compact form such as "15*Q^3"; a constant SW polynomial is folded into
  /// the coefficient, otherwise the term reads "c*SW[i]*Q^k".
  std::string render() const;
};

/// The simple-type formula for the Donaldson invariant on h^{delta-2m} x^m.
/// w may be any integral class with w^2 + w.K even for every basic class.
/// Throws NotSimpleType, InvalidInput when delta < 2m or m < 0.
DonaldsonSeries witten_series(const FourManifold& mfd, const CohClass& w, long delta, long m);

MultiPoly witten_donaldson(const FourManifold& mfd, const CohClass& w, long delta, long m);

}  // namespace scst
