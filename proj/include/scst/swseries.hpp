#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scst/manifold.hpp"
#include "scst/multipoly.hpp"

namespace scst {

/// (-1)^{(w^2 + w.K)/2}. Throws OddExponent when w^2 + w.K is odd.
int sw_sign(const FourManifold& m, const CohClass& w, const CohClass& k);

/// SW^{w,i} as a polynomial in the Poincare-dual coordinates of h.
struct SWPolynomial {
  CohClass w;
  int i = 0;
  MultiPoly poly;
};

/// Sum over the table of sign * SW'(K) * <K,h>^i. Throws NotCharacteristic
/// unless w is characteristic; pass require_characteristic = false to only
/// require that every sign exponent is an integer.
SWPolynomial sw_polynomial(const FourManifold& m, const CohClass& w, int i,
                           bool require_characteristic = true);

/// <K, h> as a linear polynomial in the coordinates of h.
MultiPoly pairing_form(const IntersectionLattice& lattice, const CohClass& k);
/// Q(h) as a quadratic polynomial.
MultiPoly intersection_form(const IntersectionLattice& lattice);

enum class ScstReason { CLeThree, AllVanish, Counterexample };
std::string to_string(ScstReason reason);

struct ScstVerdict {
  bool holds = false;
  ScstReason reason = ScstReason::CLeThree;
  std::optional<int> degree;       // counterexample only
  std::optional<MultiPoly> witness;  // the nonzero SW^{w,i}
};

/// Throws NotStandard, NotSimpleType, NotCharacteristic.
ScstVerdict scst_check(const FourManifold& m, const CohClass& w);

/// Degrees i <= bound with c + i odd, after verifying each SW^{w,i} is zero.
/// bound < 0 picks c + 1. Throws ParityViolation with the failing degree.
std::vector<int> parity_vanishing(const FourManifold& m, const CohClass& w, int bound = -1);

struct BoundResult {
  std::size_t count = 0;
  Rational bound;
  bool satisfied = false;
  std::optional<std::string> warning;
};

/// |B/{+-1}| against c/2. Throws Inapplicable when B is empty or c < 3.
BoundResult basic_class_lower_bound(const FourManifold& m);

struct IdentityCheck {
  bool holds = false;
  MultiPoly difference;  // left minus right; zero when the identity holds
};

/// Compares SW^{w - e*, i} on blow_up(m) with the binomial expansion in the
/// SW^{w,j} of m and <e*, h>.
IdentityCheck blowup_series_identity(const FourManifold& m, const CohClass& w, int i);

/// The part of SW^{w - e*, i} on blow_up(m) linear in the exceptional
/// coordinate, as a polynomial in the coordinates of m.
MultiPoly exceptional_linear_part(const FourManifold& blown_up, const CohClass& w_tilde, int i);

struct TransferResult {
  ScstVerdict direct;       // scst_check(m, w)
  ScstVerdict blown_up;     // scst_check(blow_up(m), w - e*)
  ScstVerdict transferred;  // verdict for m read off the blown-up series
  bool agrees = false;
};

TransferResult scst_blowup_transfer(const FourManifold& m, const CohClass& w);

}  // namespace scst
