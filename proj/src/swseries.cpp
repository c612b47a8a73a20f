#include "scst/swseries.hpp"

#include "scst/errors.hpp"

namespace scst {

int sw_sign(const FourManifold& m, const CohClass& w, const CohClass& k) {
  Rational exponent = m.lattice.square(w) + m.lattice.pair(w, k);
  if (!is_integer(exponent) || exponent.get_num() % 2 != 0) {
    throw Error(ErrorCode::OddExponent, "w^2 + w.K = " + to_string(exponent) + " is not even for K = " + to_string(k));
  }
  Integer half = exponent.get_num() / 2;
  return half % 2 == 0 ? 1 : -1;
}

MultiPoly pairing_form(const IntersectionLattice& lattice, const CohClass& k) {
  auto coefficients = lattice.covector(k);
  return MultiPoly::linear(coefficients);
}

MultiPoly intersection_form(const IntersectionLattice& lattice) {
  return MultiPoly::quadratic(lattice.rational_gram());
}

SWPolynomial sw_polynomial(const FourManifold& m, const CohClass& w, int i, bool require_characteristic) {
  if (i < 0) throw Error(ErrorCode::InvalidInput, "SW polynomial degree must be non-negative");
  if (w.size() != m.lattice.rank()) throw Error(ErrorCode::DimensionMismatch, "w has the wrong length");
  if (require_characteristic && !is_characteristic(m.lattice, w)) {
    throw Error(ErrorCode::NotCharacteristic, "w = " + to_string(w) + " is not characteristic");
  }
  SWPolynomial out{w, i, MultiPoly(m.lattice.rank())};
  for (const auto& [k, value] : m.sw) {
    Rational scale = Rational(value) * sw_sign(m, w, k);
    out.poly += pairing_form(m.lattice, k).pow(static_cast<unsigned>(i)) * scale;
  }
  return out;
}

std::string to_string(ScstReason reason) {
  switch (reason) {
    case ScstReason::CLeThree:
      return "c_le_3";
    case ScstReason::AllVanish:
      return "all_vanish";
    case ScstReason::Counterexample:
      return "counterexample";
  }
  return "unknown";
}

namespace {

void require_standard_simple_type(const FourManifold& m) {
  auto standard = is_standard(m);
  if (!standard.standard) {
    std::string why;
    for (const auto& r : standard.reasons) why += (why.empty() ? "" : "; ") + r;
    throw Error(ErrorCode::NotStandard, m.name + " is not standard: " + why);
  }
  if (!is_simple_type(m)) throw Error(ErrorCode::NotSimpleType, m.name + " is not of simple type");
}

}  // namespace

ScstVerdict scst_check(const FourManifold& m, const CohClass& w) {
  require_standard_simple_type(m);
  if (!is_characteristic(m.lattice, w)) {
    throw Error(ErrorCode::NotCharacteristic, "w = " + to_string(w) + " is not characteristic");
  }
  ScstVerdict out;
  const auto c = char_numbers(m).c;
  if (c <= 3) {
    out.holds = true;
    out.reason = ScstReason::CLeThree;
    return out;
  }
  for (int i = 0; i <= c - 4; ++i) {
    auto p = sw_polynomial(m, w, i);
    if (!p.poly.is_zero()) {
      out.holds = false;
      out.reason = ScstReason::Counterexample;
      out.degree = i;
      out.witness = std::move(p.poly);
      return out;
    }
  }
  out.holds = true;
  out.reason = ScstReason::AllVanish;
  return out;
}

std::vector<int> parity_vanishing(const FourManifold& m, const CohClass& w, int bound) {
  const auto c = char_numbers(m).c;
  if (bound < 0) bound = static_cast<int>(std::max<long>(c + 1, 0));
  std::vector<int> checked;
  for (int i = 0; i <= bound; ++i) {
    if ((c + i) % 2 == 0) continue;
    if (!sw_polynomial(m, w, i).poly.is_zero()) {
      throw ParityViolation(i, "SW^{w," + std::to_string(i) + "} is nonzero although c + i is odd");
    }
    checked.push_back(i);
  }
  return checked;
}

BoundResult basic_class_lower_bound(const FourManifold& m) {
  const auto c = char_numbers(m).c;
  if (m.sw.empty()) throw Error(ErrorCode::Inapplicable, "the basic class table is empty");
  if (c < 3) throw Error(ErrorCode::Inapplicable, "c = " + std::to_string(c) + " is less than 3");
  BoundResult out;
  out.count = count_up_to_sign(m.sw);
  out.bound = ratio(c, 2);
  out.satisfied = Rational(static_cast<long>(out.count)) >= out.bound;
  if (!out.satisfied) {
    out.warning = "literal bound |B/{+-1}| >= c/2 fails (" + std::to_string(out.count) + " < " +
                  to_string(out.bound) + "); the stated inequality does not hold for this model";
  }
  return out;
}

IdentityCheck blowup_series_identity(const FourManifold& m, const CohClass& w, int i) {
  FourManifold big = blow_up(m);
  const std::size_t rank = big.lattice.rank();
  const CohClass e = exceptional_class(big);
  const CohClass w_tilde = extend_class(w, rank) - e;

  MultiPoly left = sw_polynomial(big, w_tilde, i).poly;
  MultiPoly right(rank);
  const MultiPoly pair_e = pairing_form(big.lattice, e);
  for (int u = 1; u <= i; u += 2) {
    // 1 - (-1)^u is 2 for odd u and 0 otherwise.
    MultiPoly lower = sw_polynomial(m, w, i - u).poly.extended(rank);
    if (lower.is_zero()) continue;
    right += lower * pair_e.pow(static_cast<unsigned>(u)) * Rational(Integer(2 * binomial(i, u)));
  }
  IdentityCheck out;
  out.difference = left - right;
  out.holds = out.difference.is_zero();
  return out;
}

MultiPoly exceptional_linear_part(const FourManifold& blown_up, const CohClass& w_tilde, int i) {
  const std::size_t rank = blown_up.lattice.rank();
  return sw_polynomial(blown_up, w_tilde, i).poly.slice(rank - 1, 1).restricted(rank - 1);
}

TransferResult scst_blowup_transfer(const FourManifold& m, const CohClass& w) {
  TransferResult out;
  out.direct = scst_check(m, w);
  FourManifold big = blow_up(m);
  const CohClass w_tilde = extend_class(w, big.lattice.rank()) - exceptional_class(big);
  out.blown_up = scst_check(big, w_tilde);

  const auto c = char_numbers(m).c;
  ScstVerdict& t = out.transferred;
  if (c <= 3) {
    t.holds = true;
    t.reason = ScstReason::CLeThree;
  } else {
    t.holds = true;
    t.reason = ScstReason::AllVanish;
    for (int i = 0; i <= c - 4; ++i) {
      // The t-linear coefficient of SW^{w~, i+1} along s h0 + t e is -2(i+1) SW^{w,i}(h0).
      MultiPoly p = exceptional_linear_part(big, w_tilde, i + 1) * ratio(-1, 2 * (i + 1));
      if (!p.is_zero()) {
        t.holds = false;
        t.reason = ScstReason::Counterexample;
        t.degree = i;
        t.witness = std::move(p);
        break;
      }
    }
  }
  out.agrees = out.direct.holds == out.blown_up.holds && out.direct.holds == t.holds &&
               out.direct.degree == t.degree && out.direct.witness == t.witness;
  return out;
}

}  // namespace scst
