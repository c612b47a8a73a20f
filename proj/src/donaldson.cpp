#include "scst/donaldson.hpp"

#include "scst/errors.hpp"
#include "scst/linalg.hpp"
#include "scst/swseries.hpp"

namespace scst {

DonaldsonSeries witten_series(const FourManifold& mfd, const CohClass& w, long delta, long m) {
  if (!is_simple_type(mfd)) throw Error(ErrorCode::NotSimpleType, mfd.name + " is not of simple type");
  if (m < 0 || delta < 2 * m) {
    throw Error(ErrorCode::InvalidInput, "need 0 <= 2m <= delta, got delta = " + std::to_string(delta) +
                                             ", m = " + std::to_string(m));
  }
  if (w.size() != mfd.lattice.rank() || !is_integral(w)) {
    throw Error(ErrorCode::InvalidInput, "w must be an integral class of length " + std::to_string(mfd.lattice.rank()));
  }
  const auto cn = char_numbers(mfd);
  DonaldsonSeries out;
  out.manifold = mfd.name;
  out.delta = delta;
  out.m = m;
  out.prefactor = pow2(2 - cn.c);
  out.quadratic = mfd.lattice.rational_gram();
  const Integer gate = mfd.lattice.square(w).get_num() + delta + 3 * cn.chi_h;
  out.gate_open = gate % 4 == 0;
  if (!out.gate_open) return out;

  const long degree = delta - 2 * m;
  const Integer top = factorial(static_cast<unsigned long>(degree));
  for (long k = 0; 2 * k <= degree; ++k) {
    const long i = degree - 2 * k;
    MultiPoly sw = sw_polynomial(mfd, w, static_cast<int>(i), false).poly;
    if (sw.is_zero()) continue;
    Rational c = out.prefactor * pow2(m - k) *
                 ratio(top, factorial(static_cast<unsigned long>(k)) * factorial(static_cast<unsigned long>(i)));
    out.terms.push_back({i, k, c, std::move(sw)});
  }
  return out;
}

MultiPoly DonaldsonSeries::expand() const {
  const MultiPoly q = MultiPoly::quadratic(quadratic);
  MultiPoly out(quadratic.size());
  for (const auto& t : terms) out += t.sw * q.pow(static_cast<unsigned>(t.k)) * t.coefficient;
  return out;
}

Rational DonaldsonSeries::evaluate(const RationalVector& h) const {
  const Rational qh = linalg::bilinear(quadratic, h, h);
  Rational out = 0;
  for (const auto& t : terms) out += t.coefficient * t.sw.evaluate(h) * power(qh, static_cast<unsigned long>(t.k));
  return out;
}

std::string DonaldsonSeries::render() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    const bool constant_sw = t.sw.degree() == 0;
    Rational c = t.coefficient;
    if (constant_sw) c *= t.sw.terms().begin()->second;
    if (c == 0) continue;
    std::string q;
    if (t.k == 1) q = "Q";
    if (t.k > 1) q = "Q^" + std::to_string(t.k);
    std::string factors = constant_sw ? "" : "SW[" + std::to_string(t.i) + "]";
    if (!q.empty()) factors += (factors.empty() ? "" : "*") + q;

    Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (factors.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += to_string(magnitude) + "*" + factors;
    }
  }
  return out.empty() ? "0" : out;
}

MultiPoly witten_donaldson(const FourManifold& mfd, const CohClass& w, long delta, long m) {
  auto series = witten_series(mfd, w, delta, m);
  return series.expand();
}

}  // namespace scst
