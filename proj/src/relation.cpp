#include "scst/relation.hpp"

#include <map>
#include <stdexcept>

#include "scst/errors.hpp"
#include "scst/swseries.hpp"

namespace scst {

namespace {

void require_standard_simple_type(const FourManifold& m) {
  if (!is_standard(m).standard) throw Error(ErrorCode::NotStandard, m.name + " is not standard");
  if (!is_simple_type(m)) throw Error(ErrorCode::NotSimpleType, m.name + " is not of simple type");
}

bool has_zero_class(const FourManifold& m) {
  return m.sw.contains(zero_class(m.lattice.rank()));
}

}  // namespace

VanishingRelation build_vanishing_relation(const FourManifold& m, const CohClass& w, long n, long mm) {
  require_standard_simple_type(m);
  if (!is_characteristic(m.lattice, w)) {
    throw Error(ErrorCode::NotCharacteristic, "w = " + to_string(w) + " is not characteristic");
  }
  const auto cn = char_numbers(m);
  if (!admissible_mn(cn.chi_h, cn.c1sq, n, mm)) {
    throw Error(ErrorCode::Inadmissible, "(n, m) = (" + std::to_string(n) + ", " + std::to_string(mm) +
                                             ") is not admissible for " + m.name);
  }
  VanishingRelation rel;
  rel.manifold = m.name;
  rel.params = relation_params(cn.chi_h, cn.c1sq, n, mm);
  rel.w = w;
  rel.quadratic = m.lattice.rational_gram();
  const auto& p = rel.params;
  for (long k = 0; k <= p.ell; ++k) {
    RelationTerm t;
    t.k = k;
    t.sw_degree = p.A + 2 * k;
    t.q_power = p.ell - k;
    CoefficientQuery q;
    q.i = t.sw_degree;
    q.k = t.q_power;
    q.chi_h = cn.chi_h;
    q.c1sq = cn.c1sq;
    q.m = mm;
    q.ell = p.ell;
    t.coefficient = coefficient_oracle(q);
    if (t.coefficient.status != CoefficientStatus::KnownZero) {
      t.sw = sw_polynomial(m, w, static_cast<int>(t.sw_degree)).poly;
      t.sw_evaluated = true;
    } else {
      t.sw = MultiPoly(m.lattice.rank());
    }
    rel.terms.push_back(std::move(t));
  }
  return rel;
}

std::string to_string(RelationVerdict verdict) {
  switch (verdict) {
    case RelationVerdict::Consistent:
      return "consistent";
    case RelationVerdict::Indeterminate:
      return "indeterminate";
    case RelationVerdict::Violated:
      return "violated";
  }
  return "unknown";
}

RelationCheck check_vanishing_relation(const VanishingRelation& rel) {
  RelationCheck out;
  bool unknown = false;
  for (const auto& t : rel.terms) {
    if (t.coefficient.status == CoefficientStatus::KnownZero || t.sw.is_zero()) continue;
    out.nonzero_terms.push_back(t.k);
    if (t.coefficient.status == CoefficientStatus::Unknown) unknown = true;
  }
  if (out.nonzero_terms.empty()) {
    out.verdict = RelationVerdict::Consistent;
    out.reason = "every term has a zero coefficient or a zero SW polynomial";
    return out;
  }
  if (unknown) {
    out.verdict = RelationVerdict::Indeterminate;
    out.reason = "an undetermined coefficient multiplies a nonzero SW polynomial";
    return out;
  }
  if (out.nonzero_terms.size() == 1) {
    // Polynomials form a domain and Q != 0, so a single nonzero product cannot vanish.
    out.verdict = RelationVerdict::Violated;
    out.reason = "the only surviving term is a nonzero coefficient times a nonzero polynomial";
    return out;
  }
  const MultiPoly q = MultiPoly::quadratic(rel.quadratic);
  MultiPoly sum(q.dimension());
  for (const auto& t : rel.terms) {
    if (t.coefficient.status != CoefficientStatus::KnownValue || t.sw.is_zero()) continue;
    sum += t.sw * q.pow(static_cast<unsigned>(t.q_power)) * t.coefficient.value;
  }
  out.verdict = sum.is_zero() ? RelationVerdict::Consistent : RelationVerdict::Violated;
  out.reason = sum.is_zero() ? "the known terms cancel" : "the known terms do not cancel";
  return out;
}

PreparedManifold prepare_for_replay(const FourManifold& m, const CohClass& w) {
  PreparedManifold out{m, w, 0};
  while (char_numbers(out.manifold).c1sq == 0 || has_zero_class(out.manifold)) {
    FourManifold big = blow_up(out.manifold);
    out.w = extend_class(out.w, big.lattice.rank()) - exceptional_class(big);
    big.w = out.w;
    out.manifold = std::move(big);
    ++out.blowups;
  }
  return out;
}

std::string to_string(ReplayRule rule) {
  switch (rule) {
    case ReplayRule::Leading:
      return "leading";
    case ReplayRule::InductivelyZero:
      return "inductively_zero";
    case ReplayRule::CoefficientZero:
      return "coefficient_zero";
  }
  return "unknown";
}

ReplayCertificate induction_replay(const FourManifold& m, const CohClass& w) {
  require_standard_simple_type(m);
  if (has_zero_class(m)) {
    throw Error(ErrorCode::ZeroBasicClass, "0 is a basic class of " + m.name + "; blow up first");
  }
  ReplayCertificate cert;
  cert.manifold = m.name;
  cert.numbers = char_numbers(m);
  const long c = cert.numbers.c;
  for (long v = 2; 2 * v <= c; ++v) {
    auto rel = build_vanishing_relation(m, w, 3, v - 2);
    ReplayStep step;
    step.v = v;
    step.params = rel.params;
    step.concluded_degree = c - 2 * v;
    step.relation_verdict = check_vanishing_relation(rel).verdict;
    bool leading_zero = false;
    bool induction_ok = true;
    for (const auto& t : rel.terms) {
      ReplayTerm r;
      r.k = t.k;
      r.sw_degree = t.sw_degree;
      r.q_power = t.q_power;
      r.coefficient = t.coefficient;
      r.sw_zero = t.sw_evaluated && t.sw.is_zero();
      if (t.k == 0) {
        r.rule = ReplayRule::Leading;
        if (t.coefficient.status != CoefficientStatus::KnownValue || t.coefficient.value == 0) {
          throw std::logic_error("leading coefficient is not a known nonzero value");
        }
        leading_zero = r.sw_zero;
      } else if (t.k <= v - 2) {
        r.rule = ReplayRule::InductivelyZero;
        if (!r.sw_zero) induction_ok = false;
      } else {
        r.rule = ReplayRule::CoefficientZero;
        if (t.coefficient.status != CoefficientStatus::KnownZero) {
          throw std::logic_error("coefficient expected to vanish is not known to be zero");
        }
      }
      step.terms.push_back(std::move(r));
    }
    step.verified = leading_zero && induction_ok;
    if (!induction_ok) {
      step.note = "an earlier conclusion does not hold in the data";
    } else if (!leading_zero) {
      step.note = "forced conclusion SW^{w," + std::to_string(step.concluded_degree) + "} = 0 fails";
    } else {
      step.note = "SW^{w," + std::to_string(step.concluded_degree) + "} = 0 confirmed";
    }
    cert.steps.push_back(std::move(step));
    if (!cert.steps.back().verified) {
      cert.failed_v = v;
      break;
    }
  }
  cert.verified = !cert.failed_v.has_value();
  return cert;
}

}  // namespace scst
