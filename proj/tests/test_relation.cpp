#include <doctest.h>

#include "scst/errors.hpp"
#include "scst/relation.hpp"
#include "scst/swseries.hpp"

using namespace scst;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("relation on E(4)") {
  auto e4 = make_elliptic_surface(4);
  auto rel = build_vanishing_relation(e4, default_w(e4), 3, 0);
  CHECK(rel.params.delta == 10);
  CHECK(rel.params.ell == 5);
  CHECK(rel.params.A == 0);
  REQUIRE(rel.terms.size() == 6);
  for (const auto& t : rel.terms) {
    CHECK(t.sw_degree == 2 * t.k);
    CHECK(t.q_power == 5 - t.k);
  }
  CHECK(rel.terms[0].coefficient.status == CoefficientStatus::KnownValue);
  CHECK(rel.terms[0].coefficient.value == -945);
  for (std::size_t k = 1; k < rel.terms.size(); ++k) {
    CHECK(rel.terms[k].coefficient.status == CoefficientStatus::KnownZero);
    CHECK_FALSE(rel.terms[k].sw_evaluated);
  }
  // SW^{w,0} of E(4) is 1 - 2 + 1 = 0 up to sign.
  CHECK(rel.terms[0].sw.is_zero());
  CHECK(check_vanishing_relation(rel).verdict == RelationVerdict::Consistent);
}

TEST_CASE("relation preconditions") {
  auto k3 = make_builtin("K3");
  CHECK(code_of([&] { build_vanishing_relation(k3, zero_class(22), 3, 0); }) == ErrorCode::Inadmissible);
  auto e4 = make_elliptic_surface(4);
  CHECK(code_of([&] { build_vanishing_relation(e4, unit_class(e4.lattice.rank(), 0), 3, 0); }) ==
        ErrorCode::NotCharacteristic);
  FourManifold s4;  // b+ = 1
  s4.euler = 4;
  s4.lattice = IntersectionLattice::parse("H");
  CHECK(code_of([&] { build_vanishing_relation(s4, zero_class(2), 3, 0); }) == ErrorCode::NotStandard);
}

TEST_CASE("relation on a blown-up X_q") {
  auto x = make_builtin("Xq2.bu1");
  CHECK(char_numbers(x).c == 4);
  auto rel = build_vanishing_relation(x, *x.w, 3, 0);
  CHECK(rel.params.A == 0);
  CHECK(rel.params.ell == 1);
  REQUIRE(rel.terms.size() == 2);
  CHECK(rel.terms[0].coefficient.value == -1);
  CHECK(rel.terms[1].coefficient.status == CoefficientStatus::KnownZero);
  CHECK(check_vanishing_relation(rel).verdict == RelationVerdict::Consistent);
}

TEST_CASE("elliptic surfaces are consistent with every admissible relation") {
  for (int n = 4; n <= 8; ++n) {
    auto e = make_elliptic_surface(n);
    const auto num = char_numbers(e);
    int relations = 0;
    for (long ns = 2; ns <= 2 * num.chi_h; ++ns) {
      for (long m = 0; m <= num.c; ++m) {
        if (!admissible_mn(e, ns, m)) continue;
        CAPTURE(n);
        CAPTURE(ns);
        CAPTURE(m);
        auto check = check_vanishing_relation(build_vanishing_relation(e, default_w(e), ns, m));
        CHECK(check.verdict == RelationVerdict::Consistent);
        ++relations;
      }
    }
    CHECK(relations > 0);
  }
}

TEST_CASE("synthetic table violates the first relation") {
  auto s = make_synthetic_nonscst();
  auto rel = build_vanishing_relation(s, default_w(s), 3, 0);
  auto check = check_vanishing_relation(rel);
  CHECK(check.verdict == RelationVerdict::Violated);
  CHECK(check.nonzero_terms == std::vector<long>{0});
}

TEST_CASE("empty table is consistent") {
  auto e = make_elliptic_surface(6);
  e.sw.clear();
  for (long m = 0; m <= 1; ++m) {
    auto check = check_vanishing_relation(build_vanishing_relation(e, default_w(e), 3, m));
    CHECK(check.verdict == RelationVerdict::Consistent);
    CHECK(check.nonzero_terms.empty());
  }
}

TEST_CASE("several known terms are expanded") {
  VanishingRelation rel;
  rel.quadratic = {{1}};
  auto x = MultiPoly::variable(1, 0);
  RelationTerm a;
  a.k = 0;
  a.q_power = 0;
  a.coefficient = {CoefficientStatus::KnownValue, 1, "test"};
  a.sw = x * x;
  a.sw_evaluated = true;
  RelationTerm b;
  b.k = 1;
  b.q_power = 1;
  b.coefficient = {CoefficientStatus::KnownValue, -1, "test"};
  b.sw = MultiPoly::constant(1, 1);
  b.sw_evaluated = true;
  rel.terms = {a, b};
  CHECK(check_vanishing_relation(rel).verdict == RelationVerdict::Consistent);
  rel.terms[1].coefficient.value = 2;
  CHECK(check_vanishing_relation(rel).verdict == RelationVerdict::Violated);
  rel.terms[1].coefficient.status = CoefficientStatus::Unknown;
  CHECK(check_vanishing_relation(rel).verdict == RelationVerdict::Indeterminate);
}

TEST_CASE("induction replay") {
  for (int n : {4, 6, 8}) {
    auto e = make_elliptic_surface(n);
    CHECK(code_of([&] { induction_replay(e, default_w(e)); }) == ErrorCode::ZeroBasicClass);
    auto prepared = prepare_for_replay(e, default_w(e));
    CHECK(prepared.blowups == 1);
    const long c = char_numbers(prepared.manifold).c;
    CHECK(c == n + 1);
    auto cert = induction_replay(prepared.manifold, prepared.w);
    CAPTURE(n);
    CHECK(cert.verified);
    CHECK_FALSE(cert.failed_v.has_value());
    CHECK(cert.steps.size() == static_cast<std::size_t>(c / 2 - 1));
    for (const auto& step : cert.steps) {
      CHECK(step.verified);
      CHECK(step.concluded_degree == c - 2 * step.v);
      CHECK(step.params.n == 3);
      CHECK(step.params.m == step.v - 2);
      for (const auto& t : step.terms) {
        if (t.k == 0) CHECK(t.rule == ReplayRule::Leading);
        else if (t.k <= step.v - 2) CHECK(t.rule == ReplayRule::InductivelyZero);
        else CHECK(t.rule == ReplayRule::CoefficientZero);
      }
    }
  }

  auto k3 = make_builtin("K3.bu2");
  auto prepared = prepare_for_replay(k3, *k3.w);
  CHECK(prepared.blowups == 0);
  auto cert = induction_replay(k3, *k3.w);
  CHECK(cert.verified);
  REQUIRE(cert.steps.size() == 1);
  CHECK(cert.steps[0].concluded_degree == 0);

  auto s = make_synthetic_nonscst();
  auto bad = induction_replay(s, default_w(s));
  CHECK_FALSE(bad.verified);
  REQUIRE(bad.failed_v.has_value());
  CHECK(*bad.failed_v == 2);
  REQUIRE(bad.steps.size() == 1);
  CHECK(bad.steps[0].relation_verdict == RelationVerdict::Violated);
  CHECK_FALSE(bad.steps[0].verified);
}
