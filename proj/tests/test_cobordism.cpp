#include <doctest.h>

#include "scst/cobordism.hpp"
#include "scst/errors.hpp"
#include "support.hpp"

using namespace scst;
using scst::testing::uniform;

namespace {

std::vector<FourManifold> fixtures() {
  std::vector<FourManifold> out;
  for (const auto& name : builtin_catalog()) out.push_back(make_builtin(name));
  return out;
}

CoefficientQuery query(long i, long k, long chi_h, long c1sq, long n, long m) {
  CoefficientQuery q;
  q.i = i;
  q.k = k;
  q.chi_h = chi_h;
  q.c1sq = c1sq;
  q.m = m;
  q.ell = 2 * chi_h - n;
  return q;
}

}  // namespace

TEST_CASE("spin^u existence") {
  auto k3 = make_builtin("K3");
  const Mod2Class zero2(22, 0);
  auto ok = spinu_exists(k3, -4, zero_class(22), zero2);
  CHECK(ok.exists);
  CHECK(ok.failures.empty());
  REQUIRE(ok.lift.has_value());

  auto bad_lambda = spinu_exists(k3, -4, unit_class(22, 0), zero2);
  CHECK_FALSE(bad_lambda.exists);
  CHECK_FALSE(bad_lambda.failures.empty());

  auto bad_p1 = spinu_exists(k3, 2, zero_class(22), zero2);
  CHECK_FALSE(bad_p1.exists);
}

TEST_CASE("ft_n and its indices") {
  auto k3 = make_builtin("K3");
  auto t = make_ft_n(k3, 3);
  CHECK(t.p1 == -4);
  CHECK(t.c1 == zero_class(22));
  CHECK(indices(k3, t).n_a == 3);
  CHECK(indices(k3, t).d_a == -2);
  CHECK(level(k3, t, zero_class(22)) == 1);

  auto e4 = make_elliptic_surface(4);
  auto t4 = make_ft_n(e4, 3);
  CHECK(t4.p1 == -20);
  CHECK(indices(e4, t4).n_a == 3);
  CHECK(indices(e4, t4).d_a == 8);
  CHECK(level(e4, t4, Rational(2) * *e4.fiber) == 5);

  CHECK(indices(e4, make_ft_n(e4, 0)).n_a == 0);

  SpinuStructure odd{1, zero_class(e4.lattice.rank()), Mod2Class(e4.lattice.rank(), 0)};
  CHECK_THROWS_AS(indices(e4, odd), Error);
  CHECK_THROWS_AS(level(e4, odd, zero_class(e4.lattice.rank())), Error);
}

TEST_CASE("index and level formulas across fixtures") {
  for (const auto& m : fixtures()) {
    CAPTURE(m.name);
    const auto num = char_numbers(m);
    for (long n = 0; n <= 10; ++n) {
      auto t = make_ft_n(m, n);
      auto idx = indices(m, t);
      CHECK(idx.n_a == n);
      CHECK(idx.d_a == num.c + 4 * num.chi_h - 4 * n);
      for (const auto& [k, value] : m.sw) CHECK(level(m, t, k) == 2 * num.chi_h - n);
      for (long mm = 0; mm <= 3; ++mm) {
        auto p = relation_params(num.chi_h, num.c1sq, n, mm);
        CHECK(p.A + 2 * p.ell + 2 * p.m == p.delta);
        CHECK(p.v == mm + 2);
      }
    }
  }
}

TEST_CASE("admissibility") {
  for (const auto& m : fixtures()) {
    const auto num = char_numbers(m);
    for (long v = 2; 2 * v <= num.c; ++v) CHECK(admissible_mn(m, 3, v - 2, true));
    CHECK_FALSE(admissible_mn(m, 1, 0));
    CHECK_FALSE(admissible_mn(m, 2 * num.chi_h + 1, 0));
  }
  CHECK_FALSE(admissible_mn(4, 0, 2, 0, true));
  CHECK(admissible_mn(4, 0, 2, 0, false));
  CHECK_FALSE(admissible_mn(4, 0, 3, -1));
}

TEST_CASE("leading coefficient") {
  CHECK(leading_coefficient(2, -2, 0, 3) == -1);
  auto p = relation_params(4, 0, 3, 0);
  CHECK(p.delta == 10);
  CHECK(p.ell == 5);
  CHECK(p.A == 0);
  // (-1)^5 2^{5-10} 10!/5! = -945
  CHECK(leading_coefficient(4, 0, 0, 3) == -945);
  try {
    leading_coefficient(2, 0, 0, 3);  // c = 2 gives A = -2
    FAIL("expected NegativeIndex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeIndex);
  }

  auto w = leading_identity_check(2, -2, 0, 3, 0);
  CHECK(w.holds());
  CHECK(w.closed_form == -1);
  CHECK_THROWS_AS(leading_identity_check(2, 0, 0, 3, 0), Error);
}

TEST_CASE("leading identity on random admissible tuples") {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 200) {
    const long chi = uniform(rng, 2, 12);
    const long c1sq = uniform(rng, -12, chi - 3);
    const long n = uniform(rng, 2, static_cast<int>(2 * chi));
    const long m = uniform(rng, 0, 4);
    if (!admissible_mn(chi, c1sq, n, m)) continue;
    const auto p = relation_params(chi, c1sq, n, m);
    const long r_min = std::max<long>(0, 3 * p.ell - p.delta - 1);
    const long r_xi = r_min + uniform(rng, 0, 5);
    auto w = leading_identity_check(chi, c1sq, m, n, r_xi);
    CAPTURE(chi);
    CAPTURE(c1sq);
    CAPTURE(n);
    CAPTURE(m);
    CHECK(w.holds());
    CHECK(w.closed_form == leading_coefficient(chi, c1sq, m, n));
    ++checked;
  }
}

TEST_CASE("matchings and double factorials") {
  Integer df = 1;
  for (unsigned long ell = 0; ell <= 12; ++ell) {
    if (ell > 0) df *= 2 * ell - 1;
    CHECK(odd_double_factorial(ell) == df);
    CHECK(matching_count(ell) == df);
  }
  CHECK(matching_count(3) == 15);
}

TEST_CASE("coefficient oracle") {
  // chi = 4, c1^2 = 0, c = 4, n = 3, m = 0: delta = 10, l = 5, A = 0.
  auto beyond = coefficient_oracle(query(0, 6, 4, 0, 3, 0));
  CHECK(beyond.status == CoefficientStatus::KnownZero);

  auto lead = coefficient_oracle(query(0, 5, 4, 0, 3, 0));
  CHECK(lead.status == CoefficientStatus::KnownValue);
  CHECK(lead.value == leading_coefficient(4, 0, 0, 3));

  // n odd: i >= c - 3 on the degree line.
  auto det = coefficient_oracle(query(2, 4, 4, 0, 3, 0));
  CHECK(det.status == CoefficientStatus::KnownZero);
  // For odd n the line never meets i = c - 3 itself.
  CHECK(coefficient_oracle(query(1, 4, 4, 0, 3, 0)).status == CoefficientStatus::Unknown);

  auto with_j = query(0, 5, 4, 0, 3, 0);
  with_j.j = 1;
  CHECK(coefficient_oracle(with_j).status == CoefficientStatus::Unknown);
  auto with_lambda = query(0, 5, 4, 0, 3, 0);
  with_lambda.lambda_sq = -2;
  CHECK(coefficient_oracle(with_lambda).status == CoefficientStatus::Unknown);

  // n even leaves the non-leading coefficients undetermined.
  auto even = relation_params(5, -1, 4, 0);  // c = 6, A = 1, l = 6
  auto undetermined = coefficient_oracle(query(even.A + 2, even.ell - 1, 5, -1, 4, 0));
  CHECK(undetermined.status == CoefficientStatus::Unknown);

  // Every admissible (n, m) relation: leading term known nonzero, k > l known zero.
  for (long chi = 2; chi <= 8; ++chi) {
    for (long c1sq = -6; c1sq <= chi - 3; ++c1sq) {
      for (long n = 2; n <= 2 * chi; ++n) {
        for (long m = 0; m <= 3; ++m) {
          if (!admissible_mn(chi, c1sq, n, m)) continue;
          auto p = relation_params(chi, c1sq, n, m);
          auto v = coefficient_oracle(query(p.A, p.ell, chi, c1sq, n, m));
          CHECK(v.status == CoefficientStatus::KnownValue);
          CHECK(v.value != 0);
          CHECK(coefficient_oracle(query(p.A, p.ell + 1, chi, c1sq, n, m)).status ==
                CoefficientStatus::KnownZero);
        }
      }
    }
  }
}
