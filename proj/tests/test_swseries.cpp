#include <doctest.h>

#include "scst/errors.hpp"
#include "scst/swseries.hpp"
#include "support.hpp"

using namespace scst;

namespace {

// Every builtin plus a few extra blow-ups.
std::vector<FourManifold> fixtures() {
  std::vector<FourManifold> out;
  for (const auto& name : builtin_catalog()) out.push_back(make_builtin(name));
  out.push_back(make_builtin("E5.bu1"));
  out.push_back(make_builtin("K3.bu3"));
  return out;
}

}  // namespace

TEST_CASE("sign convention") {
  FourManifold m;
  m.lattice = IntersectionLattice::parse("diag(0,1)");
  CHECK(sw_sign(m, {1}, {1}) == -1);  // (-1 + -1)/2 = -1
  CHECK(sw_sign(m, {1}, {-1}) == 1);
  auto h = IntersectionLattice::parse("H");
  m.lattice = h;
  try {
    sw_sign(m, {1, 0}, {0, 1});
    FAIL("expected OddExponent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddExponent);
  }
}

TEST_CASE("K3 series") {
  auto k3 = make_builtin("K3");
  auto w = zero_class(22);
  auto p0 = sw_polynomial(k3, w, 0);
  CHECK(p0.poly == MultiPoly::constant(22, 1));
  CHECK(sw_polynomial(k3, w, 1).poly.is_zero());
  auto v = scst_check(k3, w);
  CHECK(v.holds);
  CHECK(v.reason == ScstReason::CLeThree);
  CHECK_THROWS_AS(sw_polynomial(k3, unit_class(22, 0), 0), Error);
}

TEST_CASE("elliptic surfaces against direct summation") {
  for (int n = 4; n <= 8; ++n) {
    auto e = make_elliptic_surface(n);
    auto w = default_w(e);
    const auto& f = *e.fiber;
    // <f, h> as a polynomial; SW^{w,i} = sign * oracle * <f,h>^i with one global sign.
    auto f_form = pairing_form(e.lattice, f);
    for (int i = 0; i <= n - 2; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      auto p = sw_polynomial(e, w, i).poly;
      auto expected = f_form.pow(i) * Rational(testing::elliptic_oracle(n, i));
      CHECK((p == expected || p == -expected));
      if (i <= n - 4) CHECK(p.is_zero());
    }
    CHECK_FALSE(sw_polynomial(e, w, n - 2).poly.is_zero());
    auto v = scst_check(e, w);
    CHECK(v.holds);
    CHECK(v.reason == ScstReason::AllVanish);
  }
  auto e5 = make_elliptic_surface(5);
  for (int i = 0; i <= 2; ++i) CHECK(sw_polynomial(e5, default_w(e5), i).poly.is_zero());
}

TEST_CASE("synthetic table is a counterexample at degree one") {
  auto s = make_synthetic_nonscst();
  CHECK(char_numbers(s).c == 5);
  CHECK(is_standard(s).standard);
  auto v = scst_check(s, default_w(s));
  CHECK_FALSE(v.holds);
  CHECK(v.reason == ScstReason::Counterexample);
  REQUIRE(v.degree.has_value());
  CHECK(*v.degree == 1);
  REQUIRE(v.witness.has_value());
  CHECK_FALSE(v.witness->is_zero());
  CHECK(sw_polynomial(s, default_w(s), 0).poly.is_zero());
}

TEST_CASE("scst_check preconditions") {
  auto e4 = make_elliptic_surface(4);
  auto not_simple = e4;
  CohClass k = zero_class(e4.lattice.rank());
  k[0] = 2;
  not_simple.sw.emplace(k, 1);
  not_simple.sw.emplace(-k, 1);
  CHECK_THROWS_AS(scst_check(not_simple, default_w(e4)), Error);
  CHECK_THROWS_AS(scst_check(e4, unit_class(e4.lattice.rank(), 0)), Error);
}

TEST_CASE("parity vanishing on fixtures") {
  for (const auto& m : fixtures()) {
    CAPTURE(m.name);
    auto w = default_w(m);
    const long c = char_numbers(m).c;
    std::vector<int> checked;
    CHECK_NOTHROW(checked = parity_vanishing(m, w));
    for (int i : checked) CHECK((c + i) % 2 != 0);
    for (int i = 0; i <= 6; ++i) {
      if ((c + i) % 2 != 0) CHECK(sw_polynomial(m, w, i).poly.is_zero());
    }
  }
  auto e4 = make_elliptic_surface(4);
  CHECK(parity_vanishing(e4, default_w(e4), 5) == std::vector<int>{1, 3, 5});
  auto e5 = make_elliptic_surface(5);
  CHECK(parity_vanishing(e5, default_w(e5), 4) == std::vector<int>{0, 2, 4});

  auto empty = e4;
  empty.sw.clear();
  CHECK(parity_vanishing(empty, default_w(empty), 5).size() == 3);
  for (int i = 0; i <= 5; ++i) CHECK(sw_polynomial(empty, default_w(empty), i).poly.is_zero());

  // Breaking the symmetry breaks parity.
  auto broken = e5;
  broken.sw[Rational(3) * *e5.fiber] = 1;
  try {
    parity_vanishing(broken, default_w(broken));
    FAIL("expected ParityViolation");
  } catch (const ParityViolation& e) {
    CHECK(e.degree() == 0);
  }
}

TEST_CASE("parity vanishing on random tables") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = testing::random_simple_type_table(rng);
    auto w = *m.w;
    const long c = char_numbers(m).c;
    for (int i = 0; i <= 7; ++i) {
      if ((c + i) % 2 != 0) CHECK(sw_polynomial(m, w, i).poly.is_zero());
    }
    CHECK_NOTHROW(parity_vanishing(m, w));
  }
}

TEST_CASE("basic class lower bound") {
  auto e6 = basic_class_lower_bound(make_elliptic_surface(6));
  CHECK(e6.count == 3);
  CHECK(e6.bound == 3);
  CHECK(e6.satisfied);
  CHECK_FALSE(e6.warning.has_value());

  auto e8 = basic_class_lower_bound(make_elliptic_surface(8));
  CHECK(e8.count == 4);
  CHECK(e8.bound == 4);
  CHECK(e8.satisfied);

  auto xq = basic_class_lower_bound(make_abstract_Xq(2));
  CHECK(xq.count == 1);
  CHECK(xq.bound == ratio(3, 2));
  CHECK_FALSE(xq.satisfied);
  CHECK(xq.warning.has_value());

  CHECK_THROWS_AS(basic_class_lower_bound(make_builtin("K3")), Error);
  auto empty = make_elliptic_surface(6);
  empty.sw.clear();
  CHECK_THROWS_AS(basic_class_lower_bound(empty), Error);
}

TEST_CASE("blow-up identity and verdict agreement") {
  for (const auto& m : fixtures()) {
    CAPTURE(m.name);
    auto w = default_w(m);
    for (int i = 0; i <= 6; ++i) {
      CAPTURE(i);
      auto id = blowup_series_identity(m, w, i);
      CHECK(id.holds);
      CHECK(id.difference.is_zero());
    }
    auto bu = blow_up(m);
    CHECK(scst_check(m, w).holds == scst_check(bu, *bu.w).holds);
  }
  // K3 at i = 0: the two classes +-e* cancel.
  auto k3 = blow_up(make_builtin("K3"));
  CHECK(sw_polynomial(k3, *k3.w, 0).poly.is_zero());
}

TEST_CASE("transfer through the blow-up") {
  auto e4 = make_elliptic_surface(4);
  auto t = scst_blowup_transfer(e4, default_w(e4));
  CHECK(t.direct.holds);
  CHECK(t.blown_up.holds);
  CHECK(t.transferred.holds);
  CHECK(t.agrees);

  auto k3b3 = make_builtin("K3.bu3");
  CHECK(char_numbers(k3b3).c == 5);
  CHECK(scst_check(k3b3, *k3b3.w).holds);
  auto t3 = scst_blowup_transfer(k3b3, *k3b3.w);
  CHECK(t3.direct.holds);
  CHECK(t3.blown_up.holds);
  CHECK(t3.agrees);

  auto s = make_synthetic_nonscst();
  auto ts = scst_blowup_transfer(s, default_w(s));
  CHECK_FALSE(ts.direct.holds);
  CHECK_FALSE(ts.blown_up.holds);
  CHECK_FALSE(ts.transferred.holds);
  CHECK(ts.agrees);

  auto e5 = make_elliptic_surface(5);
  auto w5 = default_w(e5);
  auto bu = blow_up(e5);
  CHECK(exceptional_linear_part(bu, *bu.w, 2) == sw_polynomial(e5, w5, 1).poly * Rational(-4));
  CHECK(exceptional_linear_part(bu, *bu.w, 2).is_zero());
  auto lin4 = exceptional_linear_part(bu, *bu.w, 4);
  CHECK_FALSE(lin4.is_zero());
  CHECK(lin4 == sw_polynomial(e5, w5, 3).poly * Rational(-8));
}

TEST_CASE("dependence on w is through signs only") {
  for (const auto& m : fixtures()) {
    CAPTURE(m.name);
    auto w = default_w(m);
    const auto rank = m.lattice.rank();
    for (std::size_t idx = 0; idx < std::min<std::size_t>(rank, 6); ++idx) {
      auto w2 = w + Rational(2) * unit_class(rank, idx);
      // Hypothesis: (w - w2).K mod 4 constant over B.
      std::optional<long> residue;
      bool constant = true;
      for (const auto& [k, value] : m.sw) {
        long r = mod_floor(m.lattice.pair(w - w2, k).get_num().get_si(), 4);
        if (residue && *residue != r) constant = false;
        residue = r;
      }
      if (!constant || m.sw.empty()) continue;
      const auto& k0 = m.sw.begin()->first;
      const int ratio_sign = sw_sign(m, w2, k0) * sw_sign(m, w, k0);
      for (int i = 0; i <= 4; ++i) {
        CHECK(sw_polynomial(m, w2, i).poly == sw_polynomial(m, w, i).poly * Rational(ratio_sign));
      }
    }
  }
}
