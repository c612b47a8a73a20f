#include <doctest.h>

#include "scst/donaldson.hpp"
#include "scst/errors.hpp"
#include "scst/swseries.hpp"

using namespace scst;

TEST_CASE("K3 in low degree") {
  auto k3 = make_builtin("K3");
  auto w = zero_class(22);
  auto q = intersection_form(k3.lattice);
  CHECK(witten_donaldson(k3, w, 2, 0) == q);
  CHECK(witten_series(k3, w, 2, 0).render() == "Q");

  auto closed = witten_series(k3, w, 1, 0);
  CHECK_FALSE(closed.gate_open);
  CHECK(closed.terms.empty());
  CHECK(witten_donaldson(k3, w, 1, 0).is_zero());
  CHECK(witten_donaldson(k3, w, 4, 0).is_zero());

  auto six = witten_series(k3, w, 6, 0);
  CHECK(six.render() == "15*Q^3");
  CHECK(six.expand() == q.pow(3) * Rational(15));

  // One point class: h^4 x with delta = 6, m = 1.
  auto with_x = witten_series(k3, w, 6, 1);
  CHECK(with_x.render() == "6*Q^2");
  CHECK_FALSE(witten_series(k3, w, 4, 1).gate_open);
}

TEST_CASE("K3 with a root for w") {
  auto k3 = make_builtin("K3");
  CohClass w = unit_class(22, 0);  // square -2
  CHECK(k3.lattice.square(w) == -2);
  auto q = intersection_form(k3.lattice);
  auto four = witten_series(k3, w, 4, 0);
  CHECK(four.gate_open);
  CHECK(four.render() == "-3*Q^2");
  CHECK_FALSE(witten_series(k3, w, 2, 0).gate_open);
  RationalVector h(22, 0);
  h[16] = 1;
  h[17] = 2;  // inside the first hyperbolic summand, Q(h) = 4
  CHECK(four.evaluate(h) == -48);
  CHECK(four.expand().evaluate(h) == -48);
}

TEST_CASE("series with a nonconstant SW factor") {
  auto e = make_elliptic_surface(4);
  auto w = default_w(e);
  const auto c = char_numbers(e).c;
  CHECK(c == 4);
  for (long delta = 0; delta <= 8; ++delta) {
    auto s = witten_series(e, w, delta, 0);
    const bool gate = ((e.lattice.square(w).get_num() + delta + 12) % 4) == 0;
    CHECK(s.gate_open == gate);
    if (!gate) {
      CHECK(s.terms.empty());
      continue;
    }
    CHECK(s.prefactor == ratio(1, 4));
    for (const auto& t : s.terms) {
      CHECK(t.i + 2 * t.k == delta);
      CHECK(t.sw == sw_polynomial(e, w, static_cast<int>(t.i)).poly);
      CHECK(t.coefficient ==
            s.prefactor * ratio(factorial(delta), pow2(t.k).get_num() * factorial(t.k) * factorial(t.i)));
    }
  }
  auto s = witten_series(e, w, 4, 0);
  REQUIRE_FALSE(s.terms.empty());
  CHECK(s.render().find("SW[2]") != std::string::npos);
}

TEST_CASE("invalid arguments") {
  auto k3 = make_builtin("K3");
  CHECK_THROWS_AS(witten_series(k3, zero_class(22), 2, 2), Error);
  CHECK_THROWS_AS(witten_series(k3, zero_class(22), 2, -1), Error);
  CHECK_THROWS_AS(witten_series(k3, zero_class(3), 2, 0), Error);
  CohClass half = zero_class(22);
  half[0] = ratio(1, 2);
  CHECK_THROWS_AS(witten_series(k3, half, 2, 0), Error);
}
