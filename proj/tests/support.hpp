#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "scst/manifold.hpp"
#include "scst/multipoly.hpp"
#include "scst/symmetric.hpp"

namespace scst::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random rational with small numerator and denominator in 1..3.
inline Rational small_rational(std::mt19937_64& rng) {
  return ratio(uniform(rng, -4, 4), uniform(rng, 1, 3));
}

inline SymMultilinear random_sym(std::mt19937_64& rng, std::size_t dim, unsigned degree) {
  SymMultilinear m(dim, degree);
  SymMultilinear::Index index(degree, 0);
  auto fill = [&](auto&& self, unsigned slot, std::uint32_t start) -> void {
    if (slot == degree) {
      if (uniform(rng, 0, 3) != 0) m.set(index, small_rational(rng));
      return;
    }
    for (std::uint32_t i = start; i < dim; ++i) {
      index[slot] = i;
      self(self, slot + 1, i);
    }
  };
  fill(fill, 0, 0);
  return m;
}

inline MultiPoly random_homogeneous(std::mt19937_64& rng, std::size_t dim, unsigned degree) {
  return polarize(random_sym(rng, dim, degree));
}

// Odd squares summing to target, one per slot; randomized depth-first search.
inline bool odd_square_split(std::mt19937_64& rng, long target, int slots, std::vector<long>& out) {
  if (slots == 0) return target == 0;
  std::vector<long> values;
  for (long x = 1; x * x <= target; x += 2) values.push_back(x);
  std::shuffle(values.begin(), values.end(), rng);
  for (long x : values) {
    out.push_back(x);
    if (odd_square_split(rng, target - x * x, slots - 1, out)) return true;
    out.pop_back();
  }
  return false;
}

/// A simple-type table on diag(a, b) with a odd (so chi_h is an integer),
/// K characteristic with K^2 = c1^2, and SW'(-K) = (-1)^chi_h SW'(K).
inline FourManifold random_simple_type_table(std::mt19937_64& rng) {
  while (true) {
    const int a = 2 * uniform(rng, 0, 2) + 1;
    const int b = uniform(rng, 0, 4);
    FourManifold m;
    m.name = "random";
    m.euler = a + b + 2;
    m.signature = a - b;
    m.lattice = IntersectionLattice::parse("diag(" + std::to_string(a) + "," + std::to_string(b) + ")");
    const long c1sq = 2 * m.euler + 3 * m.signature;
    const long chi_h = (m.euler + m.signature) / 4;
    const int classes = uniform(rng, 1, 3);
    bool ok = true;
    for (int n = 0; n < classes && ok; ++n) {
      CohClass k = zero_class(a + b);
      long negative = 0;
      for (int j = 0; j < b; ++j) {
        long y = uniform(rng, 0, 1) ? 1 : 3;
        negative += y * y;
        k[a + j] = uniform(rng, 0, 1) ? y : -y;
      }
      std::vector<long> xs;
      if (!odd_square_split(rng, c1sq + negative, a, xs)) {
        ok = false;
        break;
      }
      for (int i = 0; i < a; ++i) k[i] = uniform(rng, 0, 1) ? xs[i] : -xs[i];
      if (m.sw.contains(k) || m.sw.contains(-k)) continue;
      int value = uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1);
      m.sw.emplace(k, value);
      m.sw.emplace(-k, chi_h % 2 ? -value : value);
    }
    if (ok && !m.sw.empty()) {
      m.w = characteristic_vector(m.lattice);
      return m;
    }
  }
}

/// sum_j (-1)^j binom(n-2, j) (2j - (n-2))^i
inline Integer elliptic_oracle(int n, int i) {
  Integer total = 0;
  for (int j = 0; j <= n - 2; ++j) {
    Integer term = binomial(n - 2, j);
    Integer base = 2 * j - (n - 2);
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(i));
    total += (j % 2 ? -1 : 1) * term * p;
  }
  return total;
}

}  // namespace scst::testing
