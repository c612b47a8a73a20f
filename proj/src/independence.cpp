#include "scst/independence.hpp"

#include "scst/errors.hpp"
#include "scst/linalg.hpp"

namespace scst {

void LinearFormFamily::validate() const {
  for (const auto& t : forms) {
    if (t.size() != dimension) throw Error(ErrorCode::DimensionMismatch, "linear form has wrong length");
  }
  if (quadratic.size() != dimension) {
    throw Error(ErrorCode::DimensionMismatch, "quadratic form has wrong size");
  }
  for (std::size_t i = 0; i < dimension; ++i) {
    if (quadratic[i].size() != dimension) {
      throw Error(ErrorCode::DimensionMismatch, "quadratic form is not square");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (quadratic[i][j] != quadratic[j][i]) {
        throw Error(ErrorCode::InvalidInput, "quadratic form is not symmetric");
      }
    }
  }
}

IndependenceCertificate algebraically_independent(const LinearFormFamily& family, int degree_bound) {
  if (degree_bound < 1) throw Error(ErrorCode::InvalidInput, "degree_bound must be at least 1");
  family.validate();
  const std::size_t n = family.dimension;
  const std::size_t k = family.forms.size();
  IndependenceCertificate cert;

  if (linalg::rank(family.forms) < k) {
    // Columns are the forms, so a kernel vector is a vanishing combination.
    RationalMatrix columns(n, RationalVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) columns[j][i] = family.forms[i][j];
    cert.dependency = linalg::kernel(columns, k).front();
    cert.reason = "linear forms are linearly dependent";
    return cert;
  }

  auto common_kernel = linalg::kernel(family.forms, n);
  if (common_kernel.empty()) {
    cert.reason = "common kernel of the linear forms is trivial";
    return cert;
  }
  const auto& q = family.quadratic;
  for (const auto& u : common_kernel) {
    if (linalg::bilinear(q, u, u) != 0) {
      cert.independent = true;
      cert.witness = u;
      return cert;
    }
  }
  // Every basis vector is isotropic; Q(u + v) = 2 B(u, v) then decides.
  for (std::size_t a = 0; a < common_kernel.size(); ++a) {
    for (std::size_t b = a + 1; b < common_kernel.size(); ++b) {
      if (linalg::bilinear(q, common_kernel[a], common_kernel[b]) != 0) {
        RationalVector v = common_kernel[a];
        for (std::size_t j = 0; j < n; ++j) v[j] += common_kernel[b][j];
        cert.independent = true;
        cert.witness = std::move(v);
        return cert;
      }
    }
  }
  cert.reason = "quadratic form vanishes on the common kernel";
  return cert;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Exponent tuples (i_1..i_k, q) with sum i + 2q <= budget.
void enumerate_exponents(std::size_t forms, int budget, std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> current(forms + 1, 0);
  auto recurse = [&](auto&& self, std::size_t slot, int remaining) -> void {
    if (slot == forms) {
      for (int q = 0; 2 * q <= remaining; ++q) {
        current[forms] = static_cast<unsigned>(q);
        out.push_back(current);
      }
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current[slot] = static_cast<unsigned>(e);
      self(self, slot + 1, remaining - e);
    }
  };
  recurse(recurse, 0, budget);
}

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> reduce(const Rational& q) {
  const Integer p(static_cast<unsigned long>(kPrime));
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  Integer den = q.get_den() % p;
  if (den == 0) return std::nullopt;
  return mul_mod(num.get_ui(), pow_mod(den.get_ui(), kPrime - 2));
}

// Rank modulo 2^61 - 1; a lower bound for the rank over Q.
std::optional<std::size_t> modular_rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::vector<std::vector<std::uint64_t>> a(m.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      auto r = reduce(m[i][j]);
      if (!r) return std::nullopt;
      a[i][j] = *r;
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pick = rank;
    while (pick < a.size() && a[pick][col] == 0) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[rank], a[pick]);
    std::uint64_t inv = pow_mod(a[rank][col], kPrime - 2);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][col] == 0) continue;
      std::uint64_t f = mul_mod(a[r][col], inv);
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] = (a[r][c] + kPrime - mul_mod(f, a[rank][c])) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t monomial_family_size(std::size_t form_count, int exponent_budget) {
  if (exponent_budget < 0) return 0;
  std::size_t total = 0;
  for (int q = 0; 2 * q <= exponent_budget; ++q) {
    total += binomial(static_cast<unsigned long>(exponent_budget - 2 * q) + form_count, form_count).get_ui();
  }
  return total;
}

bool monomial_family_independent(const LinearFormFamily& family, int exponent_budget,
                                 const MonomialIndependenceOptions& options) {
  family.validate();
  if (exponent_budget < 0) throw Error(ErrorCode::InvalidInput, "exponent budget must be non-negative");
  const std::size_t count = monomial_family_size(family.forms.size(), exponent_budget);
  if (count > options.max_monomials) {
    throw Error(ErrorCode::BudgetTooLarge, std::to_string(count) + " monomials exceed the cap of " +
                                               std::to_string(options.max_monomials));
  }
  std::vector<std::vector<unsigned>> exponents;
  enumerate_exponents(family.forms.size(), exponent_budget, exponents);

  const unsigned grid = options.grid_size ? options.grid_size : 64u + 4u * static_cast<unsigned>(exponent_budget);
  const std::size_t points = count + 16;
  std::uint64_t state = options.seed;

  // rows: monomials, columns: sample points
  RationalMatrix values(count, RationalVector(points));
  RationalVector v(family.dimension);
  for (std::size_t p = 0; p < points; ++p) {
    for (auto& x : v) x = static_cast<long>(1 + splitmix64(state) % grid);
    std::vector<Rational> base;
    for (const auto& t : family.forms) base.push_back(linalg::dot(t, v));
    base.push_back(linalg::bilinear(family.quadratic, v, v));
    for (std::size_t r = 0; r < count; ++r) {
      Rational value = 1;
      for (std::size_t j = 0; j < base.size(); ++j) {
        if (exponents[r][j]) value *= power(base[j], exponents[r][j]);
      }
      values[r][p] = std::move(value);
    }
  }
  if (auto r = modular_rank(values); r && *r == count) return true;
  return linalg::rank(values) == count;
}

}  // namespace scst
