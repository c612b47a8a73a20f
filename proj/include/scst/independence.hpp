#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scst/rational.hpp"

namespace scst {

/// Linear forms T_1..T_k and one quadratic form Q on Q^n.
struct LinearFormFamily {
  std::size_t dimension = 0;
  std::vector<RationalVector> forms;
  RationalMatrix quadratic;

  /// Throws DimensionMismatch / InvalidInput if shapes or symmetry are wrong.
  void validate() const;
};

struct IndependenceCertificate {
  bool independent = false;
  /// v with T_i(v) = 0 for all i and Q(v) != 0.
  std::optional<RationalVector> witness;
  /// Coefficients c with sum c_i T_i = 0 when the forms are dependent.
  std::optional<RationalVector> dependency;
  std::string reason;
};

/// Constructive test of the linear-forms-plus-quadratic independence criterion:
/// the forms must be linearly independent and Q must not vanish on their common
/// kernel. `degree_bound` must be >= 1.
IndependenceCertificate algebraically_independent(const LinearFormFamily& family,
                                                  int degree_bound = 1);

struct MonomialIndependenceOptions {
  std::size_t max_monomials = 5000;
  /// Sample coordinates are drawn from 1..grid_size.
  unsigned grid_size = 0;  // 0 picks a size from the budget
  std::uint64_t seed = 0x5eed5eedULL;
};

/// Checks that the monomials prod T_u^{i_u} * Q^k of weighted degree
/// sum i_u + 2k <= exponent_budget are linearly independent functions, by
/// exact rank of their values on deterministic integer sample points.
/// Throws BudgetTooLarge when the monomial count exceeds the cap.
bool monomial_family_independent(const LinearFormFamily& family, int exponent_budget,
                                 const MonomialIndependenceOptions& options = {});

/// Number of monomials monomial_family_independent would test.
std::size_t monomial_family_size(std::size_t form_count, int exponent_budget);

}  // namespace scst
