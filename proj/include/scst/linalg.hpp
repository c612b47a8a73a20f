#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scst/rational.hpp"

// Exact dense linear algebra over Q. Matrices are row-major vectors of rows.
namespace scst::linalg {

std::size_t rank(RationalMatrix a);

/// Basis of {x : a x = 0}. `columns` is needed when `a` has no rows.
std::vector<RationalVector> kernel(const RationalMatrix& a, std::size_t columns);

/// One solution of a x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b,
                                    std::size_t columns);

/// Congruence diagonalization of a symmetric matrix s: returns a basis u_1..u_n
/// of Q^n with u_i^T s u_j = 0 for i != j, together with values[i] = u_i^T s u_i.
struct Diagonalization {
  std::vector<RationalVector> basis;
  RationalVector values;
};
Diagonalization diagonalize(const RationalMatrix& s);

/// Determinant of an integer matrix via fraction-free elimination.
Integer determinant(const std::vector<std::vector<std::int64_t>>& m);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector mat_vec(const RationalMatrix& a, const RationalVector& x);
/// x^T s y
Rational bilinear(const RationalMatrix& s, const RationalVector& x, const RationalVector& y);

}  // namespace scst::linalg
