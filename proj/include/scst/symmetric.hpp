#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "scst/multipoly.hpp"
#include "scst/rational.hpp"

namespace scst {

/// A symmetric d-linear form on Q^n.
///
/// Only sorted index tuples (i1 <= ... <= id, 0-based) are stored; the entry for
/// a tuple is the value on the corresponding basis vectors. Zero entries are not
/// stored, so two maps are equal exactly when their entry tables are.
class SymMultilinear {
 public:
  using Index = std::vector<std::uint32_t>;
  using EntryMap = std::map<Index, Rational>;

  SymMultilinear(std::size_t dimension, unsigned degree);

  static SymMultilinear scalar(std::size_t dimension, const Rational& value);
  static SymMultilinear covector(std::span<const Rational> values);
  /// Symmetric bilinear form with the given symmetric Gram matrix.
  static SymMultilinear bilinear(const RationalMatrix& gram);

  std::size_t dimension() const noexcept { return dimension_; }
  unsigned degree() const noexcept { return degree_; }
  const EntryMap& entries() const noexcept { return entries_; }

  /// Value on basis vectors b_{i1}, ..., b_{id}; the index order is irrelevant.
  Rational at(Index index) const;
  void set(Index index, const Rational& value);

  /// Full multilinear evaluation M(v_1, ..., v_d).
  Rational operator()(std::span<const RationalVector> vectors) const;

  friend bool operator==(const SymMultilinear& a, const SymMultilinear& b) {
    return a.dimension_ == b.dimension_ && a.degree_ == b.degree_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dimension_;
  unsigned degree_;
  EntryMap entries_;
};

/// v -> M(v, ..., v).
MultiPoly polarize(const SymMultilinear& m);

/// Inverse of polarize on homogeneous polynomials of degree d.
/// Throws NonHomogeneous when p has a term of another degree.
SymMultilinear depolarize(const MultiPoly& p, unsigned degree);

/// Symmetrized product: the average over all permutations of the tensor product.
/// Throws DimensionMismatch.
SymMultilinear sym_product(const SymMultilinear& a, const SymMultilinear& b);

/// ell-fold symmetrized product of m with itself (the scalar 1 when ell == 0).
SymMultilinear sym_power(const SymMultilinear& m, unsigned ell);

}  // namespace scst
