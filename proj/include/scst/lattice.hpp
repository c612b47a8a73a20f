#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scst/rational.hpp"

namespace scst {

/// Coordinates of a class in the lattice basis. Coordinates are rational so that
/// solved test vectors fit; basic classes and w must be integral.
using CohClass = std::vector<Rational>;
using Mod2Class = std::vector<std::uint8_t>;
using Gram = std::vector<std::vector<std::int64_t>>;

bool is_integral(const CohClass& a);
CohClass zero_class(std::size_t rank);
CohClass unit_class(std::size_t rank, std::size_t index);
CohClass operator+(const CohClass& a, const CohClass& b);
CohClass operator-(const CohClass& a, const CohClass& b);
CohClass operator-(const CohClass& a);
CohClass operator*(const Rational& s, const CohClass& a);
/// Requires integral coordinates.
Mod2Class reduce_mod2(const CohClass& a);
std::string to_string(const CohClass& a);

/// Unimodular symmetric integer form. Built from a descriptor such as
/// "2E8+3H+diag(1,1)" or from an explicit Gram matrix.
class IntersectionLattice {
 public:
  IntersectionLattice() = default;

  /// Grammar: term ('+' term)*, term = [count] ("H" | "E8" | "diag(p,q)").
  /// Throws InvalidInput on syntax errors.
  static IntersectionLattice parse(std::string_view descriptor);
  /// Throws InvalidInput unless gram is square, symmetric and |det| = 1.
  static IntersectionLattice from_gram(Gram gram);

  std::size_t rank() const noexcept { return gram_.size(); }
  const Gram& gram() const noexcept { return gram_; }
  const RationalMatrix& rational_gram() const noexcept { return rational_; }
  /// Empty when the lattice was given by an explicit matrix.
  const std::string& descriptor() const noexcept { return descriptor_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  int b_plus() const noexcept { return b_plus_; }
  int b_minus() const noexcept { return static_cast<int>(rank()) - b_plus_; }
  int signature() const noexcept { return b_plus_ - b_minus(); }
  bool is_even() const;

  /// a^T G b. Throws DimensionMismatch.
  Rational pair(const CohClass& a, const CohClass& b) const;
  Rational square(const CohClass& a) const { return pair(a, a); }
  /// G a: the covector x -> pair(a, x).
  RationalVector covector(const CohClass& a) const;

  /// Orthogonal sum with one extra <-1> summand appended as the last basis vector.
  IntersectionLattice with_minus_one() const;

  friend bool operator==(const IntersectionLattice& a, const IntersectionLattice& b) {
    return a.gram_ == b.gram_ && a.descriptor_ == b.descriptor_;
  }

 private:
  IntersectionLattice(Gram gram, std::string descriptor, std::vector<std::string> labels);

  Gram gram_;
  RationalMatrix rational_;
  std::string descriptor_;
  std::vector<std::string> labels_;
  int b_plus_ = 0;
};

bool is_characteristic(const IntersectionLattice& lattice, const CohClass& w);

/// w^2 == signature mod 8. Throws NotCharacteristic when w is not characteristic.
bool characteristic_defect_check(const IntersectionLattice& lattice, const CohClass& w);

/// The characteristic vector with 0/1 coordinates (unique mod 2 by unimodularity).
CohClass characteristic_vector(const IntersectionLattice& lattice);

/// w2 of the form: the reduction of any characteristic vector.
Mod2Class second_stiefel_whitney(const IntersectionLattice& lattice);

struct LatticeBlowUp {
  IntersectionLattice lattice;
  CohClass exceptional;  // e*, the new last basis vector, square -1
};
LatticeBlowUp blow_up_lattice(const IntersectionLattice& lattice);

/// Pads a class with zeros for the exceptional coordinates of a blow-up.
CohClass extend_class(const CohClass& a, std::size_t rank);

using PairingConstraint = std::pair<CohClass, Rational>;

/// A rational h with pair(c_i, h) = v_i for every constraint. With
/// require_positive_square the result also has pair(h, h) > 0.
/// Throws Infeasible when no such h exists.
CohClass find_dual_basis_vector(const IntersectionLattice& lattice,
                                const std::vector<PairingConstraint>& constraints,
                                bool require_positive_square = false);

}  // namespace scst
