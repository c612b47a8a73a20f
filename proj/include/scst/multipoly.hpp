#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scst/rational.hpp"

namespace scst {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map from exponent vectors (length == dimension) to
/// nonzero coefficients, so the zero polynomial is exactly the empty map and
/// equality is structural.
class MultiPoly {
 public:
  using Exponent = std::uint32_t;
  using Monomial = std::vector<Exponent>;
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t dimension) : dimension_(dimension) {}

  static MultiPoly constant(std::size_t dimension, const Rational& value);
  static MultiPoly variable(std::size_t dimension, std::size_t index);
  /// x -> sum_i coefficients[i] * x_i
  static MultiPoly linear(std::span<const Rational> coefficients);
  /// x -> x^T s x for a symmetric matrix s.
  static MultiPoly quadratic(const RationalMatrix& s);

  std::size_t dimension() const noexcept { return dimension_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  /// True when every term has total degree d. The zero polynomial qualifies for every d.
  bool is_homogeneous(int d) const;
  /// The common total degree, or nullopt for mixed degrees or the zero polynomial.
  std::optional<int> homogeneous_degree() const;

  Rational coefficient(const Monomial& m) const;
  /// Adds c * x^m, dropping the term if the coefficient cancels to zero.
  void add_term(const Monomial& m, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;

  /// Same polynomial viewed in more variables (new ones appended, unused).
  MultiPoly extended(std::size_t new_dimension) const;
  /// Inverse of extended: drops trailing variables, which must not occur.
  MultiPoly restricted(std::size_t new_dimension) const;

  /// Terms whose exponent in `index` equals `exponent`, with that variable removed
  /// from the monomial (exponent set to 0).
  MultiPoly slice(std::size_t index, Exponent exponent) const;

  MultiPoly pow(unsigned e) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_dimension(const MultiPoly& other) const;

  std::size_t dimension_ = 0;
  TermMap terms_;
};

/// Human-readable rendering, e.g. "2*x1*x2 - x3^2". Variables are 1-based.
std::string to_string(const MultiPoly& p, const std::string& variable_prefix = "x");

}  // namespace scst
