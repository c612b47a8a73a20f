#include "scst/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "scst/errors.hpp"

namespace scst {

MultiPoly MultiPoly::constant(std::size_t dimension, const Rational& value) {
  MultiPoly p(dimension);
  p.add_term(Monomial(dimension, 0), value);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t dimension, std::size_t index) {
  if (index >= dimension) {
    throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  }
  MultiPoly p(dimension);
  Monomial m(dimension, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::linear(std::span<const Rational> coefficients) {
  MultiPoly p(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) continue;
    Monomial m(coefficients.size(), 0);
    m[i] = 1;
    p.add_term(m, coefficients[i]);
  }
  return p;
}

MultiPoly MultiPoly::quadratic(const RationalMatrix& s) {
  const std::size_t n = s.size();
  MultiPoly p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "quadratic form is not square");
    for (std::size_t j = i; j < n; ++j) {
      if (s[i][j] == 0) continue;
      Monomial m(n, 0);
      m[i] += 1;
      m[j] += 1;
      p.add_term(m, i == j ? s[i][j] : Rational(2 * s[i][j]));
    }
  }
  return p;
}

namespace {

int total_degree(const MultiPoly::Monomial& m) {
  return static_cast<int>(std::accumulate(m.begin(), m.end(), 0u));
}

}  // namespace

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

bool MultiPoly::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_) {
    if (total_degree(m) != d) return false;
  }
  return true;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = total_degree(terms_.begin()->first);
  if (!is_homogeneous(d)) return std::nullopt;
  return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != dimension_) {
    throw Error(ErrorCode::DimensionMismatch, "monomial length does not match polynomial dimension");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != dimension_) {
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  }
  Rational out = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) v *= power(point[i], m[i]);
    }
    out += v;
  }
  return out;
}

MultiPoly MultiPoly::extended(std::size_t new_dimension) const {
  if (new_dimension < dimension_) {
    throw Error(ErrorCode::DimensionMismatch, "cannot shrink polynomial dimension");
  }
  MultiPoly out(new_dimension);
  for (const auto& [m, c] : terms_) {
    Monomial grown = m;
    grown.resize(new_dimension, 0);
    out.terms_.emplace(std::move(grown), c);
  }
  return out;
}

MultiPoly MultiPoly::restricted(std::size_t new_dimension) const {
  if (new_dimension > dimension_) {
    throw Error(ErrorCode::DimensionMismatch, "cannot grow polynomial dimension by restriction");
  }
  MultiPoly out(new_dimension);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = new_dimension; i < dimension_; ++i) {
      if (m[i] != 0) throw Error(ErrorCode::DimensionMismatch, "restriction drops a variable in use");
    }
    out.terms_.emplace(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(new_dimension)), c);
  }
  return out;
}

MultiPoly MultiPoly::slice(std::size_t index, Exponent exponent) const {
  MultiPoly out(dimension_);
  for (const auto& [m, c] : terms_) {
    if (m[index] != exponent) continue;
    Monomial reduced = m;
    reduced[index] = 0;
    out.terms_.emplace(std::move(reduced), c);
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly out = constant(dimension_, 1);
  for (unsigned k = 0; k < e; ++k) {
    if (out.is_zero()) break;
    out = out * *this;
  }
  return out;
}

void MultiPoly::require_same_dimension(const MultiPoly& other) const {
  if (dimension_ != other.dimension_) {
    throw Error(ErrorCode::DimensionMismatch, "polynomials live in different dimensions");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_dimension(b);
  MultiPoly out(a.dimension_);
  MultiPoly::Monomial scratch(a.dimension_);
  Rational product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < scratch.size(); ++i) scratch[i] = ma[i] + mb[i];
      product = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(scratch, product);
      if (!inserted) it->second += product;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string to_string(const MultiPoly& p, const std::string& variable_prefix) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool constant_term = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += variable_prefix + std::to_string(i + 1);
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (constant_term) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

}  // namespace scst
