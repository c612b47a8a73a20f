#include "scst/symmetric.hpp"

#include <algorithm>

#include "scst/errors.hpp"

namespace scst {

namespace {

// Multiplicity of each basis index in a sorted tuple.
std::map<std::uint32_t, unsigned> multiplicities(const SymMultilinear::Index& index) {
  std::map<std::uint32_t, unsigned> out;
  for (auto i : index) ++out[i];
  return out;
}

Integer orderings(const SymMultilinear::Index& index) {
  std::vector<unsigned> parts;
  for (const auto& [i, k] : multiplicities(index)) parts.push_back(k);
  return multinomial(parts);
}

}  // namespace

SymMultilinear::SymMultilinear(std::size_t dimension, unsigned degree)
    : dimension_(dimension), degree_(degree) {}

SymMultilinear SymMultilinear::scalar(std::size_t dimension, const Rational& value) {
  SymMultilinear m(dimension, 0);
  m.set({}, value);
  return m;
}

SymMultilinear SymMultilinear::covector(std::span<const Rational> values) {
  SymMultilinear m(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) m.set({static_cast<std::uint32_t>(i)}, values[i]);
  return m;
}

SymMultilinear SymMultilinear::bilinear(const RationalMatrix& gram) {
  SymMultilinear m(gram.size(), 2);
  for (std::size_t i = 0; i < gram.size(); ++i) {
    for (std::size_t j = i; j < gram.size(); ++j) {
      if (gram[i][j] != gram[j][i]) {
        throw Error(ErrorCode::InvalidInput, "bilinear form matrix is not symmetric");
      }
      m.set({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, gram[i][j]);
    }
  }
  return m;
}

Rational SymMultilinear::at(Index index) const {
  std::sort(index.begin(), index.end());
  auto it = entries_.find(index);
  return it == entries_.end() ? Rational(0) : it->second;
}

void SymMultilinear::set(Index index, const Rational& value) {
  if (index.size() != degree_) {
    throw Error(ErrorCode::DimensionMismatch, "index tuple length differs from form degree");
  }
  for (auto i : index) {
    if (i >= dimension_) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  }
  std::sort(index.begin(), index.end());
  if (value == 0) {
    entries_.erase(index);
  } else {
    entries_[index] = value;
  }
}

Rational SymMultilinear::operator()(std::span<const RationalVector> vectors) const {
  if (vectors.size() != degree_) {
    throw Error(ErrorCode::DimensionMismatch, "wrong number of arguments for multilinear form");
  }
  for (const auto& v : vectors) {
    if (v.size() != dimension_) throw Error(ErrorCode::DimensionMismatch, "argument has wrong length");
  }
  // Expand every argument in the basis; sum over all ordered index tuples.
  Rational total = 0;
  Index index(degree_, 0);
  auto recurse = [&](auto&& self, unsigned slot, const Rational& weight) -> void {
    if (slot == degree_) {
      total += weight * at(index);
      return;
    }
    for (std::uint32_t i = 0; i < dimension_; ++i) {
      if (vectors[slot][i] == 0) continue;
      index[slot] = i;
      self(self, slot + 1, weight * vectors[slot][i]);
    }
  };
  recurse(recurse, 0, Rational(1));
  return total;
}

MultiPoly polarize(const SymMultilinear& m) {
  MultiPoly p(m.dimension());
  for (const auto& [index, value] : m.entries()) {
    MultiPoly::Monomial mono(m.dimension(), 0);
    for (auto i : index) ++mono[i];
    p.add_term(mono, value * orderings(index));
  }
  return p;
}

SymMultilinear depolarize(const MultiPoly& p, unsigned degree) {
  if (!p.is_homogeneous(static_cast<int>(degree))) {
    throw Error(ErrorCode::NonHomogeneous,
                "polynomial is not homogeneous of degree " + std::to_string(degree));
  }
  SymMultilinear m(p.dimension(), degree);
  for (const auto& [mono, c] : p.terms()) {
    SymMultilinear::Index index;
    for (std::size_t i = 0; i < mono.size(); ++i) index.insert(index.end(), mono[i], static_cast<std::uint32_t>(i));
    Rational value = c / Rational(orderings(index));
    m.set(index, value);
  }
  return m;
}

SymMultilinear sym_product(const SymMultilinear& a, const SymMultilinear& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "symmetric product of forms on different spaces");
  }
  const unsigned d = a.degree() + b.degree();
  // Averaging over permutations groups by the set of argument positions fed to
  // `a`; each set occurs d1! d2! times, hence the 1 / binom(d, d1) weight.
  const Rational weight(Integer(1), binomial(d, a.degree()));
  std::map<SymMultilinear::Index, Rational> acc;
  for (const auto& [ia, va] : a.entries()) {
    auto mult_a = multiplicities(ia);
    for (const auto& [ib, vb] : b.entries()) {
      SymMultilinear::Index merged;
      merged.reserve(d);
      std::merge(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(merged));
      // Number of position subsets of `merged` carrying exactly the multiset ia.
      Integer splits = 1;
      for (const auto& [i, k] : multiplicities(merged)) {
        auto it = mult_a.find(i);
        splits *= binomial(k, it == mult_a.end() ? 0 : it->second);
      }
      acc[merged] += va * vb * splits;
    }
  }
  SymMultilinear out(a.dimension(), d);
  for (auto& [index, value] : acc) {
    if (value != 0) out.set(index, value * weight);
  }
  return out;
}

SymMultilinear sym_power(const SymMultilinear& m, unsigned ell) {
  SymMultilinear out = SymMultilinear::scalar(m.dimension(), 1);
  for (unsigned k = 0; k < ell; ++k) out = sym_product(out, m);
  return out;
}

}  // namespace scst
