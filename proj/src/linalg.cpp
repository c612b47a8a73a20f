#include "scst/linalg.hpp"

#include <utility>

namespace scst::linalg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
    std::size_t pick = row;
    while (pick < a.size() && a[pick][col] == 0) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[row], a[pick]);
    Rational inv = 1 / a[row][col];
    for (std::size_t c = col; c < columns; ++c) a[row][c] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = col; c < columns; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix a) {
  if (a.empty()) return 0;
  std::size_t columns = a.front().size();
  return rref(a, columns).size();
}

std::vector<RationalVector> kernel(const RationalMatrix& a, std::size_t columns) {
  RationalMatrix m = a;
  auto pivots = rref(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b,
                                    std::size_t columns) {
  RationalMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto pivots = rref(aug, columns + 1);
  RationalVector x(columns, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == columns) return std::nullopt;
    x[pivots[r]] = aug[r][columns];
  }
  return x;
}

Diagonalization diagonalize(const RationalMatrix& s) {
  const std::size_t n = s.size();
  RationalMatrix t = s;  // t = B^T s B, kept in sync with the basis
  std::vector<RationalVector> basis(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;

  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(basis[i], basis[j]);
    std::swap(t[i], t[j]);
    for (auto& row : t) std::swap(row[i], row[j]);
  };
  // basis[j] += f * basis[i]
  auto add_multiple = [&](std::size_t j, std::size_t i, const Rational& f) {
    for (std::size_t c = 0; c < n; ++c) basis[j][c] += f * basis[i][c];
    for (std::size_t c = 0; c < n; ++c) t[j][c] += f * t[i][c];
    for (std::size_t r = 0; r < n; ++r) t[r][j] += f * t[r][i];
  };

  for (std::size_t p = 0; p < n; ++p) {
    if (t[p][p] == 0) {
      std::size_t j = p + 1;
      while (j < n && t[j][j] == 0) ++j;
      if (j < n) {
        swap_index(p, j);
      } else {
        j = p + 1;
        while (j < n && t[p][j] == 0) ++j;
        if (j == n) continue;  // p is orthogonal to everything left
        add_multiple(p, j, 1);  // t[p][p] becomes 2 t[p][j] != 0
      }
    }
    for (std::size_t j = p + 1; j < n; ++j) {
      if (t[p][j] == 0) continue;
      Rational f = -t[p][j] / t[p][p];
      add_multiple(j, p, f);
    }
  }
  Diagonalization out;
  out.basis = std::move(basis);
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.values.push_back(t[i][i]);
  return out;
}

Integer determinant(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) out += a[i] * b[i];
  }
  return out;
}

RationalVector mat_vec(const RationalMatrix& a, const RationalVector& x) {
  RationalVector out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(dot(row, x));
  return out;
}

Rational bilinear(const RationalMatrix& s, const RationalVector& x, const RationalVector& y) {
  return dot(x, mat_vec(s, y));
}

}  // namespace scst::linalg
