#include "scst/lattice.hpp"

#include <algorithm>
#include <cctype>

#include "scst/errors.hpp"
#include "scst/linalg.hpp"

namespace scst {

bool is_integral(const CohClass& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return is_integer(x); });
}

CohClass zero_class(std::size_t rank) { return CohClass(rank, Rational(0)); }

CohClass unit_class(std::size_t rank, std::size_t index) {
  CohClass e = zero_class(rank);
  e.at(index) = 1;
  return e;
}

namespace {

void require_same_length(const CohClass& a, const CohClass& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "classes have different lengths");
}

}  // namespace

CohClass operator+(const CohClass& a, const CohClass& b) {
  require_same_length(a, b);
  CohClass out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

CohClass operator-(const CohClass& a, const CohClass& b) {
  require_same_length(a, b);
  CohClass out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

CohClass operator-(const CohClass& a) {
  CohClass out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

CohClass operator*(const Rational& s, const CohClass& a) {
  CohClass out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

Mod2Class reduce_mod2(const CohClass& a) {
  Mod2Class out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_integer(a[i])) throw Error(ErrorCode::InvalidInput, "cannot reduce a rational class mod 2");
    Integer r = a[i].get_num() % 2;
    out[i] = r != 0 ? 1 : 0;
  }
  return out;
}

std::string to_string(const CohClass& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += to_string(a[i]);
  }
  return out + ")";
}

namespace {

// Negative definite E8: minus the Cartan matrix of the Dynkin diagram with a
// chain 0-1-2-3-4-5-6 and node 7 attached to node 4.
Gram e8_block() {
  Gram g(8, std::vector<std::int64_t>(8, 0));
  for (int i = 0; i < 8; ++i) g[i][i] = -2;
  auto edge = [&](int a, int b) { g[a][b] = g[b][a] = 1; };
  for (int i = 0; i < 6; ++i) edge(i, i + 1);
  edge(4, 7);
  return g;
}

struct Summand {
  Gram block;
  int b_plus;
  std::string kind;
};

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  std::vector<Summand> parse() {
    std::vector<Summand> out;
    if (text_.empty()) fail("empty lattice descriptor");
    while (true) {
      long count = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) count = number();
      Summand s = atom();
      for (long k = 0; k < count; ++k) out.push_back(s);
      if (pos_ == text_.size()) break;
      expect('+');
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::InvalidInput,
                "bad lattice descriptor '" + std::string(text_) + "': " + what);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "' at position " + std::to_string(pos_));
    ++pos_;
  }

  long number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number at position " + std::to_string(pos_));
    if (pos_ - start > 6) fail("count too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Summand atom() {
    if (text_.substr(pos_, 2) == "E8") {
      pos_ += 2;
      return {e8_block(), 0, "E8"};
    }
    if (peek() == 'H') {
      ++pos_;
      return {{{0, 1}, {1, 0}}, 1, "H"};
    }
    if (text_.substr(pos_, 5) == "diag(") {
      pos_ += 5;
      long p = number();
      expect(',');
      long q = number();
      expect(')');
      if (p + q == 0) fail("diag(0,0) is empty");
      Gram g(p + q, std::vector<std::int64_t>(p + q, 0));
      for (long i = 0; i < p + q; ++i) g[i][i] = i < p ? 1 : -1;
      return {std::move(g), static_cast<int>(p), "diag"};
    }
    fail("unknown summand at position " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

RationalMatrix to_rational(const Gram& g) {
  RationalMatrix out(g.size(), RationalVector(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i][j] = static_cast<long>(g[i][j]);
  return out;
}

}  // namespace

IntersectionLattice::IntersectionLattice(Gram gram, std::string descriptor, std::vector<std::string> labels)
    : gram_(std::move(gram)),
      rational_(to_rational(gram_)),
      descriptor_(std::move(descriptor)),
      labels_(std::move(labels)) {}

IntersectionLattice IntersectionLattice::parse(std::string_view descriptor) {
  std::string compact;
  for (char ch : descriptor) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  auto summands = DescriptorParser(compact).parse();
  std::size_t rank = 0;
  for (const auto& s : summands) rank += s.block.size();
  Gram g(rank, std::vector<std::int64_t>(rank, 0));
  std::vector<std::string> labels;
  int b_plus = 0;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const auto& s = summands[k];
    for (std::size_t i = 0; i < s.block.size(); ++i) {
      for (std::size_t j = 0; j < s.block.size(); ++j) g[offset + i][offset + j] = s.block[i][j];
      labels.push_back(s.kind + "[" + std::to_string(k) + "]." + std::to_string(i + 1));
    }
    b_plus += s.b_plus;
    offset += s.block.size();
  }
  IntersectionLattice out(std::move(g), std::move(compact), std::move(labels));
  out.b_plus_ = b_plus;
  return out;
}

IntersectionLattice IntersectionLattice::from_gram(Gram gram) {
  const std::size_t n = gram.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "gram matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw Error(ErrorCode::InvalidInput, "gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram[i][j] != gram[j][i]) throw Error(ErrorCode::InvalidInput, "gram matrix is not symmetric");
    }
  }
  Integer det = linalg::determinant(gram);
  if (abs(det) != 1) {
    throw Error(ErrorCode::InvalidInput, "gram matrix is not unimodular (det " + to_string(det) + ")");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  IntersectionLattice out(std::move(gram), "", std::move(labels));
  auto diag = linalg::diagonalize(out.rational_);
  out.b_plus_ = static_cast<int>(std::count_if(diag.values.begin(), diag.values.end(),
                                               [](const Rational& d) { return d > 0; }));
  return out;
}

bool IntersectionLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    if (gram_[i][i] % 2 != 0) return false;
  }
  return true;
}

Rational IntersectionLattice::pair(const CohClass& a, const CohClass& b) const {
  if (a.size() != rank() || b.size() != rank()) {
    throw Error(ErrorCode::DimensionMismatch, "class length does not match lattice rank");
  }
  Rational out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (gram_[i][j] != 0 && b[j] != 0) row += b[j] * static_cast<long>(gram_[i][j]);
    }
    out += a[i] * row;
  }
  return out;
}

RationalVector IntersectionLattice::covector(const CohClass& a) const {
  if (a.size() != rank()) throw Error(ErrorCode::DimensionMismatch, "class length does not match lattice rank");
  RationalVector out(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    for (std::size_t i = 0; i < rank(); ++i) {
      if (gram_[i][j] != 0 && a[i] != 0) out[j] += a[i] * static_cast<long>(gram_[i][j]);
    }
  }
  return out;
}

IntersectionLattice IntersectionLattice::with_minus_one() const {
  const std::size_t n = rank();
  Gram g = gram_;
  for (auto& row : g) row.push_back(0);
  g.emplace_back(n + 1, 0);
  g[n][n] = -1;
  std::vector<std::string> labels = labels_;
  labels.push_back("e*" + std::to_string(std::count_if(labels_.begin(), labels_.end(), [](const std::string& s) {
                                              return s.rfind("e*", 0) == 0;
                                            }) + 1));
  std::string descriptor = descriptor_.empty() ? "" : descriptor_ + "+diag(0,1)";
  IntersectionLattice out(std::move(g), std::move(descriptor), std::move(labels));
  out.b_plus_ = b_plus_;
  return out;
}

bool is_characteristic(const IntersectionLattice& lattice, const CohClass& w) {
  if (w.size() != lattice.rank() || !is_integral(w)) return false;
  const auto& g = lattice.gram();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    Integer dot = 0;
    for (std::size_t j = 0; j < lattice.rank(); ++j) {
      if (g[i][j] != 0) dot += w[j].get_num() * static_cast<long>(g[i][j]);
    }
    Integer diff = dot - static_cast<long>(g[i][i]);
    if (diff % 2 != 0) return false;
  }
  return true;
}

bool characteristic_defect_check(const IntersectionLattice& lattice, const CohClass& w) {
  if (!is_characteristic(lattice, w)) {
    throw Error(ErrorCode::NotCharacteristic, "class " + to_string(w) + " is not characteristic");
  }
  Integer diff = lattice.square(w).get_num() - lattice.signature();
  return diff % 8 == 0;
}

CohClass characteristic_vector(const IntersectionLattice& lattice) {
  // Solve G w = diag(G) over Z/2; G is invertible mod 2.
  const std::size_t n = lattice.rank();
  const auto& g = lattice.gram();
  std::vector<std::vector<std::uint8_t>> a(n, std::vector<std::uint8_t>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<std::uint8_t>(mod_floor(g[i][j], 2));
    a[i][n] = static_cast<std::uint8_t>(mod_floor(g[i][i], 2));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && a[pick][col] == 0) ++pick;
    if (pick == n) throw Error(ErrorCode::InvalidInput, "form is singular mod 2");
    std::swap(a[col], a[pick]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      for (std::size_t c = col; c <= n; ++c) a[r][c] ^= a[col][c];
    }
  }
  CohClass w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = a[i][n];
  return w;
}

Mod2Class second_stiefel_whitney(const IntersectionLattice& lattice) {
  return reduce_mod2(characteristic_vector(lattice));
}

LatticeBlowUp blow_up_lattice(const IntersectionLattice& lattice) {
  auto grown = lattice.with_minus_one();
  CohClass e = unit_class(grown.rank(), grown.rank() - 1);
  return {std::move(grown), std::move(e)};
}

CohClass extend_class(const CohClass& a, std::size_t rank) {
  if (rank < a.size()) throw Error(ErrorCode::DimensionMismatch, "cannot shrink a class");
  CohClass out = a;
  out.resize(rank, Rational(0));
  return out;
}

CohClass find_dual_basis_vector(const IntersectionLattice& lattice,
                                const std::vector<PairingConstraint>& constraints,
                                bool require_positive_square) {
  const std::size_t n = lattice.rank();
  RationalMatrix rows;
  RationalVector rhs;
  for (const auto& [c, v] : constraints) {
    rows.push_back(lattice.covector(c));
    rhs.push_back(v);
  }
  auto particular = linalg::solve(rows, rhs, n);
  if (!particular) throw Error(ErrorCode::Infeasible, "pairing constraints are inconsistent");
  CohClass h = *particular;
  if (!require_positive_square || lattice.square(h) > 0) return h;

  auto kernel = linalg::kernel(rows, n);
  const auto& q = lattice.rational_gram();
  RationalMatrix restricted(kernel.size(), RationalVector(kernel.size()));
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < kernel.size(); ++j) restricted[i][j] = linalg::bilinear(q, kernel[i], kernel[j]);
  auto diag = linalg::diagonalize(restricted);

  // Express each diagonal basis vector back in lattice coordinates.
  std::vector<CohClass> directions;
  for (const auto& b : diag.basis) {
    CohClass u = zero_class(n);
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      if (b[j] != 0) u = u + b[j] * kernel[j];
    }
    directions.push_back(std::move(u));
  }

  const Rational q0 = lattice.square(h);
  for (std::size_t j = 0; j < directions.size(); ++j) {
    if (diag.values[j] > 0) {
      // Q(h + t u) = q0 + 2 t B + t^2 d is positive for this t.
      Rational b = abs(lattice.pair(h, directions[j]));
      Rational t = (2 * b + abs(q0)) / diag.values[j] + 1;
      return h + t * directions[j];
    }
  }
  for (std::size_t j = 0; j < directions.size(); ++j) {
    if (diag.values[j] != 0) continue;
    Rational b = lattice.pair(h, directions[j]);
    if (b != 0) return h + ((1 - q0) / (2 * b)) * directions[j];
  }
  // Q is negative semidefinite on the kernel; the maximum over h + kernel is at h*.
  CohClass best = h;
  for (std::size_t j = 0; j < directions.size(); ++j) {
    if (diag.values[j] < 0) best = best - (lattice.pair(h, directions[j]) / diag.values[j]) * directions[j];
  }
  if (lattice.square(best) > 0) return best;
  throw Error(ErrorCode::Infeasible, "no solution of the constraints has positive square");
}

}  // namespace scst
