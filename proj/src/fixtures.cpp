#include <regex>

#include "scst/errors.hpp"
#include "scst/manifold.hpp"

namespace scst {

FourManifold make_elliptic_surface(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "E(n) needs n >= 2");
  FourManifold m;
  m.name = "E" + std::to_string(n);
  m.euler = 12LL * n;
  m.signature = -8LL * n;
  // Even n: the form is even and f is an isotropic vector of an H summand.
  // Odd n: the form is odd; f = (1,1) in a diag(1,1) summand is characteristic.
  if (n % 2 == 0) {
    m.lattice = IntersectionLattice::parse(std::to_string(n) + "E8+" + std::to_string(2 * n - 1) + "H");
    m.fiber = unit_class(m.lattice.rank(), 8 * static_cast<std::size_t>(n));
  } else {
    m.lattice = IntersectionLattice::parse(std::to_string(n) + "E8+" + std::to_string(2 * n - 2) + "H+diag(1,1)");
    const std::size_t r = m.lattice.rank();
    CohClass f = zero_class(r);
    f[r - 2] = 1;
    f[r - 1] = 1;
    m.fiber = f;
  }
  m.w = characteristic_vector(m.lattice);
  // SW' coefficients of (t - t^{-1})^{n-2}: classes (2j - (n-2)) f.
  for (int j = 0; j <= n - 2; ++j) {
    Integer value = binomial(n - 2, j);
    if (j % 2) value = -value;
    m.sw.emplace(Rational(2 * j - (n - 2)) * *m.fiber, value);
  }
  return m;
}

FourManifold make_abstract_Xq(int q) {
  if (q < 2) throw Error(ErrorCode::InvalidInput, "X_q needs q >= 2");
  // e = 11q + 3 and sigma = -7q - 3 give chi_h = q, c1^2 = q - 3, b+ = 2q - 1.
  // The lattice a<+1> + <-1> + c E8 + d H keeps K supported on few coordinates.
  const int c = (7 * q + 2 + 7) / 8;
  const int a = 8 * c - 7 * q - 2;
  const int d = 9 * q + 1 - 8 * c;
  FourManifold m;
  m.name = "Xq" + std::to_string(q);
  m.euler = 11LL * q + 3;
  m.signature = -7LL * q - 3;
  m.lattice = IntersectionLattice::parse("diag(" + std::to_string(a) + ",1)+" + std::to_string(c) + "E8+" +
                                         std::to_string(d) + "H");
  CohClass k = zero_class(m.lattice.rank());
  for (int i = 0; i <= a; ++i) k[i] = 1;
  // Remaining square q - 3 - (a - 1) = 8s comes from (2, 2s) in the first H.
  const int s = (q - 2 - a) / 8;
  if (s > 0) {
    const std::size_t h = static_cast<std::size_t>(a + 1 + 8 * c);
    k[h] = 2;
    k[h + 1] = 2 * s;
  }
  m.w = characteristic_vector(m.lattice);
  m.sw.emplace(k, 1);
  m.sw.emplace(-k, q % 2 ? -1 : 1);
  return m;
}

FourManifold make_synthetic_nonscst() {
  FourManifold m;
  m.name = "Synthetic";
  m.euler = 27;
  m.signature = -19;
  m.lattice = IntersectionLattice::parse("diag(0,3)+2E8+3H");
  CohClass k = zero_class(m.lattice.rank());
  k[0] = k[1] = k[2] = 1;
  m.w = characteristic_vector(m.lattice);
  m.sw.emplace(k, 1);
  m.sw.emplace(-k, 1);
  return m;
}

FourManifold make_builtin(const std::string& name) {
  static const std::regex pattern(R"(^(K3|E([0-9]+)|Xq([0-9]+))(\.bu([0-9]+))?$)");
  std::smatch match;
  if (!std::regex_match(name, match, pattern)) {
    throw Error(ErrorCode::InvalidInput, "unknown builtin fixture '" + name + "'");
  }
  FourManifold base;
  if (match[1] == "K3") {
    base = make_elliptic_surface(2);
    base.name = "K3";
  } else if (match[2].matched) {
    int n = std::stoi(match[2].str());
    if (n < 2 || n > 40) throw Error(ErrorCode::InvalidInput, "E(n) builtins need 2 <= n <= 40");
    base = make_elliptic_surface(n);
  } else {
    int q = std::stoi(match[3].str());
    if (q < 2 || q > 40) throw Error(ErrorCode::InvalidInput, "Xq builtins need 2 <= q <= 40");
    base = make_abstract_Xq(q);
  }
  if (!match[5].matched) return base;
  int r = std::stoi(match[5].str());
  if (r < 1 || r > 8) throw Error(ErrorCode::InvalidInput, "builtin blow-up count must be 1..8");
  return blow_up(base, r);
}

std::vector<std::string> builtin_catalog() {
  return {"K3", "E3", "E4", "E5", "E6", "E7", "E8", "Xq2", "Xq3", "Xq4", "Xq5", "K3.bu2", "E4.bu1", "Xq2.bu1"};
}

}  // namespace scst
