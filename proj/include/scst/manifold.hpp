#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scst/lattice.hpp"

namespace scst {

/// K -> SW'(K). Only nonzero values are basic classes.
using BasicClassTable = std::map<CohClass, Integer>;

struct FourManifold {
  std::string name;
  long euler = 0;
  long signature = 0;
  IntersectionLattice lattice;
  BasicClassTable sw;
  /// Preferred characteristic class for SW series; characteristic_vector when unset.
  std::optional<CohClass> w;
  /// Square-zero class the table is built on (elliptic fixtures only).
  std::optional<CohClass> fiber;

  friend bool operator==(const FourManifold&, const FourManifold&) = default;
};

struct CharNumbers {
  long c1sq = 0;
  long chi_h = 0;
  long c = 0;
};

/// Throws NonIntegralChiH when e + sigma is not divisible by 4.
CharNumbers char_numbers(const FourManifold& m);

struct StandardCheck {
  bool standard = false;
  std::vector<std::string> reasons;  // empty when standard
};
StandardCheck is_standard(const FourManifold& m);

/// (e + sigma - 2) / 2; nullopt when that is not an integer.
std::optional<long> b_plus(const FourManifold& m);

bool is_simple_type(const FourManifold& m);
/// SW'(-K) = (-1)^chi_h SW'(K) for every entry, including absent ones as zero.
bool sw_symmetry_check(const FourManifold& m);

/// The class used when the caller gives none.
CohClass default_w(const FourManifold& m);

/// Number of classes modulo K ~ -K.
std::size_t count_up_to_sign(const BasicClassTable& table);

/// One blow-up. The exceptional class e* is the new last basis vector; the
/// table becomes {K +- e*} with values copied and w becomes w - e*.
FourManifold blow_up(const FourManifold& m);
FourManifold blow_up(const FourManifold& m, int times);
CohClass exceptional_class(const FourManifold& blown_up);

/// Elliptic surface model E(n), n >= 2.
FourManifold make_elliptic_surface(int n);
/// A model with chi_h = q, c = 3, B = {+-K}, K != 0; q >= 2.
FourManifold make_abstract_Xq(int q);
/// Standard simple-type table with c = 5 that is not SCST (SW^{w,1} != 0).
FourManifold make_synthetic_nonscst();

/// Builtin names: K3, E<n>, Xq<q>, each optionally followed by ".bu<r>" for
/// r blow-ups. Throws InvalidInput for unknown names.
FourManifold make_builtin(const std::string& name);
/// The registry the CLI acceptance sweep runs over.
std::vector<std::string> builtin_catalog();

}  // namespace scst
