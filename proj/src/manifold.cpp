#include "scst/manifold.hpp"

#include <regex>

#include "scst/errors.hpp"

namespace scst {

CharNumbers char_numbers(const FourManifold& m) {
  if ((m.euler + m.signature) % 4 != 0) {
    throw Error(ErrorCode::NonIntegralChiH, "e + sigma = " + std::to_string(m.euler + m.signature) +
                                                " is not divisible by 4");
  }
  CharNumbers out;
  out.c1sq = 2 * m.euler + 3 * m.signature;
  out.chi_h = (m.euler + m.signature) / 4;
  out.c = out.chi_h - out.c1sq;
  return out;
}

std::optional<long> b_plus(const FourManifold& m) {
  long twice = m.euler + m.signature - 2;
  if (twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

StandardCheck is_standard(const FourManifold& m) {
  StandardCheck out;
  auto bp = b_plus(m);
  if (!bp) {
    out.reasons.push_back("b+ = (e + sigma - 2)/2 is not an integer");
  } else {
    if (*bp < 3) out.reasons.push_back("b+ = " + std::to_string(*bp) + " is less than 3");
    if (*bp % 2 == 0) out.reasons.push_back("b+ = " + std::to_string(*bp) + " is even");
  }
  if ((m.euler + m.signature) % 4 != 0) out.reasons.push_back("chi_h = (e + sigma)/4 is not an integer");
  out.standard = out.reasons.empty();
  return out;
}

bool is_simple_type(const FourManifold& m) {
  const long c1sq = 2 * m.euler + 3 * m.signature;
  for (const auto& [k, value] : m.sw) {
    if (m.lattice.square(k) != c1sq) return false;
  }
  return true;
}

bool sw_symmetry_check(const FourManifold& m) {
  if ((m.euler + m.signature) % 4 != 0) return false;
  const int sign = neg_one_pow((m.euler + m.signature) / 4);
  for (const auto& [k, value] : m.sw) {
    auto it = m.sw.find(-k);
    if (it == m.sw.end() || it->second != sign * value) return false;
  }
  return true;
}

CohClass default_w(const FourManifold& m) {
  return m.w ? *m.w : characteristic_vector(m.lattice);
}

std::size_t count_up_to_sign(const BasicClassTable& table) {
  std::size_t count = 0;
  for (const auto& [k, value] : table) {
    CohClass neg = -k;
    // Count each orbit once: the class itself when it is fixed, else the larger of the pair.
    if (k == neg || !table.contains(neg) || neg < k) ++count;
  }
  return count;
}

namespace {

std::string blown_up_name(const std::string& name) {
  static const std::regex suffix(R"(^(.*)\.bu([0-9]+)$)");
  std::smatch match;
  if (std::regex_match(name, match, suffix)) {
    return match[1].str() + ".bu" + std::to_string(std::stoi(match[2].str()) + 1);
  }
  return name + ".bu1";
}

}  // namespace

FourManifold blow_up(const FourManifold& m) {
  auto grown = blow_up_lattice(m.lattice);
  const std::size_t rank = grown.lattice.rank();
  FourManifold out;
  out.name = blown_up_name(m.name);
  out.euler = m.euler + 1;
  out.signature = m.signature - 1;
  for (const auto& [k, value] : m.sw) {
    CohClass base = extend_class(k, rank);
    out.sw.emplace(base + grown.exceptional, value);
    out.sw.emplace(base - grown.exceptional, value);
  }
  out.w = extend_class(default_w(m), rank) - grown.exceptional;
  if (m.fiber) out.fiber = extend_class(*m.fiber, rank);
  out.lattice = std::move(grown.lattice);
  return out;
}

FourManifold blow_up(const FourManifold& m, int times) {
  if (times < 0) throw Error(ErrorCode::InvalidInput, "blow-up count must be non-negative");
  FourManifold out = m;
  for (int r = 0; r < times; ++r) out = blow_up(out);
  return out;
}

CohClass exceptional_class(const FourManifold& blown_up) {
  return unit_class(blown_up.lattice.rank(), blown_up.lattice.rank() - 1);
}

}  // namespace scst
