#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "scst/donaldson.hpp"
#include "scst/relation.hpp"
#include "scst/swseries.hpp"

namespace scst {

inline constexpr int kReportSchema = 1;

struct Report {
  std::string command;
  std::string input;
  std::string input_digest;
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> warnings;
  int exit_status = 0;
  std::vector<std::string> text;  // human-readable lines
};

nlohmann::json to_json(const Report& r);
std::string render_text(const Report& r);

// JSON views of library results. Rationals are decimal strings.
nlohmann::json class_json(const CohClass& a);
/// [{"coefficient": "p/q", "factors": [[variable (1-based), exponent], ...]}, ...]
nlohmann::json poly_json(const MultiPoly& p);
nlohmann::json char_numbers_json(const CharNumbers& n);
nlohmann::json verdict_json(const ScstVerdict& v);
nlohmann::json coefficient_json(const CoefficientValue& c);
nlohmann::json params_json(const RelationParams& p);
nlohmann::json relation_json(const VanishingRelation& rel, const RelationCheck& check);
nlohmann::json certificate_json(const ReplayCertificate& cert);
nlohmann::json donaldson_json(const DonaldsonSeries& s);

}  // namespace scst
