#include "scst/report.hpp"

namespace scst {

using nlohmann::json;

json to_json(const Report& r) {
  json out;
  out["schema"] = kReportSchema;
  out["command"] = r.command;
  out["input"] = r.input;
  out["input_digest"] = r.input_digest;
  out["results"] = r.results;
  out["warnings"] = r.warnings;
  out["exit_status"] = r.exit_status;
  return out;
}

std::string render_text(const Report& r) {
  std::string out;
  for (const auto& line : r.text) out += line + "\n";
  for (const auto& w : r.warnings) out += "warning: " + w + "\n";
  return out;
}

json class_json(const CohClass& a) {
  json out = json::array();
  for (const auto& x : a) out.push_back(to_string(x));
  return out;
}

json poly_json(const MultiPoly& p) {
  json out = json::array();
  for (const auto& [mono, c] : p.terms()) {
    json factors = json::array();
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i]) factors.push_back(json::array({i + 1, mono[i]}));
    }
    out.push_back(json{{"coefficient", to_string(c)}, {"factors", std::move(factors)}});
  }
  return out;
}

json char_numbers_json(const CharNumbers& n) {
  return json{{"c1sq", n.c1sq}, {"chi_h", n.chi_h}, {"c", n.c}};
}

json verdict_json(const ScstVerdict& v) {
  json out{{"holds", v.holds}, {"reason", to_string(v.reason)}};
  if (v.degree) out["degree"] = *v.degree;
  if (v.witness) out["witness"] = poly_json(*v.witness);
  return out;
}

json coefficient_json(const CoefficientValue& c) {
  json out{{"status", to_string(c.status)}, {"rule", c.rule}};
  if (c.status == CoefficientStatus::KnownValue) out["value"] = to_string(c.value);
  return out;
}

json params_json(const RelationParams& p) {
  return json{{"n", p.n},     {"m", p.m},         {"v", p.v},     {"c", p.c},
              {"chi_h", p.chi_h}, {"A", p.A}, {"delta", p.delta}, {"ell", p.ell}};
}

json relation_json(const VanishingRelation& rel, const RelationCheck& check) {
  json terms = json::array();
  for (const auto& t : rel.terms) {
    json term{{"k", t.k},
              {"sw_degree", t.sw_degree},
              {"q_power", t.q_power},
              {"coefficient", coefficient_json(t.coefficient)},
              {"sw_evaluated", t.sw_evaluated}};
    if (t.sw_evaluated) term["sw_zero"] = t.sw.is_zero();
    terms.push_back(std::move(term));
  }
  return json{{"manifold", rel.manifold},
              {"params", params_json(rel.params)},
              {"terms", std::move(terms)},
              {"verdict", to_string(check.verdict)},
              {"reason", check.reason},
              {"nonzero_terms", check.nonzero_terms}};
}

json certificate_json(const ReplayCertificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    json terms = json::array();
    for (const auto& t : s.terms) {
      terms.push_back(json{{"k", t.k},
                           {"sw_degree", t.sw_degree},
                           {"q_power", t.q_power},
                           {"rule", to_string(t.rule)},
                           {"coefficient", coefficient_json(t.coefficient)},
                           {"sw_zero", t.sw_zero}});
    }
    steps.push_back(json{{"v", s.v},
                         {"params", params_json(s.params)},
                         {"terms", std::move(terms)},
                         {"concluded_zero_degree", s.concluded_degree},
                         {"relation_verdict", to_string(s.relation_verdict)},
                         {"verified", s.verified},
                         {"note", s.note}});
  }
  json out{{"manifold", cert.manifold},
           {"numbers", char_numbers_json(cert.numbers)},
           {"steps", std::move(steps)},
           {"verified", cert.verified}};
  if (cert.failed_v) out["failed_v"] = *cert.failed_v;
  return out;
}

json donaldson_json(const DonaldsonSeries& s) {
  json terms = json::array();
  for (const auto& t : s.terms) {
    terms.push_back(json{{"i", t.i}, {"k", t.k}, {"coefficient", to_string(t.coefficient)}, {"sw", poly_json(t.sw)}});
  }
  return json{{"manifold", s.manifold},
              {"delta", s.delta},
              {"m", s.m},
              {"gate_open", s.gate_open},
              {"prefactor", to_string(s.prefactor)},
              {"terms", std::move(terms)},
              {"rendered", s.render()}};
}

}  // namespace scst
