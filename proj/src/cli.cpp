#include "scst/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <sstream>

#include "scst/document.hpp"
#include "scst/errors.hpp"
#include "scst/report.hpp"

namespace scst {

using nlohmann::json;

namespace {

struct Options {
  std::string source;
  bool json = false;
  std::string w;
  std::string range;
  int times = 1;
  long delta = 0;
  long m = 0;
};

long parse_long(std::string_view text, const std::string& what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidInput, what + ": '" + std::string(text) + "' is not an integer");
  }
  return value;
}

CohClass parse_w(const std::string& text, const FourManifold& m) {
  if (text.empty()) return default_w(m);
  CohClass w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) w.emplace_back(parse_long(item, "--w"));
  if (w.size() != m.lattice.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "--w has " + std::to_string(w.size()) + " entries, lattice rank is " +
                                                  std::to_string(m.lattice.rank()));
  }
  return w;
}

std::pair<int, int> parse_range(const std::string& text, int fallback_high) {
  if (text.empty()) return {0, std::max(fallback_high, 0)};
  auto dots = text.find("..");
  long lo = parse_long(text.substr(0, dots), "--i");
  long hi = dots == std::string::npos ? lo : parse_long(text.substr(dots + 2), "--i");
  if (lo < 0 || hi < lo || hi > 200) throw Error(ErrorCode::InvalidInput, "--i needs 0 <= a <= b <= 200");
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

void require_characteristic(const FourManifold& m, const CohClass& w) {
  if (!is_characteristic(m.lattice, w)) {
    throw Error(ErrorCode::NotCharacteristic, "w = " + to_string(w) + " is not characteristic");
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void cmd_info(const FourManifold& m, Report& r) {
  const auto cn = char_numbers(m);
  const auto standard = is_standard(m);
  const auto bp = b_plus(m);
  const bool simple = is_simple_type(m);
  const bool symmetric = sw_symmetry_check(m);
  r.results = json{{"name", m.name},
                   {"euler", m.euler},
                   {"signature", m.signature},
                   {"rank", m.lattice.rank()},
                   {"b_plus", bp ? json(*bp) : json(nullptr)},
                   {"numbers", char_numbers_json(cn)},
                   {"standard", standard.standard},
                   {"standard_reasons", standard.reasons},
                   {"simple_type", simple},
                   {"sw_symmetric", symmetric},
                   {"basic_classes", m.sw.size()},
                   {"classes_up_to_sign", count_up_to_sign(m.sw)},
                   {"w", class_json(default_w(m))}};
  r.text.push_back("manifold      " + m.name);
  r.text.push_back("lattice       " + (m.lattice.descriptor().empty() ? "explicit gram" : m.lattice.descriptor()) +
                   " (rank " + std::to_string(m.lattice.rank()) + ")");
  r.text.push_back("e, sigma      " + std::to_string(m.euler) + ", " + std::to_string(m.signature));
  r.text.push_back("b+            " + (bp ? std::to_string(*bp) : std::string("not integral")));
  r.text.push_back("chi_h         " + std::to_string(cn.chi_h));
  r.text.push_back("c1^2          " + std::to_string(cn.c1sq));
  r.text.push_back("c             " + std::to_string(cn.c));
  std::string reasons;
  for (const auto& s : standard.reasons) reasons += "; " + s;
  r.text.push_back("standard      " + yes_no(standard.standard) + reasons);
  r.text.push_back("simple type   " + yes_no(simple));
  r.text.push_back("SW symmetry   " + yes_no(symmetric));
  r.text.push_back("basic classes " + std::to_string(m.sw.size()) + " (" + std::to_string(count_up_to_sign(m.sw)) +
                   " up to sign)");
}

void cmd_sw(const FourManifold& m, const Options& o, Report& r) {
  const CohClass w = parse_w(o.w, m);
  require_characteristic(m, w);
  const auto c = char_numbers(m).c;
  auto [lo, hi] = parse_range(o.range, static_cast<int>(c));
  json list = json::array();
  for (int i = lo; i <= hi; ++i) {
    const MultiPoly p = sw_polynomial(m, w, i).poly;
    const bool forced = (c + i) % 2 != 0;
    list.push_back(json{{"i", i}, {"zero", p.is_zero()}, {"parity_forced", forced}, {"terms", poly_json(p)}});
    std::string line = "SW^{w," + std::to_string(i) + "} = " + to_string(p, "h");
    if (forced) line += "   [parity forces 0]";
    r.text.push_back(line);
    if (forced && !p.is_zero()) {
      r.warnings.push_back("SW^{w," + std::to_string(i) + "} is nonzero although c + i is odd");
      r.exit_status = kExitViolated;
    }
  }
  r.results = json{{"w", class_json(w)}, {"c", c}, {"polynomials", std::move(list)}};
}

void cmd_scst(const FourManifold& m, const Options& o, Report& r) {
  const CohClass w = parse_w(o.w, m);
  const auto v = scst_check(m, w);
  r.results = verdict_json(v);
  r.results["c"] = char_numbers(m).c;
  std::string line = "SCST " + std::string(v.holds ? "holds" : "fails") + " (" + to_string(v.reason) + ")";
  if (v.degree) line += ": SW^{w," + std::to_string(*v.degree) + "} = " + to_string(*v.witness, "h");
  r.text.push_back(line);
  r.exit_status = v.holds ? kExitOk : kExitViolated;
}

void cmd_bound(const FourManifold& m, Report& r) {
  const auto b = basic_class_lower_bound(m);
  r.results = json{{"count", b.count}, {"bound", to_string(b.bound)}, {"satisfied", b.satisfied}};
  r.text.push_back("|B/{+-1}| = " + std::to_string(b.count) + ", c/2 = " + to_string(b.bound) + ": " +
                   (b.satisfied ? "satisfied" : "NOT satisfied"));
  if (b.warning) r.warnings.push_back(*b.warning);
  r.exit_status = b.satisfied ? kExitOk : kExitViolated;
}

void cmd_blowup(const FourManifold& m, const Options& o, Report& r) {
  if (o.times < 0 || o.times > 16) throw Error(ErrorCode::InvalidInput, "--times must be in 0..16");
  const FourManifold big = blow_up(m, o.times);
  const auto cn = char_numbers(big);
  r.results = json{{"times", o.times}, {"numbers", char_numbers_json(cn)}, {"document", to_json(big)}};
  r.text.push_back(big.name + ": c1^2 = " + std::to_string(cn.c1sq) + ", chi_h = " + std::to_string(cn.chi_h) +
                   ", c = " + std::to_string(cn.c) + ", " + std::to_string(big.sw.size()) + " basic classes");
  std::string doc = canonical_dump(big);
  doc.pop_back();
  r.text.push_back(doc);
}

void cmd_donaldson(const FourManifold& m, const Options& o, Report& r) {
  const CohClass w = parse_w(o.w, m);
  const auto s = witten_series(m, w, o.delta, o.m);
  r.results = donaldson_json(s);
  std::string lhs = "D(h^" + std::to_string(o.delta - 2 * o.m) + (o.m ? " x^" + std::to_string(o.m) : "") + ")";
  r.text.push_back(lhs + " = " + s.render());
  if (!s.gate_open) r.text.push_back("(delta is not congruent to -w^2 - 3 chi_h mod 4)");
  for (const auto& t : s.terms) {
    if (t.sw.degree() > 0) r.text.push_back("  SW[" + std::to_string(t.i) + "] = " + to_string(t.sw, "h"));
  }
}

void cmd_replay(const FourManifold& m, const Options& o, Report& r) {
  const CohClass w = parse_w(o.w, m);
  require_characteristic(m, w);
  const auto prepared = prepare_for_replay(m, w);
  const auto cert = induction_replay(prepared.manifold, prepared.w);
  r.results = certificate_json(cert);
  r.results["blowups"] = prepared.blowups;
  if (prepared.blowups) {
    r.text.push_back("prepared " + prepared.manifold.name + " by " + std::to_string(prepared.blowups) + " blow-up(s)");
  }
  r.text.push_back("c = " + std::to_string(cert.numbers.c) + ", chi_h = " + std::to_string(cert.numbers.chi_h) +
                   ", steps v = 2.." + std::to_string(cert.numbers.c / 2));
  for (const auto& s : cert.steps) {
    std::string rules;
    for (const auto& t : s.terms) rules += " " + std::to_string(t.k) + ":" + to_string(t.rule);
    r.text.push_back("v=" + std::to_string(s.v) + " A=" + std::to_string(s.params.A) + " ell=" +
                     std::to_string(s.params.ell) + " relation " + to_string(s.relation_verdict) + ";" + rules);
    r.text.push_back("  " + s.note);
  }
  r.text.push_back(cert.verified ? "certificate verified" : "certificate FAILED at v = " + std::to_string(*cert.failed_v));
  r.exit_status = cert.verified ? kExitOk : kExitViolated;
}

void report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (auto* v = dynamic_cast<const ValidationError*>(&e)) {
    for (const auto& reason : v->reasons()) err << "  - " << reason << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seiberg-Witten series and SCST checks on 4-manifold lattice data", "scst"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable report");

  auto source = [&](CLI::App* sub) {
    sub->add_option("source", o.source, "builtin:NAME or a manifold document path")->required();
  };
  auto* info = app.add_subcommand("info", "characteristic numbers and table checks");
  source(info);
  auto* sw = app.add_subcommand("sw", "SW polynomials SW^{w,i}");
  source(sw);
  sw->add_option("--w", o.w, "characteristic class, comma-separated");
  sw->add_option("--i", o.range, "degree or range a..b");
  auto* scst = app.add_subcommand("scst", "superconformal simple type check");
  source(scst);
  scst->add_option("--w", o.w, "characteristic class, comma-separated");
  auto* bound = app.add_subcommand("bound", "basic class count against c/2");
  source(bound);
  auto* blowup = app.add_subcommand("blowup", "blow up and print the new document");
  source(blowup);
  blowup->add_option("--times", o.times, "number of blow-ups");
  auto* donaldson = app.add_subcommand("donaldson", "simple-type Donaldson series");
  source(donaldson);
  donaldson->add_option("--delta", o.delta, "total degree delta")->required();
  donaldson->add_option("--m", o.m, "power of the point class");
  donaldson->add_option("--w", o.w, "integral class, comma-separated");
  auto* replay = app.add_subcommand("replay", "replay the vanishing induction");
  source(replay);
  replay->add_option("--w", o.w, "characteristic class, comma-separated");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitInvalid;
  }

  Report r;
  r.command = app.get_subcommands().front()->get_name();
  r.input = o.source;
  try {
    const FourManifold m = load_document(o.source);
    r.input_digest = fnv1a_digest(canonical_dump(m));
    if (r.command == "info") cmd_info(m, r);
    if (r.command == "sw") cmd_sw(m, o, r);
    if (r.command == "scst") cmd_scst(m, o, r);
    if (r.command == "bound") cmd_bound(m, r);
    if (r.command == "blowup") cmd_blowup(m, o, r);
    if (r.command == "donaldson") cmd_donaldson(m, o, r);
    if (r.command == "replay") cmd_replay(m, o, r);
  } catch (const Error& e) {
    report_error(e, err);
    return kExitInvalid;
  }
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << render_text(r);
  }
  return r.exit_status;
}

}  // namespace scst
