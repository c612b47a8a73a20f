#include "scst/document.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "scst/errors.hpp"

namespace scst {

using nlohmann::json;

namespace {

json class_to_json(const CohClass& a) {
  json out = json::array();
  for (const auto& x : a) out.push_back(x.get_num().get_si());
  return out;
}

}  // namespace

json to_json(const FourManifold& m) {
  json doc;
  doc["schema"] = kDocumentSchema;
  doc["name"] = m.name;
  doc["euler"] = m.euler;
  doc["signature"] = m.signature;
  if (!m.lattice.descriptor().empty()) {
    doc["lattice"] = m.lattice.descriptor();
  } else {
    doc["lattice"] = json{{"gram", m.lattice.gram()}};
  }
  json classes = json::array();
  for (const auto& [k, value] : m.sw) classes.push_back(json{{"K", class_to_json(k)}, {"sw", to_string(value)}});
  doc["basic_classes"] = std::move(classes);
  if (m.w) doc["w"] = class_to_json(*m.w);
  if (m.fiber) doc["fiber"] = class_to_json(*m.fiber);
  return doc;
}

namespace {

class Collector {
 public:
  void add(std::string reason) { reasons_.push_back(std::move(reason)); }
  bool empty() const { return reasons_.empty(); }
  [[noreturn]] void raise() { throw ValidationError(std::move(reasons_)); }

 private:
  std::vector<std::string> reasons_;
};

std::optional<long> read_int(const json& v) {
  if (v.is_number_integer()) return v.get<long>();
  return std::nullopt;
}

std::optional<CohClass> read_class(const json& v, std::size_t rank, const std::string& what, Collector& errors) {
  if (!v.is_array()) {
    errors.add(what + " must be an array of integers");
    return std::nullopt;
  }
  CohClass out;
  for (const auto& x : v) {
    auto n = read_int(x);
    if (!n) {
      errors.add(what + " has a non-integer coordinate");
      return std::nullopt;
    }
    out.emplace_back(*n);
  }
  if (out.size() != rank) {
    errors.add(what + " has length " + std::to_string(out.size()) + ", lattice rank is " + std::to_string(rank));
    return std::nullopt;
  }
  return out;
}

std::optional<Integer> read_sw(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    try {
      Rational r = parse_rational(v.get<std::string>());
      if (is_integer(r)) return r.get_num();
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

std::optional<IntersectionLattice> read_lattice(const json& v, Collector& errors) {
  try {
    if (v.is_string()) return IntersectionLattice::parse(v.get<std::string>());
    if (v.is_object() && v.contains("gram") && v["gram"].is_array()) {
      Gram g;
      for (const auto& row : v["gram"]) {
        if (!row.is_array()) {
          errors.add("lattice.gram rows must be arrays");
          return std::nullopt;
        }
        std::vector<std::int64_t> r;
        for (const auto& x : row) {
          if (!x.is_number_integer()) {
            errors.add("lattice.gram has a non-integer entry");
            return std::nullopt;
          }
          r.push_back(x.get<std::int64_t>());
        }
        g.push_back(std::move(r));
      }
      return IntersectionLattice::from_gram(std::move(g));
    }
    errors.add("lattice must be a descriptor string or {\"gram\": [[...]]}");
  } catch (const Error& e) {
    errors.add(std::string("lattice: ") + e.what());
  }
  return std::nullopt;
}

}  // namespace

FourManifold from_json(const json& doc) {
  Collector errors;
  if (!doc.is_object()) {
    errors.add("document must be a JSON object");
    errors.raise();
  }
  if (!doc.contains("schema") || doc["schema"] != kDocumentSchema) {
    errors.add("schema must be " + std::to_string(kDocumentSchema));
  }
  for (const auto& [key, value] : doc.items()) {
    static const std::vector<std::string> known = {"schema", "name", "euler", "signature", "lattice",
                                                   "basic_classes", "w", "fiber"};
    if (std::find(known.begin(), known.end(), key) == known.end()) errors.add("unknown field '" + key + "'");
  }

  FourManifold m;
  if (doc.contains("name") && doc["name"].is_string() && !doc["name"].get<std::string>().empty()) {
    m.name = doc["name"].get<std::string>();
  } else {
    errors.add("name must be a non-empty string");
  }
  auto euler = doc.contains("euler") ? read_int(doc["euler"]) : std::nullopt;
  auto signature = doc.contains("signature") ? read_int(doc["signature"]) : std::nullopt;
  if (!euler) errors.add("euler must be an integer");
  if (!signature) errors.add("signature must be an integer");
  if (euler) m.euler = *euler;
  if (signature) m.signature = *signature;
  if (euler && signature && (*euler + *signature) % 4 != 0) {
    errors.add("chi_h = (euler + signature)/4 is not an integer");
  }

  std::optional<IntersectionLattice> lattice;
  if (doc.contains("lattice")) {
    lattice = read_lattice(doc["lattice"], errors);
  } else {
    errors.add("lattice is missing");
  }
  if (!lattice) errors.raise();
  m.lattice = *lattice;
  const std::size_t rank = m.lattice.rank();
  if (euler && static_cast<long>(rank) != *euler - 2) {
    errors.add("lattice rank " + std::to_string(rank) + " differs from euler - 2 = " + std::to_string(*euler - 2));
  }
  if (signature && m.lattice.signature() != *signature) {
    errors.add("lattice signature " + std::to_string(m.lattice.signature()) + " differs from signature " +
               std::to_string(*signature));
  }

  if (!doc.contains("basic_classes") || !doc["basic_classes"].is_array()) {
    errors.add("basic_classes must be an array");
  } else {
    std::size_t index = 0;
    for (const auto& entry : doc["basic_classes"]) {
      const std::string what = "basic_classes[" + std::to_string(index++) + "]";
      if (!entry.is_object() || !entry.contains("K") || !entry.contains("sw")) {
        errors.add(what + " must be an object with K and sw");
        continue;
      }
      auto k = read_class(entry["K"], rank, what + ".K", errors);
      auto value = read_sw(entry["sw"]);
      if (!value) {
        errors.add(what + ".sw must be an integer");
        continue;
      }
      if (*value == 0) errors.add(what + ".sw is zero; omit classes that are not basic");
      if (!k) continue;
      if (!is_characteristic(m.lattice, *k)) errors.add(what + ".K = " + to_string(*k) + " is not characteristic");
      if (!m.sw.emplace(*k, *value).second) errors.add(what + ".K = " + to_string(*k) + " is listed twice");
    }
    if (euler && signature && (*euler + *signature) % 4 == 0) {
      const int sign = neg_one_pow((*euler + *signature) / 4);
      for (const auto& [k, value] : m.sw) {
        auto it = m.sw.find(-k);
        if (it == m.sw.end() || it->second != sign * value) {
          errors.add("SW'(-K) != (-1)^chi_h SW'(K) for K = " + to_string(k));
        }
      }
    }
  }
  if (doc.contains("w")) {
    auto w = read_class(doc["w"], rank, "w", errors);
    if (w && !is_characteristic(m.lattice, *w)) errors.add("w = " + to_string(*w) + " is not characteristic");
    if (w) m.w = std::move(w);
  }
  if (doc.contains("fiber")) {
    auto f = read_class(doc["fiber"], rank, "fiber", errors);
    if (f && m.lattice.square(*f) != 0) errors.add("fiber must have square zero");
    if (f) m.fiber = std::move(f);
  }
  if (!errors.empty()) errors.raise();
  return m;
}

FourManifold parse_document(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ValidationError({"malformed JSON"});
  return from_json(doc);
}

std::string canonical_dump(const FourManifold& m) { return to_json(m).dump(2) + "\n"; }

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

FourManifold load_document(const std::string& source) {
  static const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    if (const char* dir = std::getenv("SCST_FIXTURE_DIR"); dir && *dir) {
      std::filesystem::path candidate = std::filesystem::path(dir) / (name + ".json");
      if (std::filesystem::exists(candidate)) return parse_document(read_file(candidate));
    }
    return make_builtin(name);
  }
  return parse_document(read_file(source));
}

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
  return out;
}

}  // namespace scst
