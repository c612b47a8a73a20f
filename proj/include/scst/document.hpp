#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "scst/manifold.hpp"

namespace scst {

inline constexpr int kDocumentSchema = 1;

/// Canonical document:
///   {"schema": 1, "name": str, "euler": int, "signature": int,
///    "lattice": descriptor string | {"gram": [[int]]},
///    "basic_classes": [{"K": [int], "sw": decimal string}],
///    "w": [int] (optional), "fiber": [int] (optional)}
/// Keys are sorted, so dumping is deterministic.
nlohmann::json to_json(const FourManifold& m);

/// Validates every invariant and throws ValidationError listing all of them.
FourManifold from_json(const nlohmann::json& doc);

FourManifold parse_document(std::string_view text);
std::string canonical_dump(const FourManifold& m);

/// "builtin:NAME" or a file path. With SCST_FIXTURE_DIR set, builtin:NAME is
/// first looked up as $SCST_FIXTURE_DIR/NAME.json.
FourManifold load_document(const std::string& source);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_digest(std::string_view bytes);

}  // namespace scst
