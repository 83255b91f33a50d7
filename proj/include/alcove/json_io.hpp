#pragma once

// JSON encodings of the library objects. Every document carries
// "schema": "alcove-shi/1"; ordering follows the canonical positive-root
// order of the root system. Imported Shi vectors are re-validated through
// is_alcove.

#include <string>

#include "json.hpp"

#include "alcove/orientation.hpp"

namespace alcove {

inline constexpr const char* kSchemaTag = "alcove-shi/1";

nlohmann::json root_system_json(const RootSystem& rs);
nlohmann::json shi_vector_json(const RootSystem& rs, const ShiVector& v);
nlohmann::json element_json(const AffineElement& w);
nlohmann::json h1_json(const RootSystem& rs, const CohomologyGroup& g);
nlohmann::json ball_report_json(const BallReport& rep);

// Parses {k: [...]} with optional "order" (must match the canonical order)
// and validates through is_alcove; throws std::invalid_argument otherwise.
ShiVector shi_vector_from_json(const RootSystem& rs, const nlohmann::json& j);

AffineElement element_from_json(const RootSystem& rs, const nlohmann::json& j);

}  // namespace alcove
