#pragma once

// JSON fan documents:
//   {"name": ..., "lattice_rank": n, "rays": [[...], ...],
//    "cones": [[ray indices], ...], "metadata": {...}}
// Integers may be JSON numbers or decimal strings.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "toriq/fan.hpp"

namespace toriq {

struct FanDocument {
  std::string name;
  std::size_t lattice_rank = 0;
  std::vector<LatticeVector> rays;
  /// Maximal cones as lists of ray indices.
  std::vector<std::vector<std::size_t>> cones;
  std::map<std::string, std::string> metadata;
  /// Non-fatal remarks made while loading (e.g. rays that were not primitive).
  std::vector<std::string> warnings;
};

/// Throws ParseError.
FanDocument parse_fan_document(const std::string& text);
/// Throws IoError or ParseError.
FanDocument load_fan_document(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const FanDocument& doc);

/// Throws InvalidFan.
Fan to_fan(const FanDocument& doc);

/// Numbers within 64 bits stay JSON numbers; larger ones become decimal strings.
nlohmann::ordered_json integer_to_json(const Integer& v);
nlohmann::ordered_json vector_to_json(const LatticeVector& v);
Integer integer_from_json(const nlohmann::json& j);
LatticeVector vector_from_json(const nlohmann::json& j);

}  // namespace toriq
