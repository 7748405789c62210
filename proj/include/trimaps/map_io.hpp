#pragma once

#include <filesystem>

#include <json.hpp>

#include "trimaps/mapcore.hpp"

namespace trimaps {

/// {"degree": N, "r0": [...], "r1": [...], "r2": [...]}, 0-indexed images.
nlohmann::json map_to_json(const MapTriple& m);
/// Parses and validates; malformed or invalid triples throw DomainError.
MapTriple map_from_json(const nlohmann::json& j);

MapTriple read_map_file(const std::filesystem::path& path);
void write_map_file(const std::filesystem::path& path, const MapTriple& m);

nlohmann::json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

}  // namespace trimaps
