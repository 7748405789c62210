#include "trimaps/map_io.hpp"

#include <fstream>

namespace trimaps {

nlohmann::json permutation_to_json(const Permutation& p) {
  const auto images = p.images();
  return nlohmann::json(std::vector<Point>(images.begin(), images.end()));
}

Permutation permutation_from_json(const nlohmann::json& j) {
  require(j.is_array(), "permutation must be a JSON array");
  std::vector<Point> images;
  images.reserve(j.size());
  for (const auto& v : j) {
    require(v.is_number_unsigned(), "permutation entries must be non-negative integers");
    images.push_back(v.get<Point>());
  }
  return Permutation(std::move(images));
}

nlohmann::json map_to_json(const MapTriple& m) {
  return {{"degree", m.degree()},
          {"r0", permutation_to_json(m.r0())},
          {"r1", permutation_to_json(m.r1())},
          {"r2", permutation_to_json(m.r2())}};
}

MapTriple map_from_json(const nlohmann::json& j) {
  require(j.is_object(), "map file must hold a JSON object");
  for (const char* key : {"degree", "r0", "r1", "r2"}) {
    require(j.contains(key), std::string("map file lacks \"") + key + "\"");
  }
  require(j["degree"].is_number_unsigned(), "\"degree\" must be a non-negative integer");
  const auto degree = j["degree"].get<std::size_t>();
  for (const char* key : {"r0", "r1", "r2"}) {
    require(j[key].is_array() && j[key].size() == degree,
            std::string("\"") + key + "\" must be an array of length " + std::to_string(degree));
  }
  MapTriple m(permutation_from_json(j["r0"]), permutation_from_json(j["r1"]), permutation_from_json(j["r2"]));
  validate(m);
  return m;
}

MapTriple read_map_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
  return map_from_json(j);
}

void write_map_file(const std::filesystem::path& path, const MapTriple& m) {
  std::ofstream out(path);
  require(out.good(), "cannot write " + path.string());
  out << map_to_json(m).dump() << '\n';
}

}  // namespace trimaps
