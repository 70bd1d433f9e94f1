#include "verba/lattice/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "verba/group/algorithms.hpp"

namespace verba {

namespace fs = std::filesystem;

std::string lattice_cache_path(const GroupTable& g, const std::string& dir) {
  return (fs::path(dir) / ("lattice-" + g.hash_hex() + ".json")).string();
}

std::optional<SubgroupLattice> load_cached_lattice(const GroupTable& g, const std::string& dir) {
  std::ifstream in(lattice_cache_path(g, dir));
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kLatticeCacheVersion) return std::nullopt;
    if (j.at("hash").get<std::string>() != g.hash_hex()) return std::nullopt;
    if (j.at("order").get<std::size_t>() != g.order()) return std::nullopt;
    std::vector<Subgroup> subs;
    const auto& hexes = j.at("subgroups");
    subs.reserve(hexes.size());
    for (const auto& h : hexes) subs.push_back(algo::from_members(g, Bitset::from_hex(g.order(), h.get<std::string>())));
    auto maximal = j.at("maximal").get<std::vector<std::vector<std::size_t>>>();
    if (maximal.size() != subs.size()) return std::nullopt;
    SubgroupLattice lat(g, std::move(subs));
    // The stored list is already canonically sorted; reject anything else.
    for (std::size_t i = 0; i < lat.size(); ++i)
      if (lat[i].members().to_hex() != hexes[i].get<std::string>()) return std::nullopt;
    lat.set_maximal(std::move(maximal));
    return lat;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached_lattice(const SubgroupLattice& lat, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  nlohmann::json j;
  j["version"] = kLatticeCacheVersion;
  j["hash"] = lat.parent().hash_hex();
  j["order"] = lat.parent().order();
  nlohmann::json subs = nlohmann::json::array();
  nlohmann::json maximal = nlohmann::json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    subs.push_back(lat[i].members().to_hex());
    maximal.push_back(lat.maximal_of(i));
  }
  j["subgroups"] = std::move(subs);
  j["maximal"] = std::move(maximal);
  const std::string path = lattice_cache_path(lat.parent(), dir);
  std::ostringstream tmp_name;
  tmp_name << path << ".tmp" << std::hex << reinterpret_cast<std::uintptr_t>(&lat);
  {
    std::ofstream out(tmp_name.str());
    if (!out) return;
    out << j.dump();
    if (!out) return;
  }
  fs::rename(tmp_name.str(), path, ec);
  if (ec) fs::remove(tmp_name.str(), ec);
}

}  // namespace verba
