#pragma once

#include <optional>
#include <string>

#include "verba/lattice/lattice.hpp"

namespace verba {

inline constexpr int kLatticeCacheVersion = 1;

/// Path of the cache file for a table inside `dir`.
[[nodiscard]] std::string lattice_cache_path(const GroupTable& g, const std::string& dir);

/// Loads a cached lattice; nullopt when missing, from another version, or
/// recorded for a different table hash.
[[nodiscard]] std::optional<SubgroupLattice> load_cached_lattice(const GroupTable& g, const std::string& dir);
/// Best effort: write failures are ignored (the cache is an optimisation).
void store_cached_lattice(const SubgroupLattice& lat, const std::string& dir);

}  // namespace verba
