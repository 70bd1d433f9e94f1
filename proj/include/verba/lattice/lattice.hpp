#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "verba/group/table.hpp"

namespace verba {

struct LatticeOptions {
  std::size_t cap = 100'000;
  /// Directory for on-disk lattice caches; empty disables caching.
  std::string cache_dir;
};

/// Every subgroup of a finite group, sorted by order and then by canonical
/// bitset order, with the covering relation and normality flags.
class SubgroupLattice {
 public:
  SubgroupLattice() = default;
  SubgroupLattice(GroupTable parent, std::vector<Subgroup> subgroups);

  [[nodiscard]] const GroupTable& parent() const noexcept { return parent_; }
  [[nodiscard]] std::size_t size() const noexcept { return subs_.size(); }
  [[nodiscard]] const Subgroup& operator[](std::size_t i) const { return subs_[i]; }
  [[nodiscard]] const std::vector<Subgroup>& subgroups() const noexcept { return subs_; }
  [[nodiscard]] std::size_t trivial_index() const noexcept { return 0; }
  [[nodiscard]] std::size_t whole_index() const noexcept { return subs_.size() - 1; }

  /// Indices of the maximal subgroups of subgroup i.
  [[nodiscard]] const std::vector<std::size_t>& maximal_of(std::size_t i) const { return maximal_[i]; }
  /// Indices of the subgroups in which subgroup i is maximal.
  [[nodiscard]] const std::vector<std::size_t>& covers_of(std::size_t i) const { return covers_[i]; }
  [[nodiscard]] bool is_normal(std::size_t i) const { return normal_[i] != 0; }
  [[nodiscard]] std::optional<std::size_t> index_of(const Bitset& members) const;

  /// Installs a precomputed covering relation (from the p-group builder or
  /// a cache) instead of deriving it.
  void set_maximal(std::vector<std::vector<std::size_t>> maximal);
  /// Computes the covering relation from containment.
  void derive_covers();

 private:
  void finish();

  GroupTable parent_;
  std::vector<Subgroup> subs_;
  std::vector<std::vector<std::size_t>> maximal_, covers_;
  std::vector<char> normal_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
};

/// Throws CapExceeded when the group has more than `cap` subgroups. Uses the
/// on-disk cache when `opts.cache_dir` is set.
[[nodiscard]] SubgroupLattice all_subgroups(const GroupTable& g, const LatticeOptions& opts = {});

/// Uncached construction: layered extension for p-groups, joins of cyclic
/// subgroups otherwise.
[[nodiscard]] SubgroupLattice build_lattice(const GroupTable& g, const LatticeOptions& opts = {});

[[nodiscard]] std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lat);
[[nodiscard]] std::vector<Subgroup> normal_subgroups(const SubgroupLattice& lat);
/// Intersection of the maximal subgroups (the group itself when trivial).
[[nodiscard]] Subgroup frattini(const SubgroupLattice& lat);

/// Normal subgroups of H (normal in H), computed inside the parent table and
/// sorted canonically, without building a lattice.
[[nodiscard]] std::vector<Subgroup> normal_subgroups(const GroupTable& g);
[[nodiscard]] std::vector<Subgroup> normal_subgroups(const GroupTable& g, const Subgroup& h);

/// Minimal number of generators. p-groups use log_p |H : H^p[H,H]|.
[[nodiscard]] unsigned min_generators(const GroupTable& g);
[[nodiscard]] unsigned min_generators(const GroupTable& g, const Subgroup& h);
/// Generating-tuple search without the p-group shortcut.
[[nodiscard]] unsigned min_generators_search(const GroupTable& g, const Subgroup& h);

/// Frattini subgroup via G^p[G,G] for p-groups.
[[nodiscard]] Subgroup frattini_p_group(const GroupTable& g, const Subgroup& h);

struct Equichain {
  bool equichained = false;
  /// Bit L set when some maximal chain 1 < ... < G has length L.
  std::uint64_t lengths = 0;
  [[nodiscard]] std::vector<unsigned> length_list() const;
};

/// Lengths of all maximal chains of subgroups, by dynamic programming over
/// the covering relation.
[[nodiscard]] Equichain equichained(const SubgroupLattice& lat);
/// Per-subgroup chain-length sets (indexed like the lattice).
[[nodiscard]] std::vector<std::uint64_t> chain_lengths(const SubgroupLattice& lat);
/// A maximal chain (lattice indices from 1 up to G) of the given length.
[[nodiscard]] std::optional<std::vector<std::size_t>> chain_of_length(const SubgroupLattice& lat, unsigned length);
/// Lengths of `samples` random maximal chains (seeded, deterministic).
[[nodiscard]] std::vector<unsigned> sample_chain_lengths(const SubgroupLattice& lat, std::size_t samples,
                                                         std::uint64_t seed);

/// Normal series with prime-order factors, or nullopt when none exists.
[[nodiscard]] std::optional<std::vector<Subgroup>> supersoluble_series(const GroupTable& g);
[[nodiscard]] bool is_supersoluble(const GroupTable& g);
/// G = N_0 > N_1 > ... > 1, each term a maximal normal subgroup of the
/// previous one (canonically smallest on ties).
[[nodiscard]] std::vector<Subgroup> composition_series(const GroupTable& g);
[[nodiscard]] bool is_simple(const GroupTable& g);
[[nodiscard]] std::optional<Subgroup> sylow(const SubgroupLattice& lat, std::uint64_t p);

}  // namespace verba
