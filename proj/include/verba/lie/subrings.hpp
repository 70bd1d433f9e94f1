#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "verba/bitset.hpp"
#include "verba/lie/lie_ring.hpp"

namespace verba::lie {

/// A Lie subring as a membership set over ring codes plus generators.
struct Subring {
  Bitset members;
  std::vector<Vec> generators;
  [[nodiscard]] std::size_t order() const noexcept { return members.count(); }
};

/// Smallest additive subgroup containing `gens` and closed under the bracket.
[[nodiscard]] Subring subring_closure(const LieRing& l, const std::vector<Vec>& gens);

/// Every Lie subring, sorted by order and then canonically. Grown by
/// extending each subring with one coset representative at a time.
/// Throws BudgetExceeded past `budget` subrings.
[[nodiscard]] std::vector<Subring> all_subrings(const LieRing& l, std::size_t budget = 100'000);

/// |M : pM + [M,M]|.
[[nodiscard]] std::uint64_t frattini_index(const LieRing& l, const Subring& m);

struct GeneralDMax {
  bool holds = true;
  std::uint64_t index = 1;  ///< |L : pL + [L,L]|
  std::optional<Subring> witness;
  std::size_t subrings = 0;
};

/// |M : pM + [M,M]| < |L : pL + [L,L]| for every proper subring M.
[[nodiscard]] GeneralDMax lie_d_maximal_general(const LieRing& l, std::size_t budget = 100'000);

}  // namespace verba::lie
