#pragma once

#include <cstdint>
#include <vector>

#include "verba/group/table.hpp"
#include "verba/lie/lie_ring.hpp"

namespace verba::lie {

/// exp(L) for a Lie ring of class at most 2 and odd p: the underlying set of
/// L with x∘y = x + y + h[x,y], h the inverse of 2 modulo the additive
/// exponent. Elements are renumbered breadth-first over the basis.
struct LazardGroup {
  GroupTable group;
  std::vector<std::uint64_t> code_of;  ///< element index -> ring code
  std::vector<Element> index_of;       ///< ring code -> element index
};

/// Throws EvenPrime, ClassTooLarge or OrderExceedsCap.
[[nodiscard]] LazardGroup lazard_exp(const LieRing& l, std::size_t cap = 50'000);

/// log(G) on the element set of G: x + y = x·y·[y,x]^h, [x,y] the group
/// commutator. Both operations are tables over element indices.
struct LieTable {
  unsigned p = 3;
  GroupTable additive;
  std::vector<Element> bracket;  ///< row-major

  [[nodiscard]] Element add(Element a, Element b) const { return additive.mul(a, b); }
  [[nodiscard]] Element lie(Element a, Element b) const { return bracket[a * additive.order() + b]; }

  /// A basis of the additive group (orders non-increasing) and the
  /// resulting structure constants.
  [[nodiscard]] LieRing to_lie_ring(std::vector<Element>* basis = nullptr) const;
};

/// Throws NotAPGroup, EvenPrime or ClassTooLarge.
[[nodiscard]] LieTable lazard_log(const GroupTable& g);

/// Whether the given tables agree with L on the matching element set, i.e.
/// index i carries ring code code_of[i] and both + and [,] are preserved.
[[nodiscard]] bool matches_ring(const LieTable& t, const LieRing& l, const std::vector<std::uint64_t>& code_of);

}  // namespace verba::lie
