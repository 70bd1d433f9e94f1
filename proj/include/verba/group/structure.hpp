#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "verba/group/table.hpp"

namespace verba {

/// The whole group as a subgroup of itself.
[[nodiscard]] Subgroup whole_group(const GroupTable& g);

/// Subgroup with the given members (generating set chosen greedily).
[[nodiscard]] Subgroup subgroup_from_members(const GroupTable& g, Bitset members);
[[nodiscard]] Subgroup subgroup_generated(const GroupTable& g, const std::vector<Element>& gens);

[[nodiscard]] bool is_normal(const GroupTable& g, const Subgroup& s);
/// Whether S is normalised by every element of `within` (S need not lie in it).
[[nodiscard]] bool is_normalised_by(const GroupTable& g, const Subgroup& s, const Subgroup& within);

struct Quotient {
  GroupTable group;
  Homomorphism projection;
};

/// G/N with cosets ordered by their smallest element; throws NotNormal.
[[nodiscard]] Quotient quotient(const GroupTable& g, const Subgroup& n);

/// [A,B] for normal subgroups A, B of G; throws NotNormal.
[[nodiscard]] Subgroup commutator_subgroup(const GroupTable& g, const Subgroup& a, const Subgroup& b);

enum class SeriesKind { LowerCentral, Derived };

struct Series {
  std::vector<Subgroup> terms;  ///< first term is the group itself
  bool reaches_trivial = false; ///< nilpotent / soluble
  /// Nilpotency class or derived length when the series reaches 1.
  std::size_t length = 0;
};

[[nodiscard]] Series series(const GroupTable& g, SeriesKind kind);
/// Series of a subgroup H computed inside the parent table.
[[nodiscard]] Series series(const GroupTable& g, const Subgroup& h, SeriesKind kind);

[[nodiscard]] Subgroup power_subgroup(const GroupTable& g, long long m);
[[nodiscard]] Subgroup power_subgroup(const GroupTable& g, const Subgroup& h, long long m);
[[nodiscard]] Subgroup center(const GroupTable& g);
[[nodiscard]] Subgroup center(const GroupTable& g, const Subgroup& h);
[[nodiscard]] Subgroup centralizer(const GroupTable& g, const Subgroup& s);
[[nodiscard]] Subgroup normalizer(const GroupTable& g, const Subgroup& s);
[[nodiscard]] std::size_t exponent(const GroupTable& g);
[[nodiscard]] std::size_t exponent(const GroupTable& g, const Subgroup& h);
/// Sorted multiset of element orders.
[[nodiscard]] std::vector<std::size_t> element_orders(const GroupTable& g);
[[nodiscard]] bool is_abelian(const GroupTable& g, const Subgroup& h);

/// The prime p when |H| is a power of p (H nontrivial).
[[nodiscard]] std::optional<std::size_t> p_group_prime(const Subgroup& h);

/// Restriction of the multiplication to H, elements in increasing parent
/// order. `embedding[i]` is the parent index of local element i.
[[nodiscard]] GroupTable restrict_to(const GroupTable& g, const Subgroup& h,
                                     std::vector<Element>* embedding = nullptr);

struct IsoOptions {
  std::size_t node_budget = 2'000'000;
};

/// An isomorphism G -> H if one exists. Throws SearchBudgetExceeded when the
/// backtracking budget is exhausted before a decision.
[[nodiscard]] std::optional<Homomorphism> is_isomorphic(const GroupTable& g, const GroupTable& h,
                                                        const IsoOptions& opts = {});

/// Cheap isomorphism invariant used for fast rejection and bucketing.
[[nodiscard]] std::uint64_t iso_signature(const GroupTable& g);

}  // namespace verba
