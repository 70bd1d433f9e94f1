#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "json.hpp"
#include "verba/group/table.hpp"
#include "verba/lie/lie_ring.hpp"

namespace verba {

struct GroupSpec;
using SpecPtr = std::shared_ptr<const GroupSpec>;

namespace spec {

struct Cyclic {
  std::uint64_t n = 1;
};
struct ElementaryAbelian {
  std::uint64_t p = 2;
  unsigned r = 1;
};
/// Dihedral group of order 2n.
struct Dihedral {
  std::uint64_t n = 3;
};
struct Quaternion8 {};
struct Symmetric {
  unsigned n = 3;
};
struct DirectProduct {
  SpecPtr left, right;
};
/// An image of a normal generator: an element index of the normal group's
/// table, or one of its labels.
using ImageRef = std::variant<std::int64_t, std::string>;
/// acting ⋉ normal; action[g][i] is the image of normal generator i under
/// acting generator g (a right action n -> n^g).
struct Semidirect {
  SpecPtr normal, acting;
  std::vector<std::vector<ImageRef>> action;
};
/// C_p acting on C_q^s by v -> lambda v.
struct ScalarExtension {
  std::uint64_t p = 2, q = 3;
  unsigned s = 1;
  std::int64_t lambda = 2;
};
struct CayleyTable {
  std::size_t order = 1;
  std::vector<Element> table;
};
/// Products compose left to right: (xy)(i) = y(x(i)).
struct Permutations {
  unsigned degree = 1;
  std::vector<std::vector<std::uint32_t>> generators;
};
struct LazardExp {
  lie::LieRing lie;
};

}  // namespace spec

struct GroupSpec {
  using Variant = std::variant<spec::Cyclic, spec::ElementaryAbelian, spec::Dihedral, spec::Quaternion8,
                               spec::Symmetric, spec::DirectProduct, spec::Semidirect, spec::ScalarExtension,
                               spec::CayleyTable, spec::Permutations, spec::LazardExp>;
  Variant v;

  template <class T>
    requires std::is_constructible_v<Variant, T>
  GroupSpec(T x) : v(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  GroupSpec() : v(spec::Cyclic{1}) {}

  [[nodiscard]] std::string kind() const;
  /// Human-readable description such as "C2 x S3".
  [[nodiscard]] std::string name() const;
};

inline constexpr std::size_t kDefaultOrderCap = 50'000;

/// A materialised group together with the construction's generators.
struct BuiltGroup {
  GroupTable table;
  std::vector<Element> generators;
};

/// Throws OrderExceedsCap, InvalidAction, NotAGroup or InvalidSpec.
[[nodiscard]] GroupTable materialize(const GroupSpec& spec, std::size_t cap = kDefaultOrderCap);
[[nodiscard]] BuiltGroup materialize_with_generators(const GroupSpec& spec, std::size_t cap = kDefaultOrderCap);

/// Renumbers the group generated by `gens` inside an arbitrary element model
/// breadth-first from the identity, right-multiplying by the generators in
/// the order given. `mul` acts on opaque 64-bit codes.
struct ElementModel {
  std::uint64_t identity = 0;
  std::vector<std::uint64_t> generators;
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mul;
  std::function<std::string(std::uint64_t)> label;
  /// Size of a dense code space, or 0 when codes are sparse.
  std::uint64_t code_space = 0;
};
/// `codes` receives the code of every element index when non-null.
[[nodiscard]] BuiltGroup bfs_materialize(const ElementModel& model, std::size_t cap,
                                         std::vector<std::uint64_t>* codes = nullptr);

// Convenience constructors.
[[nodiscard]] GroupSpec cyclic(std::uint64_t n);
[[nodiscard]] GroupSpec elementary_abelian(std::uint64_t p, unsigned r);
[[nodiscard]] GroupSpec dihedral(std::uint64_t n);
[[nodiscard]] GroupSpec quaternion8();
[[nodiscard]] GroupSpec symmetric(unsigned n);
[[nodiscard]] GroupSpec direct_product(GroupSpec a, GroupSpec b);
[[nodiscard]] GroupSpec semidirect(GroupSpec normal, GroupSpec acting,
                                   std::vector<std::vector<spec::ImageRef>> action);
[[nodiscard]] GroupSpec scalar_extension(std::uint64_t p, std::uint64_t q, unsigned s, std::int64_t lambda);
[[nodiscard]] GroupSpec permutations(unsigned degree, std::vector<std::vector<std::uint32_t>> gens);
[[nodiscard]] GroupSpec lazard_exp_spec(lie::LieRing l);
/// C3 acting on Q8 by i -> j -> k -> i.
[[nodiscard]] GroupSpec c3_on_q8();

/// Named builders: C<n>, C<n>^<r>, E<p>^<r>, D<n> (order 2n), Q8, S<n>, A4,
/// Heis<p> (odd p, via the Lazard exponential), C3:Q8, SE(p,q,s,lambda),
/// and direct products joined by 'x', e.g. "C2xS3".
[[nodiscard]] GroupSpec parse_named(const std::string& name);
/// JSON text, a path to a JSON file, or a named builder.
[[nodiscard]] GroupSpec parse_group_spec(const std::string& text);

void to_json(nlohmann::json& j, const GroupSpec& s);
void from_json(const nlohmann::json& j, GroupSpec& s);
/// Canonical serialisation (sorted keys, compact).
[[nodiscard]] std::string to_canonical_json(const GroupSpec& s);

}  // namespace verba
