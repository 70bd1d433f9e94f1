#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "verba/bitset.hpp"

namespace verba {

using Element = std::uint32_t;

/// A finite group given by its full multiplication table. Element 0 is the
/// identity. Instances are immutable handles and cheap to copy.
class GroupTable {
 public:
  /// The trivial group.
  GroupTable();

  /// Validates the table (identity law, Latin rows, inverses, associativity:
  /// exhaustive up to order 256, one million sampled triples above) and
  /// throws NotAGroup on failure. `mul` is row-major, mul[i*n+j] = i*j.
  static GroupTable from_cayley(std::size_t n, std::vector<Element> mul,
                                std::vector<std::string> labels = {});

  /// Skips the associativity check; for tables produced by constructions
  /// that guarantee the group law. Inverses are still derived and the
  /// identity law is still required.
  static GroupTable trusted(std::size_t n, std::vector<Element> mul,
                            std::vector<std::string> labels = {});

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] static constexpr Element identity() noexcept { return 0; }

  [[nodiscard]] Element mul(Element a, Element b) const noexcept {
    return d_->mul[static_cast<std::size_t>(a) * n_ + b];
  }
  [[nodiscard]] Element inv(Element a) const noexcept { return d_->inv[a]; }
  [[nodiscard]] std::span<const Element> row(Element a) const noexcept {
    return {d_->mul.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  [[nodiscard]] std::span<const Element> table() const noexcept { return d_->mul; }

  [[nodiscard]] std::size_t element_order(Element a) const noexcept { return d_->orders[a]; }
  [[nodiscard]] std::span<const std::uint32_t> element_orders() const noexcept { return d_->orders; }

  /// Display label; falls back to the decimal index.
  [[nodiscard]] std::string label(Element a) const;
  [[nodiscard]] bool has_labels() const noexcept { return !d_->labels.empty(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return d_->labels; }
  /// Index of the element with the given label, or order() when absent.
  [[nodiscard]] std::size_t find_label(const std::string& label) const;

  /// Canonical hash: combines the order with the sorted list of row hashes.
  [[nodiscard]] std::uint64_t hash() const noexcept { return d_->hash; }
  [[nodiscard]] std::string hash_hex() const;

  [[nodiscard]] bool is_abelian() const noexcept;

  /// Checks associativity over all triples (or `samples` random triples when
  /// nonzero). Used by validation and by tests.
  [[nodiscard]] bool check_associative(std::size_t samples = 0, std::uint64_t seed = 1) const;

 private:
  struct Data {
    std::vector<Element> mul;
    std::vector<Element> inv;
    std::vector<std::uint32_t> orders;
    std::vector<std::string> labels;
    std::uint64_t hash = 0;
  };
  GroupTable(std::size_t n, std::shared_ptr<const Data> d) : n_(n), d_(std::move(d)) {}
  static GroupTable build(std::size_t n, std::vector<Element> mul,
                          std::vector<std::string> labels, bool check_assoc);

  std::size_t n_ = 1;
  std::shared_ptr<const Data> d_;
};

/// A subgroup of some parent table: a membership bitset over the parent's
/// elements together with a generating set. Equality is by members only.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(Bitset members, std::vector<Element> generators)
      : members_(std::move(members)), gens_(std::move(generators)),
        order_(members_.count()) {}

  static Subgroup trivial(std::size_t parent_order);

  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] std::size_t parent_order() const noexcept { return members_.size(); }
  [[nodiscard]] bool contains(Element e) const noexcept { return members_.test(e); }
  [[nodiscard]] const Bitset& members() const noexcept { return members_; }
  [[nodiscard]] const std::vector<Element>& generators() const noexcept { return gens_; }
  [[nodiscard]] std::vector<Element> elements() const { return members_.to_vector(); }
  [[nodiscard]] bool is_trivial() const noexcept { return order_ <= 1; }
  [[nodiscard]] bool is_subgroup_of(const Subgroup& o) const noexcept {
    return members_.is_subset_of(o.members_);
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.members_ == b.members_;
  }
  /// Orders subgroups by order, then by canonical bitset order.
  [[nodiscard]] bool canonical_less(const Subgroup& o) const noexcept {
    if (order_ != o.order_) return order_ < o.order_;
    return members_.canonical_less(o.members_);
  }

 private:
  Bitset members_;
  std::vector<Element> gens_;
  std::size_t order_ = 0;
};

/// A map between group tables given by the image of every source element.
struct Homomorphism {
  GroupTable source;
  GroupTable target;
  std::vector<Element> image;

  [[nodiscard]] bool is_homomorphism() const;
  [[nodiscard]] bool is_injective() const;
  [[nodiscard]] bool is_surjective() const;
  [[nodiscard]] Subgroup kernel() const;
  /// Image of a subgroup of the source, as a subgroup of the target.
  [[nodiscard]] Subgroup map(const Subgroup& h) const;
};

}  // namespace verba
