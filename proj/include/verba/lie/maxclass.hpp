#pragma once

#include <cstdint>
#include <vector>

#include "verba/group/table.hpp"

namespace verba::lie {

/// H_M = <alpha> ⋉ (Z/p^M)^(p-1) with alpha acting by
/// x_i -> x_i + x_{i+1} (i < p-1) and x_{p-1} -> x_{p-1} - sum_j C(p,j) x_j.
/// Elements alpha^a·v are coded as a·|A| + code(v).
class MaxClassCover {
 public:
  MaxClassCover(unsigned p, unsigned precision);

  [[nodiscard]] std::size_t order() const noexcept { return static_cast<std::size_t>(p_) * asize_; }
  [[nodiscard]] static constexpr Element identity() noexcept { return 0; }
  [[nodiscard]] Element mul(Element x, Element y) const;
  [[nodiscard]] Element inv(Element x) const;

  [[nodiscard]] Element alpha() const noexcept { return static_cast<Element>(asize_); }
  [[nodiscard]] Element basis(unsigned i) const;
  [[nodiscard]] std::vector<Element> generators() const;
  [[nodiscard]] bool in_a(Element x) const noexcept { return x < asize_; }
  [[nodiscard]] unsigned prime() const noexcept { return p_; }
  [[nodiscard]] unsigned precision() const noexcept { return m_; }

 private:
  [[nodiscard]] std::uint64_t add(std::uint64_t v, std::uint64_t w) const;
  [[nodiscard]] std::uint64_t negate(std::uint64_t v) const;

  unsigned p_, m_;
  std::int64_t mod_;
  std::uint64_t asize_;
  std::vector<std::vector<std::uint64_t>> act_;  ///< act_[b][v] = v^(alpha^b)
};

struct MaxClassQuotient {
  GroupTable group;
  Subgroup image_of_a;
  unsigned precision = 0;
  std::vector<std::size_t> orders_by_precision;  ///< index 0 is precision 2
};

/// H/[H^p,H]^p[H^p,H,H], computed in H_M for M = 2, 3, ... until two
/// consecutive quotient orders agree; the stable order must be p^(p+2).
/// Throws EvenPrime/InvalidArgument, PrimeTooLarge, OrderExceedsCap or
/// PrecisionNotStabilized.
[[nodiscard]] MaxClassQuotient maximal_class_quotient(unsigned p, std::size_t cap = 50'000);

}  // namespace verba::lie
