#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "verba/group/table.hpp"
#include "verba/lie/linalg.hpp"

namespace verba::lie {

/// G = <z> ⋉ N with N = exp(L/Z), L the free class-2 Lie algebra on
/// V = F_p^d (d = 2m, m the order of p mod q) and Z a z-invariant
/// hyperplane of [L,L]. N is V ⊕ F_p with (v,a)(w,b) = (v+w, a+b+B(v,w)/2)
/// and z acts by (v,a) -> (Mv, a). Elements z^c·(v,a) are coded as
/// c·p^(d+1) + code(v) + a·p^d; no table is materialized.
class Delta2Group {
 public:
  Delta2Group(unsigned p, unsigned q);

  [[nodiscard]] std::size_t order() const noexcept { return q_ * ncode_; }
  [[nodiscard]] static constexpr Element identity() noexcept { return 0; }
  [[nodiscard]] Element mul(Element x, Element y) const;
  [[nodiscard]] Element inv(Element x) const;

  [[nodiscard]] Element z() const noexcept { return static_cast<Element>(ncode_); }
  [[nodiscard]] std::vector<Element> generators() const;
  [[nodiscard]] bool in_n(Element x) const noexcept { return x < ncode_; }
  [[nodiscard]] std::string label(Element x) const;

  [[nodiscard]] unsigned p() const noexcept { return p_; }
  [[nodiscard]] unsigned q() const noexcept { return q_; }
  [[nodiscard]] unsigned m() const noexcept { return m_; }
  [[nodiscard]] unsigned d() const noexcept { return d_; }
  /// Coefficients c_0..c_{m-1} of the monic minimal polynomial of zeta.
  [[nodiscard]] const Vec& min_poly() const noexcept { return poly_; }
  [[nodiscard]] const fp::Matrix& z_on_v() const noexcept { return zv_; }
  /// Induced action on the basis e_a ∧ e_b (a < b) of [L,L].
  [[nodiscard]] const fp::Matrix& z_on_wedge() const noexcept { return zw_; }
  /// The z-fixed functional on [L,L] whose kernel is Z.
  [[nodiscard]] const Vec& functional() const noexcept { return phi_; }
  /// B(v,w) = phi(v ∧ w) as an antisymmetric d×d matrix.
  [[nodiscard]] const fp::Matrix& form() const noexcept { return form_; }

 private:
  unsigned p_, q_, m_, d_;
  std::uint64_t pd_ = 0, ncode_ = 0;
  std::int64_t half_ = 0;
  Vec poly_, phi_;
  fp::Matrix zv_, zw_, form_;
  std::vector<std::uint32_t> act_;  ///< act_[c*pd + v] = M^c v
  std::vector<std::uint32_t> vadd_;
  std::vector<std::uint32_t> vneg_;
  std::vector<std::uint8_t> bil_;
};

struct Delta2Report {
  unsigned p = 0, q = 0, m = 0, d = 0;
  std::uint64_t order = 0;
  Vec min_poly;
  bool no_fixed_hyperplane_on_v = false;  ///< char poly of z on V has no root in F_p
  bool one_is_eigenvalue = false;         ///< on [L,L]
  bool derived_is_n = false;              ///< [G,G] = N
  std::size_t delta2_order = 0;           ///< must be p
  std::size_t derived_length = 0;         ///< must be 3
  bool index_is_order_over_p = false;     ///< |G : delta_2(G)| = |G|/p
  std::uint64_t associativity_samples = 0;
  bool associative = false;
  bool inverses_exact = false;

  [[nodiscard]] bool passed() const noexcept {
    return no_fixed_hyperplane_on_v && one_is_eigenvalue && derived_is_n && delta2_order == p &&
           derived_length == 3 && index_is_order_over_p && associative && inverses_exact;
  }
};

void to_json(nlohmann::json& j, const Delta2Report& r);

/// Builds the group and checks it. Throws InvalidArgument (q <= p or not
/// prime), EvenPrime, BudgetExceeded or NoFixedEigenvector.
[[nodiscard]] Delta2Report delta2_construction(unsigned p, unsigned q, std::uint64_t samples = 1'000'000,
                                               std::uint64_t seed = 1);

/// The monic degree-m divisor of the q-th cyclotomic polynomial mod p whose
/// coefficient list (c_0, ..., c_{m-1}) is lexicographically least.
[[nodiscard]] Vec least_cyclotomic_factor(unsigned p, unsigned q, unsigned m);
[[nodiscard]] fp::Matrix companion(const Vec& poly, unsigned p);

}  // namespace verba::lie
