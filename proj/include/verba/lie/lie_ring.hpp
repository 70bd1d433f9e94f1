#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "verba/bitset.hpp"

namespace verba::lie {

using Vec = std::vector<std::int64_t>;

/// A finite Z/p^e-module with basis b_0..b_{r-1}, additive orders p^{e_i},
/// and a bilinear bracket given by structure constants [b_i,b_j] = c[i][j].
class LieRing {
 public:
  struct Bracket {
    unsigned i = 0, j = 0;
    Vec coeffs;
  };

  /// The zero ring over p.
  explicit LieRing(unsigned p = 3) : p_(p) {}

  /// Validates antisymmetry, well-definedness of the constants modulo the
  /// basis orders and the Jacobi identity on basis triples (InvalidSpec).
  /// Brackets not listed are zero; [b_j,b_i] is implied by antisymmetry.
  static LieRing make(unsigned p, std::vector<unsigned> exponents, const std::vector<Bracket>& brackets);

  [[nodiscard]] unsigned prime() const noexcept { return p_; }
  [[nodiscard]] std::size_t rank() const noexcept { return exps_.size(); }
  [[nodiscard]] const std::vector<unsigned>& exponents() const noexcept { return exps_; }
  [[nodiscard]] std::int64_t basis_order(std::size_t i) const noexcept { return mods_[i]; }
  [[nodiscard]] std::uint64_t order() const noexcept;
  /// Additive exponent p^{max e_i} (1 for the zero ring).
  [[nodiscard]] std::int64_t additive_exponent() const noexcept;
  [[nodiscard]] const Vec& structure(std::size_t i, std::size_t j) const { return c_[i * rank() + j]; }

  [[nodiscard]] Vec zero() const { return Vec(rank(), 0); }
  [[nodiscard]] Vec basis(std::size_t i) const;
  [[nodiscard]] Vec add(const Vec& a, const Vec& b) const;
  [[nodiscard]] Vec neg(const Vec& a) const;
  [[nodiscard]] Vec scale(const Vec& a, std::int64_t k) const;
  [[nodiscard]] Vec bracket(const Vec& a, const Vec& b) const;
  [[nodiscard]] Vec reduce(Vec a) const;

  /// Mixed-radix code of an element; 0 encodes the zero vector.
  [[nodiscard]] std::uint64_t encode(const Vec& a) const;
  [[nodiscard]] Vec decode(std::uint64_t code) const;

  /// Additive span of the given elements as a membership set over codes.
  [[nodiscard]] Bitset span(const std::vector<Vec>& gens) const;

  /// Nilpotency class: 0 for the zero ring, 1 when abelian and nonzero;
  /// 0 with `nilpotent` false when the lower central series stalls.
  [[nodiscard]] std::size_t nilpotency_class(bool* nilpotent = nullptr) const;

  [[nodiscard]] std::vector<Bracket> nonzero_brackets() const;

  friend bool operator==(const LieRing&, const LieRing&) = default;

 private:
  unsigned p_ = 3;
  std::vector<unsigned> exps_;
  std::vector<std::int64_t> mods_;
  std::vector<Vec> c_;
};

void to_json(nlohmann::json& j, const LieRing& l);
void from_json(const nlohmann::json& j, LieRing& l);

}  // namespace verba::lie
