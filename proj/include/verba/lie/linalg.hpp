#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "verba/lie/lie_ring.hpp"

/// Dense linear algebra over F_p. Entries are kept in [0, p).
namespace verba::lie::fp {

using Matrix = std::vector<Vec>;  ///< row-major

[[nodiscard]] Matrix zeros(std::size_t rows, std::size_t cols);
[[nodiscard]] Matrix identity(std::size_t n);
[[nodiscard]] Matrix transpose(const Matrix& a);
[[nodiscard]] Matrix mul(const Matrix& a, const Matrix& b, std::int64_t p);
[[nodiscard]] Vec apply(const Matrix& a, const Vec& v, std::int64_t p);
[[nodiscard]] Matrix reduce(Matrix a, std::int64_t p);

struct Echelon {
  Matrix rows;                      ///< nonzero rows of the reduced form
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

[[nodiscard]] Echelon rref(Matrix a, std::int64_t p);
[[nodiscard]] std::size_t rank(const Matrix& a, std::int64_t p);
/// Basis of {x : a x = 0}; one vector per free column, in column order.
[[nodiscard]] Matrix nullspace(const Matrix& a, std::size_t cols, std::int64_t p);
[[nodiscard]] std::optional<Matrix> inverse(const Matrix& a, std::int64_t p);
[[nodiscard]] std::int64_t det(Matrix a, std::int64_t p);
[[nodiscard]] Matrix power(const Matrix& a, std::uint64_t e, std::int64_t p);

/// Incrementally maintained echelon basis of a span.
class SpanBuilder {
 public:
  SpanBuilder(std::size_t dim, std::int64_t p) : dim_(dim), p_(p) {}
  /// Adds v; returns whether the span grew.
  bool insert(Vec v);
  [[nodiscard]] std::size_t dim() const noexcept { return rows_.size(); }
  [[nodiscard]] bool contains(Vec v) const;

 private:
  void eliminate(Vec& v) const;
  std::size_t dim_;
  std::int64_t p_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace verba::lie::fp
