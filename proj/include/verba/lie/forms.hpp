#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "verba/lie/lie_ring.hpp"
#include "verba/lie/linalg.hpp"

namespace verba::lie {

/// Antisymmetric bilinear forms f_1..f_k on V = F_p^dim, as dim×dim
/// matrices with f(v,w) = v^T F w.
struct FormFamily {
  unsigned p = 3;
  unsigned dim = 0;
  std::vector<fp::Matrix> forms;

  /// Throws NotAntisymmetric (or InvalidSpec for shape errors).
  void validate() const;
  [[nodiscard]] std::size_t k() const noexcept { return forms.size(); }
  friend bool operator==(const FormFamily&, const FormFamily&) = default;
};

void to_json(nlohmann::json& j, const FormFamily& f);
void from_json(const nlohmann::json& j, FormFamily& f);

/// L = V ⊕ F_p^k with basis e_1..e_dim, z_1..z_k and
/// [e_a, e_b] = sum_i F_i[a][b] z_i.
[[nodiscard]] LieRing lie_from_forms(const FormFamily& ff);

/// Rank of the k × C(r,2) matrix of the forms restricted to W (given by r
/// basis rows), i.e. the dimension of their span in the dual of W ∧ W.
/// Throws BadSubspace when the rows are dependent or of the wrong length.
[[nodiscard]] std::size_t wedge_rank(const FormFamily& ff, const fp::Matrix& w);
[[nodiscard]] std::size_t wedge_rank(const FormFamily& ff);
/// Dimension of the span of the value vectors (f_1(v,w), ..., f_k(v,w)) over
/// pairs of basis vectors of W, built up one vector at a time.
[[nodiscard]] std::size_t value_span_dim(const FormFamily& ff, const fp::Matrix& w);

/// Number of subspaces of F_p^n of dimension j (Gaussian binomial).
[[nodiscard]] std::uint64_t gaussian_binomial(unsigned n, unsigned j, std::uint64_t p);

/// Streams every subspace of F_p^n of dimension j as its reduced
/// row-echelon basis; the callback returns false to stop early.
void for_each_subspace(unsigned n, unsigned j, std::int64_t p, const std::function<bool(const fp::Matrix&)>& f);

struct ClassTwoDMax {
  bool holds = true;
  std::optional<fp::Matrix> witness;
  std::uint64_t subspaces_checked = 0;
};

/// Tests dim W + k - wedge_rank(W) < dim V for every proper subspace W of V.
/// Throws SubspaceCountExceedsBudget when there are more than `budget`.
[[nodiscard]] ClassTwoDMax lie_d_maximal_class2(const FormFamily& ff, std::uint64_t budget = 10'000'000);

struct FormSearchHit {
  FormFamily family;
  std::size_t derived_dim = 0;
};

enum class SearchStrategy { Exhaustive, Random };

struct FormSearchOptions {
  SearchStrategy strategy = SearchStrategy::Exhaustive;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
  /// Exhaustive mode: largest number of families tried.
  std::uint64_t budget = 1'000'000;
  std::uint64_t subspace_budget = 10'000'000;
  /// Only families whose forms are linearly independent (wedge_rank = k).
  bool independent_only = true;
  /// Fix f_1 to this form and search only f_2..f_k. Every nondegenerate
  /// form is GL(V)-equivalent to the standard one, so fixing it samples one
  /// orbit of families whose first form is nondegenerate.
  std::optional<fp::Matrix> first_form;
};

/// Families of k forms on F_p^dimV passing lie_d_maximal_class2. Exhaustive
/// mode walks all k-tuples of nonzero forms in increasing order (tuples
/// i_1 < ... < i_k of form indices); random mode draws with mt19937_64.
[[nodiscard]] std::vector<FormSearchHit> form_search(unsigned p, unsigned dim, unsigned k,
                                                     const FormSearchOptions& opts = {});

/// The two forms on F_p^4 used for the rank-6 class-2 example.
[[nodiscard]] FormFamily example_two_family(unsigned p = 3);
/// C_p × C_p × C_{p^2} with [x,y] = p z.
[[nodiscard]] LieRing example_one_ring(unsigned p = 3);
/// The standard nondegenerate form on F_p^dim (dim even): blocks [[0,1],[-1,0]].
[[nodiscard]] fp::Matrix standard_form(unsigned dim, unsigned p);
/// One hyperbolic form on F_p^2.
[[nodiscard]] FormFamily heisenberg_family(unsigned p = 3);

struct NamedRing {
  std::string name;
  LieRing ring;
};

/// Class-<=2 Lie rings over p of order at most p^6 (p = 3) or p^5, used as
/// the Lie-side corpus.
[[nodiscard]] std::vector<NamedRing> small_lie_rings(unsigned p);

}  // namespace verba::lie
