#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "verba/group/structure.hpp"
#include "verba/lattice/lattice.hpp"
#include "verba/word/verbal.hpp"
#include "verba/word/word.hpp"

namespace verba {

struct MaximalityOptions {
  VerbalOptions verbal;
  LatticeOptions lattice;
  IsoOptions iso;
};

/// |H : w(H)| for every subgroup in the lattice, indexed like the lattice.
[[nodiscard]] std::vector<std::size_t> verbal_indices(const Word& w, const SubgroupLattice& lat,
                                                      const VerbalOptions& opts = {});

struct Breadth {
  std::size_t value = 1;
  Subgroup witness;
};

/// max |H : w(H)| over H <= G; ties go to the canonically smallest H.
[[nodiscard]] Breadth w_breadth(const Word& w, const SubgroupLattice& lat, const VerbalOptions& opts = {});
[[nodiscard]] Breadth w_breadth(const Word& w, const GroupTable& g, const MaximalityOptions& opts = {});

struct MaximalityReport {
  std::uint64_t group_hash = 0;
  Word word;
  std::size_t index = 1;
  bool is_w_maximal = true;
  /// A proper subgroup H with |H : w(H)| >= |G : w(G)|; set iff not maximal.
  std::optional<Subgroup> witness;
  std::size_t breadth = 1;
  Subgroup breadth_witness;
};

[[nodiscard]] MaximalityReport maximality_report(const Word& w, const SubgroupLattice& lat,
                                                 const VerbalOptions& opts = {});
[[nodiscard]] MaximalityReport is_w_maximal(const Word& w, const GroupTable& g, const MaximalityOptions& opts = {});

struct HereditaryResult {
  bool holds = true;
  /// The smallest subgroup (lattice order) that fails.
  std::optional<Subgroup> first_failing;
  std::optional<Subgroup> failing_witness;
};

/// Whether every subgroup is w-maximal: one dynamic program over the
/// covering relation compares |S : w(S)| with the best index strictly below S.
[[nodiscard]] HereditaryResult is_hereditarily_w_maximal(const Word& w, const SubgroupLattice& lat,
                                                         const VerbalOptions& opts = {});
[[nodiscard]] HereditaryResult is_hereditarily_w_maximal(const Word& w, const GroupTable& g,
                                                         const MaximalityOptions& opts = {});

enum class Tri { Yes, No, Unknown };
[[nodiscard]] std::string to_string(Tri t);

struct PrecedesResult {
  Tri answer = Tri::No;
  std::optional<Subgroup> kernel;
  /// G/N -> H when answer is Yes.
  std::optional<Homomorphism> iso;
};

/// H ⪯_w G: an epimorphism G -> H whose kernel lies in w(G). Both groups
/// must be w-maximal (NotWMaximal otherwise).
[[nodiscard]] PrecedesResult precedes(const Word& w, const GroupTable& h, const GroupTable& g,
                                      const MaximalityOptions& opts = {});
/// Variant without the maximality precondition (callers that already know).
[[nodiscard]] PrecedesResult precedes_unchecked(const Word& w, const GroupTable& h, const GroupTable& g,
                                                const MaximalityOptions& opts = {});

struct InterchangeResult {
  bool holds = true;
  std::optional<Subgroup> witness;
  std::size_t prime = 0;
};

/// Checks [w(N),G] <= [N,w(G)] [w(G),G]^p [w(G),G,G] for every normal N of
/// the p-group G. Throws NotAPGroup.
[[nodiscard]] InterchangeResult is_interchangeable(const Word& w, const GroupTable& g,
                                                   const VerbalOptions& opts = {});
/// The right-hand side above (independent of N except for [N, w(G)]).
[[nodiscard]] Subgroup interchange_rhs(const Word& w, const GroupTable& g, const Subgroup& n,
                                       const VerbalOptions& opts = {});

struct SubgroupConstraint {
  unsigned max_class = 1;
  std::optional<std::size_t> max_exponent;
};

/// A largest subgroup with nilpotency class <= max_class (and exponent
/// at most max_exponent when set); canonically smallest on ties.
[[nodiscard]] std::optional<Subgroup> find_subgroup_with(const SubgroupLattice& lat, const SubgroupConstraint& c);

struct DMaxResult {
  bool holds = true;
  unsigned d = 0;
  std::optional<Subgroup> witness;
};

/// d(H) for every subgroup in the lattice.
[[nodiscard]] std::vector<unsigned> generator_counts(const SubgroupLattice& lat);
/// d(H) < d(G) for all proper H.
[[nodiscard]] DMaxResult is_d_maximal(const SubgroupLattice& lat);
[[nodiscard]] DMaxResult is_d_maximal(const GroupTable& g, const LatticeOptions& opts = {});
[[nodiscard]] HereditaryResult is_hereditarily_d_maximal(const SubgroupLattice& lat);
[[nodiscard]] HereditaryResult is_hereditarily_d_maximal(const GroupTable& g, const LatticeOptions& opts = {});

struct HdmShape {
  enum Kind { ElementaryAbelian, ScalarExtension, NotHdm } kind = NotHdm;
  /// ElementaryAbelian: p^r (p = 0 for the trivial group).
  /// ScalarExtension: C_p acting on C_q^s by the scalar lambda.
  std::uint64_t p = 0, q = 0;
  unsigned r = 0, s = 0;
  std::uint64_t lambda = 0;
  std::string reason;
  friend bool operator==(const HdmShape&, const HdmShape&) = default;
};

[[nodiscard]] std::string to_string(const HdmShape& s);

/// Decides the shape by inspecting [G,G], a complement and its action,
/// without any lattice. lambda is the least scalar over generators of the
/// complement.
[[nodiscard]] HdmShape classify_hdm(const GroupTable& g);

nlohmann::json subgroup_json(const GroupTable& g, const Subgroup& s);
nlohmann::json report_json(const GroupTable& g, const MaximalityReport& r);
void to_json(nlohmann::json& j, const HdmShape& s);

}  // namespace verba
