#pragma once

#include <cstdint>
#include <span>

#include "verba/group/table.hpp"
#include "verba/word/word.hpp"

namespace verba {

/// Throws ArityMismatch when args.size() != w.arity().
[[nodiscard]] Element evaluate(const Word& w, const GroupTable& g, std::span<const Element> args);

struct VerbalOptions {
  /// Largest |H|^arity the tuple enumeration accepts.
  std::uint64_t budget = 100'000'000;
  bool fast_paths = true;
};

/// w(G). Standard shapes use structural fast paths; other words enumerate
/// all tuples (BudgetExceeded beyond the budget).
[[nodiscard]] Subgroup verbal_subgroup(const Word& w, const GroupTable& g, const VerbalOptions& opts = {});
/// w(H) for a subgroup H, computed inside the parent table.
[[nodiscard]] Subgroup verbal_subgroup(const Word& w, const GroupTable& g, const Subgroup& h,
                                       const VerbalOptions& opts = {});

/// Whether the word has a structural fast path.
[[nodiscard]] bool has_fast_path(const Word& w);

}  // namespace verba
