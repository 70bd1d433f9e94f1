#pragma once

// Deliberately naive reference computations, independent of the library's
// closure algorithms.

#include <algorithm>
#include <set>
#include <vector>

#include "verba/group/table.hpp"

namespace oracle {

using verba::Element;
using verba::GroupTable;

/// Fixpoint of multiplying all pairs.
inline std::set<Element> closure(const GroupTable& g, std::set<Element> s) {
  s.insert(0);
  while (true) {
    std::set<Element> next = s;
    for (Element a : s)
      for (Element b : s) next.insert(g.mul(a, b));
    if (next == s) return s;
    s = std::move(next);
  }
}

inline Element commutator(const GroupTable& g, Element a, Element b) {
  Element ia = 0, ib = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (g.mul(a, x) == 0) ia = x;
    if (g.mul(b, x) == 0) ib = x;
  }
  return g.mul(g.mul(ia, ib), g.mul(a, b));
}

inline std::set<Element> derived_subgroup(const GroupTable& g) {
  std::set<Element> c;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) c.insert(commutator(g, a, b));
  return closure(g, c);
}

inline std::set<Element> members(const verba::Subgroup& h) {
  const auto v = h.elements();
  return {v.begin(), v.end()};
}

inline std::size_t order_of(const GroupTable& g, Element a) {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = g.mul(x, a)) ++k;
  return k;
}

/// All subgroups of a small group by testing every subset for closure.
inline std::vector<std::set<Element>> all_subsets_closed(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::set<Element>> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (!(mask & 1u)) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (std::size_t b = 0; b < n && ok; ++b)
        if ((mask >> b & 1u) && !(mask >> g.mul(static_cast<Element>(a), static_cast<Element>(b)) & 1u)) ok = false;
    }
    if (!ok) continue;
    std::set<Element> s;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1u) s.insert(static_cast<Element>(a));
    out.push_back(std::move(s));
  }
  return out;
}

/// Closures of every subset of at most k elements; all subgroups when every
/// subgroup is k-generated.
inline std::set<std::set<Element>> small_subset_closures(const GroupTable& g, unsigned k) {
  std::set<std::set<Element>> out;
  std::vector<Element> pick;
  auto rec = [&](auto&& self, Element from) -> void {
    out.insert(closure(g, {pick.begin(), pick.end()}));
    if (pick.size() == k) return;
    for (Element x = from; x < g.order(); ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace oracle
