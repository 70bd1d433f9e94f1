#pragma once

// Closure algorithms shared by Cayley tables and by structured groups whose
// elements are densely encoded as integers (no multiplication table).

#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "verba/bitset.hpp"
#include "verba/group/table.hpp"

namespace verba {

template <class M>
concept FiniteGroupModel = requires(const M& g, Element a) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.mul(a, a) } -> std::convertible_to<Element>;
  { g.inv(a) } -> std::convertible_to<Element>;
  { g.identity() } -> std::convertible_to<Element>;
};

namespace algo {

template <FiniteGroupModel M>
Element power(const M& g, Element a, long long e) {
  if (e < 0) {
    a = g.inv(a);
    e = -e;
  }
  Element result = g.identity();
  while (e > 0) {
    if (e & 1) result = g.mul(result, a);
    e >>= 1;
    if (e) a = g.mul(a, a);
  }
  return result;
}

/// [a,b] = a^-1 b^-1 a b
template <FiniteGroupModel M>
Element commutator(const M& g, Element a, Element b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

/// x^a = a^-1 x a
template <FiniteGroupModel M>
Element conjugate(const M& g, Element x, Element a) {
  return g.mul(g.mul(g.inv(a), x), a);
}

template <FiniteGroupModel M>
std::size_t element_order(const M& g, Element a) {
  std::size_t k = 1;
  Element x = a;
  while (x != g.identity()) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

/// Adds g to the subgroup (members, gens) and closes under multiplication.
template <FiniteGroupModel M>
void adjoin(const M& grp, Bitset& members, std::vector<Element>& gens, Element g) {
  if (members.test(g)) return;
  gens.push_back(g);
  // Old elements only need the new generator; new ones need all of them.
  std::vector<Element> queue;
  for (Element x : members.to_vector()) {
    const Element y = grp.mul(x, g);
    if (members.insert(y)) queue.push_back(y);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Element x = queue[qi];
    for (Element s : gens) {
      const Element y = grp.mul(x, s);
      if (members.insert(y)) queue.push_back(y);
    }
  }
}

template <FiniteGroupModel M>
Subgroup generate(const M& grp, std::span<const Element> gens) {
  Bitset members(grp.order());
  members.set(grp.identity());
  std::vector<Element> used;
  for (Element g : gens) adjoin(grp, members, used, g);
  return Subgroup(std::move(members), std::move(used));
}

template <FiniteGroupModel M>
Subgroup generate(const M& grp, std::initializer_list<Element> gens) {
  return generate(grp, std::span<const Element>(gens.begin(), gens.size()));
}

/// Smallest normal subgroup of <ambient> containing `gens`, assuming the
/// ambient generators normalise nothing in particular.
template <FiniteGroupModel M>
Subgroup normal_closure(const M& grp, std::span<const Element> gens,
                        std::span<const Element> ambient) {
  Bitset members(grp.order());
  members.set(grp.identity());
  std::vector<Element> used;
  for (Element g : gens) adjoin(grp, members, used, g);
  for (std::size_t i = 0; i < used.size(); ++i) {
    for (Element a : ambient) {
      const Element c = conjugate(grp, used[i], a);
      if (!members.test(c)) adjoin(grp, members, used, c);
    }
  }
  return Subgroup(std::move(members), std::move(used));
}

/// Join of two subgroups.
template <FiniteGroupModel M>
Subgroup join(const M& grp, const Subgroup& a, const Subgroup& b) {
  Bitset members = a.members();
  std::vector<Element> gens = a.generators();
  for (Element g : b.generators()) adjoin(grp, members, gens, g);
  return Subgroup(std::move(members), std::move(gens));
}

/// [A,B] for subgroups normalised by the ambient generators.
template <FiniteGroupModel M>
Subgroup commutator_of(const M& grp, const Subgroup& a, const Subgroup& b,
                       std::span<const Element> ambient) {
  std::vector<Element> comms;
  for (Element x : a.generators())
    for (Element y : b.generators()) {
      const Element c = commutator(grp, x, y);
      if (c != grp.identity()) comms.push_back(c);
    }
  return normal_closure(grp, comms, ambient);
}

/// <x^m : x in within>
template <FiniteGroupModel M>
Subgroup power_subgroup(const M& grp, const Bitset& within, long long m) {
  Bitset members(grp.order());
  members.set(grp.identity());
  std::vector<Element> gens;
  within.for_each([&](std::size_t x) {
    const Element y = power(grp, static_cast<Element>(x), m);
    if (!members.test(y)) adjoin(grp, members, gens, y);
  });
  return Subgroup(std::move(members), std::move(gens));
}

/// Lower central series of H: gamma_1 = H, gamma_{i+1} = [gamma_i, H],
/// until stabilisation (the last entry repeats no term).
template <FiniteGroupModel M>
std::vector<Subgroup> lower_central_series(const M& grp, const Subgroup& h) {
  std::vector<Subgroup> terms{h};
  while (true) {
    Subgroup next = commutator_of(grp, terms.back(), h, h.generators());
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

template <FiniteGroupModel M>
std::vector<Subgroup> derived_series(const M& grp, const Subgroup& h) {
  std::vector<Subgroup> terms{h};
  while (true) {
    const Subgroup& cur = terms.back();
    Subgroup next = commutator_of(grp, cur, cur, h.generators());
    if (next == cur) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

/// Whether the ambient generators normalise S.
template <FiniteGroupModel M>
bool normalises(const M& grp, const Subgroup& s, std::span<const Element> ambient) {
  for (Element a : ambient)
    for (Element x : s.generators())
      if (!s.contains(conjugate(grp, x, a))) return false;
  return true;
}

/// A generating set for the subgroup with the given members, chosen greedily
/// in increasing element order.
template <FiniteGroupModel M>
std::vector<Element> greedy_generators(const M& grp, const Bitset& members) {
  Bitset cur(grp.order());
  cur.set(grp.identity());
  std::vector<Element> gens;
  members.for_each([&](std::size_t x) {
    if (!cur.test(x)) adjoin(grp, cur, gens, static_cast<Element>(x));
  });
  return gens;
}

template <FiniteGroupModel M>
Subgroup from_members(const M& grp, Bitset members) {
  auto gens = greedy_generators(grp, members);
  return Subgroup(std::move(members), std::move(gens));
}

}  // namespace algo
}  // namespace verba
