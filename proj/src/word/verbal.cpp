#include "verba/word/verbal.hpp"

#include <algorithm>
#include <map>

#include "verba/error.hpp"
#include "verba/group/algorithms.hpp"
#include "verba/group/structure.hpp"

namespace verba {

Element evaluate(const Word& w, const GroupTable& g, std::span<const Element> args) {
  if (args.size() != w.arity())
    throw Error(ErrorKind::ArityMismatch, "word has arity " + std::to_string(w.arity()) + ", got " +
                                              std::to_string(args.size()) + " arguments");
  Element v = g.identity();
  for (const Letter& l : w.letters()) v = g.mul(v, algo::power(g, args[l.var], l.exp));
  return v;
}

bool has_fast_path(const Word& w) { return w.is_identity() || recognize(w).has_value(); }

namespace {

const Subgroup& series_term(const std::vector<Subgroup>& terms, std::size_t i) {
  return i < terms.size() ? terms[i] : terms.back();
}

Subgroup fast_path(const StdWord& s, const GroupTable& g, const Subgroup& h) {
  switch (s.kind) {
    case StdWordKind::Power:
      return power_subgroup(g, h, s.m);
    case StdWordKind::Gamma:
      return series_term(algo::lower_central_series(g, h), s.k - 1);
    case StdWordKind::Delta:
      return series_term(algo::derived_series(g, h), s.k);
    case StdWordKind::PowerCommutator: {
      const Subgroup pw = power_subgroup(g, h, s.m);
      const Subgroup gk = series_term(algo::lower_central_series(g, h), s.k - 1);
      return algo::join(g, pw, gk);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown standard word");
}

Subgroup enumerate_values(const Word& w, const GroupTable& g, const Subgroup& h, std::uint64_t budget) {
  const unsigned n = w.arity();
  const std::vector<Element> elems = h.elements();
  const std::uint64_t size = elems.size();
  std::uint64_t tuples = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (tuples > budget / size) {
      tuples = budget + 1;
      break;
    }
    tuples *= size;
  }
  if (tuples > budget)
    throw Error(ErrorKind::BudgetExceeded, "generic verbal enumeration needs " + std::to_string(size) + "^" +
                                               std::to_string(n) + " tuples, budget " + std::to_string(budget));

  // Powers of each element for every exponent occurring in the word.
  std::map<long long, std::size_t> exp_slot;
  for (const Letter& l : w.letters()) exp_slot.emplace(l.exp, 0);
  std::vector<std::vector<Element>> powers;
  for (auto& [e, slot] : exp_slot) {
    slot = powers.size();
    std::vector<Element> tab(g.order(), 0);
    for (Element x : elems) tab[x] = algo::power(g, x, e);
    powers.push_back(std::move(tab));
  }
  struct Step {
    unsigned var;
    const Element* pow;
  };
  std::vector<Step> steps;
  for (const Letter& l : w.letters()) steps.push_back({l.var, powers[exp_slot[l.exp]].data()});

  Bitset members(g.order());
  members.set(g.identity());
  std::vector<Element> gens;
  const std::size_t target = h.order();
  std::vector<std::size_t> idx(n, 0);
  std::vector<Element> args(n, elems.empty() ? 0 : elems[0]);
  while (true) {
    Element v = g.identity();
    for (const Step& s : steps) v = g.mul(v, s.pow[args[s.var]]);
    if (!members.test(v)) {
      algo::adjoin(g, members, gens, v);
      if (members.count() == target) break;
    }
    unsigned i = 0;
    for (; i < n; ++i) {
      if (++idx[i] < size) {
        args[i] = elems[idx[i]];
        break;
      }
      idx[i] = 0;
      args[i] = elems[0];
    }
    if (i == n) break;
  }
  return Subgroup(std::move(members), std::move(gens));
}

}  // namespace

Subgroup verbal_subgroup(const Word& w, const GroupTable& g, const VerbalOptions& opts) {
  return verbal_subgroup(w, g, whole_group(g), opts);
}

Subgroup verbal_subgroup(const Word& w, const GroupTable& g, const Subgroup& h, const VerbalOptions& opts) {
  if (w.is_identity() || h.is_trivial()) return Subgroup::trivial(g.order());
  if (opts.fast_paths)
    if (auto s = recognize(w)) return fast_path(*s, g, h);
  return enumerate_values(w, g, h, opts.budget);
}

}  // namespace verba
