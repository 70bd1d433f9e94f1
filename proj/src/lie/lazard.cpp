#include "verba/lie/lazard.hpp"

#include <algorithm>

#include "verba/error.hpp"
#include "verba/group/algorithms.hpp"
#include "verba/group/spec.hpp"
#include "verba/group/structure.hpp"
#include "verba/numeric.hpp"

namespace verba::lie {

namespace {

std::string vec_label(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

LazardGroup lazard_exp(const LieRing& l, std::size_t cap) {
  if (l.prime() == 2) throw Error(ErrorKind::EvenPrime, "the class-2 Lazard correspondence needs an odd prime");
  bool nilpotent = true;
  const std::size_t cls = l.nilpotency_class(&nilpotent);
  if (!nilpotent || cls > 2)
    throw Error(ErrorKind::ClassTooLarge, "Lie ring has class " + (nilpotent ? std::to_string(cls) : std::string("infinity")) +
                                              "; only class <= 2 is supported");
  if (l.order() > cap)
    throw Error(ErrorKind::OrderExceedsCap, "order " + std::to_string(l.order()) + " exceeds cap " + std::to_string(cap));
  const std::int64_t h = mod_inverse(2, l.additive_exponent());

  ElementModel m;
  m.code_space = l.order();
  for (std::size_t i = 0; i < l.rank(); ++i) m.generators.push_back(l.encode(l.basis(i)));
  m.mul = [&l, h](std::uint64_t x, std::uint64_t y) {
    const Vec a = l.decode(x), b = l.decode(y);
    return l.encode(l.add(l.add(a, b), l.scale(l.bracket(a, b), h)));
  };
  m.label = [&l](std::uint64_t x) { return vec_label(l.decode(x)); };

  LazardGroup out;
  BuiltGroup built = bfs_materialize(m, cap, &out.code_of);
  out.group = std::move(built.table);
  out.index_of.assign(l.order(), 0);
  for (std::size_t i = 0; i < out.code_of.size(); ++i) out.index_of[out.code_of[i]] = static_cast<Element>(i);
  return out;
}

LieTable lazard_log(const GroupTable& g) {
  const std::size_t n = g.order();
  LieTable t;
  if (n == 1) {
    t.additive = g;
    t.bracket = {0};
    return t;
  }
  const auto base = prime_power_base(n);
  if (!base) throw Error(ErrorKind::NotAPGroup, "order " + std::to_string(n) + " is not a prime power");
  if (*base == 2) throw Error(ErrorKind::EvenPrime, "the class-2 Lazard correspondence needs an odd prime");
  t.p = static_cast<unsigned>(*base);
  const Series lcs = series(g, SeriesKind::LowerCentral);
  if (lcs.length > 2) throw Error(ErrorKind::ClassTooLarge, "group has class " + std::to_string(lcs.length));

  const auto h = mod_inverse(2, static_cast<std::int64_t>(exponent(g)));
  std::vector<Element> add(n * n), br(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto x = static_cast<Element>(i), y = static_cast<Element>(j);
      br[i * n + j] = algo::commutator(g, x, y);
      add[i * n + j] = g.mul(g.mul(x, y), algo::power(g, algo::commutator(g, y, x), h));
    }
  t.additive = GroupTable::trusted(n, std::move(add), g.labels());
  t.bracket = std::move(br);
  return t;
}

namespace {

/// Depth-first search for a basis of an abelian p-group; each new element
/// must enlarge the span by exactly its order.
struct BasisSearch {
  const GroupTable& a;
  std::size_t p;
  std::vector<Element> chosen;
  std::size_t budget = 100'000;

  bool run(const Bitset& span, std::size_t size) {
    if (size == a.order()) return true;
    if (budget == 0) return false;
    --budget;
    std::size_t best = 0;
    for (std::size_t x = 0; x < a.order(); ++x)
      if (!span.test(x)) best = std::max(best, a.element_order(static_cast<Element>(x)));
    const std::vector<Element> cur = span.to_vector();
    for (std::size_t ord = best; ord > 1; ord /= p) {
      bool any = false;
      for (std::size_t x = 0; x < a.order(); ++x) {
        const auto e = static_cast<Element>(x);
        if (span.test(x) || a.element_order(e) != ord) continue;
        Bitset next = span;
        std::size_t added = 0;
        Element pw = e;
        for (std::size_t k = 1; k < ord; ++k) {
          for (Element s : cur)
            if (next.insert(a.mul(s, pw))) ++added;
          pw = a.mul(pw, e);
        }
        if (size + added != size * ord) continue;
        any = true;
        chosen.push_back(e);
        if (run(next, size * ord)) return true;
        chosen.pop_back();
        if (budget == 0) return false;
      }
      if (any) return false;
    }
    return false;
  }
};

}  // namespace

LieRing LieTable::to_lie_ring(std::vector<Element>* basis_out) const {
  const std::size_t n = additive.order();
  if (n == 1) {
    if (basis_out) basis_out->clear();
    return LieRing(p);
  }
  BasisSearch search{additive, p, {}};
  Bitset span(n);
  span.set(0);
  if (!search.run(span, 1)) throw Error(ErrorKind::BudgetExceeded, "no additive basis found");
  const std::vector<Element>& basis = search.chosen;
  std::vector<unsigned> exps;
  for (Element b : basis) exps.push_back(exact_log(additive.element_order(b), p));

  std::vector<std::uint64_t> coord_of(n);
  std::vector<std::int64_t> mods;
  for (Element b : basis) mods.push_back(static_cast<std::int64_t>(additive.element_order(b)));
  for (std::uint64_t code = 0; code < n; ++code) {
    std::uint64_t c = code;
    Element x = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto m = static_cast<std::uint64_t>(mods[i]);
      x = additive.mul(x, algo::power(additive, basis[i], static_cast<long long>(c % m)));
      c /= m;
    }
    coord_of[x] = code;
  }
  auto decode = [&](std::uint64_t code) {
    Vec v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      v[i] = static_cast<std::int64_t>(code % static_cast<std::uint64_t>(mods[i]));
      code /= static_cast<std::uint64_t>(mods[i]);
    }
    return v;
  };
  std::vector<LieRing::Bracket> brs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Vec c = decode(coord_of[lie(basis[i], basis[j])]);
      if (std::any_of(c.begin(), c.end(), [](auto v) { return v != 0; }))
        brs.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), std::move(c)});
    }
  if (basis_out) *basis_out = basis;
  return LieRing::make(p, std::move(exps), brs);
}

bool matches_ring(const LieTable& t, const LieRing& l, const std::vector<std::uint64_t>& code_of) {
  const std::size_t n = t.additive.order();
  if (n != l.order() || code_of.size() != n) return false;
  std::vector<Vec> vecs(n);
  for (std::size_t i = 0; i < n; ++i) vecs[i] = l.decode(code_of[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto x = static_cast<Element>(i), y = static_cast<Element>(j);
      if (code_of[t.add(x, y)] != l.encode(l.add(vecs[i], vecs[j]))) return false;
      if (code_of[t.lie(x, y)] != l.encode(l.bracket(vecs[i], vecs[j]))) return false;
    }
  return true;
}

}  // namespace verba::lie
