#include "verba/lie/subrings.hpp"

#include <algorithm>
#include <set>

#include "verba/error.hpp"

namespace verba::lie {

namespace {

constexpr std::uint64_t kMaxOrder = 4096;

// Addition and bracket as tables over ring codes.
struct CodeRing {
  const LieRing& l;
  std::size_t n;
  std::vector<std::uint16_t> sum, br;

  explicit CodeRing(const LieRing& ring) : l(ring), n(ring.order()) {
    if (n > kMaxOrder)
      throw Error(ErrorKind::BudgetExceeded, "subring enumeration supports order <= " + std::to_string(kMaxOrder));
    std::vector<Vec> v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = l.decode(c);
    sum.resize(n * n);
    br.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        sum[a * n + b] = static_cast<std::uint16_t>(l.encode(l.add(v[a], v[b])));
        br[a * n + b] = static_cast<std::uint16_t>(l.encode(l.bracket(v[a], v[b])));
      }
  }
  [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return sum[a * n + b]; }
  [[nodiscard]] std::uint32_t lie(std::uint32_t a, std::uint32_t b) const { return br[a * n + b]; }
  [[nodiscard]] std::uint32_t scale(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 0;
    for (std::uint64_t i = 0; i < k; ++i) r = add(r, a);
    return r;
  }
};

struct Work {
  Bitset members;
  std::vector<std::uint32_t> elems;
  std::vector<std::uint32_t> gens;
};

// Adds g to the additive subgroup.
void adjoin_additive(const CodeRing& r, Work& w, std::uint32_t g) {
  const std::size_t base = w.elems.size();
  for (std::uint32_t t = g; !w.members.test(t); t = r.add(t, g))
    for (std::size_t i = 0; i < base; ++i) {
      const std::uint32_t c = r.add(w.elems[i], t);
      if (w.members.insert(c)) w.elems.push_back(c);
    }
}

void close(const CodeRing& r, Work& w, std::vector<std::uint32_t> pending) {
  while (!pending.empty()) {
    const std::uint32_t g = pending.back();
    pending.pop_back();
    if (w.members.test(g)) continue;
    for (std::uint32_t h : w.gens) {
      const std::uint32_t b = r.lie(g, h);
      if (b) pending.push_back(b);
    }
    adjoin_additive(r, w, g);
    w.gens.push_back(g);
  }
}

Work zero_work(std::size_t n) {
  Work w{Bitset(n), {0}, {}};
  w.members.set(0);
  return w;
}

Subring to_subring(const LieRing& l, Work w) {
  Subring s{std::move(w.members), {}};
  for (auto g : w.gens) s.generators.push_back(l.decode(g));
  return s;
}

struct CanonicalLess {
  bool operator()(const Bitset& a, const Bitset& b) const { return a.canonical_less(b); }
};

std::uint64_t frattini_index(const CodeRing& r, const std::vector<std::uint32_t>& gens, std::size_t order) {
  std::vector<std::uint32_t> f;
  for (auto g : gens) f.push_back(r.scale(g, r.l.prime()));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) f.push_back(r.lie(gens[i], gens[j]));
  Work w = zero_work(r.n);
  for (auto g : f) adjoin_additive(r, w, g);
  return order / w.elems.size();
}

}  // namespace

Subring subring_closure(const LieRing& l, const std::vector<Vec>& gens) {
  const CodeRing r(l);
  Work w = zero_work(r.n);
  std::vector<std::uint32_t> codes;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) codes.push_back(static_cast<std::uint32_t>(l.encode(l.reduce(*it))));
  close(r, w, codes);
  return to_subring(l, std::move(w));
}

namespace {

std::vector<Work> enumerate(const CodeRing& r, std::size_t budget) {
  std::vector<Work> found{zero_work(r.n)};
  std::set<Bitset, CanonicalLess> seen{found[0].members};
  for (std::size_t i = 0; i < found.size(); ++i) {
    Bitset done = found[i].members;
    for (std::uint32_t x = 1; x < r.n; ++x) {
      if (done.test(x)) continue;
      for (std::uint32_t c : found[i].elems) done.set(r.add(x, c));
      Work t = found[i];
      close(r, t, {x});
      if (seen.insert(t.members).second) {
        if (found.size() >= budget)
          throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " subrings");
        found.push_back(std::move(t));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Work& a, const Work& b) {
    return a.elems.size() != b.elems.size() ? a.elems.size() < b.elems.size()
                                            : a.members.canonical_less(b.members);
  });
  return found;
}

}  // namespace

std::vector<Subring> all_subrings(const LieRing& l, std::size_t budget) {
  const CodeRing r(l);
  std::vector<Subring> out;
  for (Work& w : enumerate(r, budget)) out.push_back(to_subring(l, std::move(w)));
  return out;
}

std::uint64_t frattini_index(const LieRing& l, const Subring& m) {
  const CodeRing r(l);
  std::vector<std::uint32_t> gens;
  for (const Vec& g : m.generators) gens.push_back(static_cast<std::uint32_t>(l.encode(l.reduce(g))));
  return frattini_index(r, gens, m.order());
}

GeneralDMax lie_d_maximal_general(const LieRing& l, std::size_t budget) {
  const CodeRing r(l);
  GeneralDMax res;
  const auto subs = enumerate(r, budget);
  res.subrings = subs.size();
  const Work& whole = subs.back();
  res.index = frattini_index(r, whole.gens, whole.elems.size());
  for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
    if (frattini_index(r, subs[i].gens, subs[i].elems.size()) >= res.index) {
      res.holds = false;
      res.witness = to_subring(l, subs[i]);
      break;
    }
  }
  return res;
}

}  // namespace verba::lie
