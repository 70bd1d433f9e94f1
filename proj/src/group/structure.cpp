#include "verba/group/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "verba/error.hpp"
#include "verba/group/algorithms.hpp"
#include "verba/numeric.hpp"

namespace verba {

Subgroup whole_group(const GroupTable& g) {
  Bitset all(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) all.set(i);
  return algo::from_members(g, std::move(all));
}

Subgroup subgroup_from_members(const GroupTable& g, Bitset members) {
  return algo::from_members(g, std::move(members));
}

Subgroup subgroup_generated(const GroupTable& g, const std::vector<Element>& gens) {
  return algo::generate(g, std::span<const Element>(gens));
}

bool is_normal(const GroupTable& g, const Subgroup& s) {
  const Subgroup all = whole_group(g);
  return algo::normalises(g, s, all.generators());
}

bool is_normalised_by(const GroupTable& g, const Subgroup& s, const Subgroup& within) {
  return algo::normalises(g, s, within.generators());
}

Quotient quotient(const GroupTable& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  const std::size_t order = g.order();
  constexpr Element unset = ~Element{0};
  std::vector<Element> coset(order, unset);
  std::vector<Element> reps;
  const auto members = n.elements();
  for (std::size_t x = 0; x < order; ++x) {
    if (coset[x] != unset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (Element m : members) coset[g.mul(static_cast<Element>(x), m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> mul(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) mul[a * q + b] = coset[g.mul(reps[a], reps[b])];
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(q);
    for (Element r : reps) labels.push_back(g.label(r) + "N");
  }
  GroupTable qt = GroupTable::trusted(q, std::move(mul), std::move(labels));
  return Quotient{qt, Homomorphism{g, qt, std::move(coset)}};
}

Subgroup commutator_subgroup(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  if (!is_normal(g, a) || !is_normal(g, b))
    throw Error(ErrorKind::NotNormal, "commutator_subgroup needs normal subgroups");
  const Subgroup all = whole_group(g);
  return algo::commutator_of(g, a, b, all.generators());
}

Series series(const GroupTable& g, SeriesKind kind) { return series(g, whole_group(g), kind); }

Series series(const GroupTable& g, const Subgroup& h, SeriesKind kind) {
  Series s;
  s.terms = kind == SeriesKind::LowerCentral ? algo::lower_central_series(g, h)
                                             : algo::derived_series(g, h);
  s.reaches_trivial = s.terms.back().is_trivial();
  s.length = s.reaches_trivial ? s.terms.size() - 1 : 0;
  return s;
}

Subgroup power_subgroup(const GroupTable& g, long long m) {
  return power_subgroup(g, whole_group(g), m);
}

Subgroup power_subgroup(const GroupTable& g, const Subgroup& h, long long m) {
  return algo::power_subgroup(g, h.members(), m);
}

Subgroup center(const GroupTable& g) { return center(g, whole_group(g)); }

Subgroup center(const GroupTable& g, const Subgroup& h) {
  Bitset z(g.order());
  h.members().for_each([&](std::size_t x) {
    const auto e = static_cast<Element>(x);
    for (Element s : h.generators())
      if (g.mul(e, s) != g.mul(s, e)) return;
    z.set(x);
  });
  return algo::from_members(g, std::move(z));
}

Subgroup centralizer(const GroupTable& g, const Subgroup& s) {
  Bitset c(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    bool ok = true;
    for (Element t : s.generators())
      if (g.mul(e, t) != g.mul(t, e)) {
        ok = false;
        break;
      }
    if (ok) c.set(x);
  }
  return algo::from_members(g, std::move(c));
}

Subgroup normalizer(const GroupTable& g, const Subgroup& s) {
  Bitset c(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    bool ok = true;
    for (Element t : s.generators())
      if (!s.contains(algo::conjugate(g, t, e))) {
        ok = false;
        break;
      }
    if (ok) c.set(x);
  }
  return algo::from_members(g, std::move(c));
}

std::size_t exponent(const GroupTable& g) { return exponent(g, whole_group(g)); }

std::size_t exponent(const GroupTable& g, const Subgroup& h) {
  std::size_t e = 1;
  h.members().for_each([&](std::size_t x) { e = std::lcm(e, g.element_order(static_cast<Element>(x))); });
  return e;
}

std::vector<std::size_t> element_orders(const GroupTable& g) {
  std::vector<std::size_t> out(g.element_orders().begin(), g.element_orders().end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_abelian(const GroupTable& g, const Subgroup& h) {
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

std::optional<std::size_t> p_group_prime(const Subgroup& h) {
  if (h.order() <= 1) return std::nullopt;
  auto p = prime_power_base(h.order());
  if (!p) return std::nullopt;
  return static_cast<std::size_t>(*p);
}

GroupTable restrict_to(const GroupTable& g, const Subgroup& h, std::vector<Element>* embedding) {
  const auto elems = h.elements();
  const std::size_t n = elems.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[elems[i]] = static_cast<Element>(i);
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = g.row(elems[i]);
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = local[row[elems[j]]];
  }
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Element e : elems) labels.push_back(g.label(e));
  if (embedding) *embedding = elems;
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

// ---------------------------------------------------------------------------
// Isomorphism testing

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Per-element invariant: element order, centraliser size, number of
/// square roots, order of the square and membership in the derived, lower
/// central and power subgroups and the centre, refined once by products.
std::vector<std::uint64_t> element_keys(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> roots(n, 0);
  for (std::size_t x = 0; x < n; ++x) ++roots[g.mul(static_cast<Element>(x), static_cast<Element>(x))];
  std::vector<std::uint64_t> keys(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint64_t cent = 0;
    const auto ex = static_cast<Element>(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ey = static_cast<Element>(y);
      if (g.mul(ex, ey) == g.mul(ey, ex)) ++cent;
    }
    const Element sq = g.mul(ex, ex);
    keys[x] = mix(mix(mix(g.element_order(ex)) ^ cent) ^ roots[x]) ^ (g.element_order(sq) << 1);
  }
  // Membership in characteristic subgroups.
  std::vector<Subgroup> chars;
  for (auto kind : {SeriesKind::Derived, SeriesKind::LowerCentral}) {
    const Series s = series(g, kind);
    for (std::size_t i = 1; i < s.terms.size(); ++i) chars.push_back(s.terms[i]);
  }
  chars.push_back(center(g));
  for (const auto& [p, e] : factorize(n)) {
    std::uint64_t q = p;
    for (unsigned i = 0; i < e; ++i, q *= p) chars.push_back(power_subgroup(g, static_cast<long long>(q)));
  }
  for (std::size_t c = 0; c < chars.size(); ++c)
    for (std::size_t x = 0; x < n; ++x)
      if (chars[c].contains(static_cast<Element>(x))) keys[x] = mix(keys[x] ^ (c + 1) * 0x51ed27ULL);
  // One refinement round: the multiset of (key(y), key(xy)) over all y.
  if (n <= 1024) {
    std::vector<std::uint64_t> refined(n), row(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y)
        row[y] = mix(keys[y] * 0x100000001b3ULL ^ keys[g.mul(static_cast<Element>(x), static_cast<Element>(y))]);
      std::sort(row.begin(), row.end());
      std::uint64_t h = keys[x];
      for (auto r : row) h = mix(h ^ r);
      refined[x] = h;
    }
    keys = std::move(refined);
  }
  return keys;
}

std::uint64_t signature_from(const GroupTable& g, const std::vector<std::uint64_t>& keys) {
  std::vector<std::uint64_t> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t h = mix(g.order());
  for (auto k : sorted) h = mix(h ^ k);
  for (auto kind : {SeriesKind::Derived, SeriesKind::LowerCentral}) {
    const Series s = series(g, kind);
    for (const auto& t : s.terms) h = mix(h ^ t.order());
    h = mix(h ^ 0xabcdefULL);
  }
  h = mix(h ^ center(g).order());
  const Series derived = series(g, SeriesKind::Derived);
  for (const auto& [p, e] : factorize(g.order())) {
    std::uint64_t q = p;
    for (unsigned i = 0; i < e && q <= g.order(); ++i, q *= p) {
      const Subgroup pw = power_subgroup(g, static_cast<long long>(q));
      std::vector<Element> gens = pw.generators();
      if (derived.terms.size() > 1)
        for (Element x : derived.terms[1].generators()) gens.push_back(x);
      h = mix(h ^ pw.order());
      h = mix(h ^ (subgroup_generated(g, gens).order() << 20));
    }
  }
  return h;
}

class IsoSearch {
 public:
  IsoSearch(const GroupTable& g, const GroupTable& h, std::vector<std::uint64_t> kg,
            std::vector<std::uint64_t> kh, std::size_t budget)
      : g_(g), h_(h), kg_(std::move(kg)), kh_(std::move(kh)), budget_(budget) {}

  std::optional<Homomorphism> run() {
    const std::size_t n = g_.order();
    std::unordered_map<std::uint64_t, std::size_t> freq;
    for (auto k : kg_) ++freq[k];
    // Generators of G: the largest span first, then the rarest invariant,
    // then the larger order; one representative per invariant is tried.
    Bitset span(n);
    span.set(0);
    std::vector<Element> sgens;
    while (span.count() < n) {
      std::unordered_map<std::uint64_t, Element> reps;
      for (std::size_t x = 0; x < n; ++x)
        if (!span.test(x)) reps.try_emplace(kg_[x], static_cast<Element>(x));
      Element best = 0;
      std::size_t best_span = 0;
      for (std::size_t x = 0; x < n; ++x) {
        const auto e = static_cast<Element>(x);
        if (span.test(x) || reps[kg_[e]] != e) continue;
        Bitset trial = span;
        std::vector<Element> tg = sgens;
        algo::adjoin(g_, trial, tg, e);
        const std::size_t sz = trial.count();
        if (best_span == 0 || sz > best_span ||
            (sz == best_span && (freq[kg_[e]] < freq[kg_[best]] ||
                                 (freq[kg_[e]] == freq[kg_[best]] && g_.element_order(e) > g_.element_order(best))))) {
          best = e;
          best_span = sz;
        }
      }
      algo::adjoin(g_, span, sgens, best);
    }
    gens_ = sgens;
    candidates_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t y = 0; y < n; ++y)
        if (kh_[y] == kg_[gens_[i]]) candidates_[i].push_back(static_cast<Element>(y));
    std::vector<Element> img(n, kUnset);
    img[0] = 0;
    if (dfs(0, img)) {
      return Homomorphism{g_, h_, result_};
    }
    return std::nullopt;
  }

 private:
  static constexpr Element kUnset = ~Element{0};

  bool dfs(std::size_t depth, const std::vector<Element>& img) {
    if (depth == gens_.size()) {
      result_ = img;
      return true;
    }
    for (Element cand : candidates_[depth]) {
      if (++nodes_ > budget_)
        throw Error(ErrorKind::SearchBudgetExceeded, "isomorphism search node budget exhausted");
      std::vector<Element> next;
      if (extend(depth, img, cand, next) && dfs(depth + 1, next)) return true;
    }
    return false;
  }

  // Extends the map from <g_0..g_{d-1}> to <g_0..g_d> with g_d -> cand.
  bool extend(std::size_t depth, const std::vector<Element>& img, Element cand,
              std::vector<Element>& out) const {
    const std::size_t n = g_.order();
    out.assign(n, kUnset);
    std::vector<char> used(n, 0);
    out[0] = 0;
    used[0] = 1;
    std::vector<Element> queue{0};
    auto image_of = [&](std::size_t i) { return i == depth ? cand : img[gens_[i]]; };
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Element x = queue[qi];
      for (std::size_t i = 0; i <= depth; ++i) {
        const Element y = g_.mul(x, gens_[i]);
        const Element t = h_.mul(out[x], image_of(i));
        if (out[y] != kUnset) {
          if (out[y] != t) return false;
          continue;
        }
        if (used[t] || kh_[t] != kg_[y]) return false;
        if (img[y] != kUnset && img[y] != t) return false;
        out[y] = t;
        used[t] = 1;
        queue.push_back(y);
      }
    }
    return true;
  }

  const GroupTable& g_;
  const GroupTable& h_;
  std::vector<std::uint64_t> kg_, kh_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> result_;
};

}  // namespace

std::uint64_t iso_signature(const GroupTable& g) { return signature_from(g, element_keys(g)); }

std::optional<Homomorphism> is_isomorphic(const GroupTable& g, const GroupTable& h,
                                          const IsoOptions& opts) {
  if (g.order() != h.order()) return std::nullopt;
  if (element_orders(g) != element_orders(h)) return std::nullopt;
  if (exponent(g) != exponent(h)) return std::nullopt;
  auto kg = element_keys(g);
  auto kh = element_keys(h);
  if (signature_from(g, kg) != signature_from(h, kh)) return std::nullopt;
  IsoSearch search(g, h, std::move(kg), std::move(kh), opts.node_budget);
  return search.run();
}

}  // namespace verba
