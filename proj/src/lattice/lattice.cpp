#include "verba/lattice/lattice.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "verba/error.hpp"
#include "verba/group/algorithms.hpp"
#include "verba/group/structure.hpp"
#include "verba/lattice/cache.hpp"
#include "verba/numeric.hpp"

namespace verba {

SubgroupLattice::SubgroupLattice(GroupTable parent, std::vector<Subgroup> subgroups)
    : parent_(std::move(parent)), subs_(std::move(subgroups)) {
  std::sort(subs_.begin(), subs_.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.canonical_less(b); });
  index_.reserve(subs_.size() * 2);
  for (std::size_t i = 0; i < subs_.size(); ++i) index_.emplace(subs_[i].members(), i);
  normal_.resize(subs_.size());
  const Subgroup all = whole_group(parent_);
  for (std::size_t i = 0; i < subs_.size(); ++i)
    normal_[i] = algo::normalises(parent_, subs_[i], all.generators()) ? 1 : 0;
}

std::optional<std::size_t> SubgroupLattice::index_of(const Bitset& members) const {
  const auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void SubgroupLattice::set_maximal(std::vector<std::vector<std::size_t>> maximal) {
  maximal_ = std::move(maximal);
  finish();
}

void SubgroupLattice::derive_covers() {
  const std::size_t n = subs_.size();
  maximal_.assign(n, {});
  for (std::size_t t = 0; t < n; ++t) {
    // Candidates in decreasing order; a proper subgroup is maximal iff it
    // lies in no maximal subgroup found so far.
    auto& found = maximal_[t];
    for (std::size_t s = t; s-- > 0;) {
      if (subs_[s].order() == subs_[t].order()) continue;
      if (subs_[t].order() % subs_[s].order() != 0) continue;
      if (!subs_[s].is_subgroup_of(subs_[t])) continue;
      bool inside = false;
      for (std::size_t m : found)
        if (subs_[s].is_subgroup_of(subs_[m])) {
          inside = true;
          break;
        }
      if (!inside) found.push_back(s);
    }
    std::sort(found.begin(), found.end());
  }
  finish();
}

void SubgroupLattice::finish() {
  covers_.assign(subs_.size(), {});
  for (std::size_t t = 0; t < maximal_.size(); ++t)
    for (std::size_t s : maximal_[t]) covers_[s].push_back(t);
}

namespace {

void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap)
    throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " subgroups");
}

// Layered enumeration for p-groups: every subgroup T of order p|S| arises as
// S<g> for a maximal subgroup S of T and g in N(S) \ S with g^p in S, and
// then T is the union of the cosets S g^i. Covers come out directly.
SubgroupLattice layered_p_group(const GroupTable& g, std::size_t p, const LatticeOptions& opts) {
  const std::size_t n = g.order();
  std::vector<Bitset> subs{[&] {
    Bitset b(n);
    b.set(0);
    return b;
  }()};
  std::unordered_map<Bitset, std::size_t, BitsetHash> index{{subs[0], 0}};
  std::vector<std::vector<std::size_t>> maximal(1);

  std::size_t layer_begin = 0, layer_end = 1;
  while (layer_begin < layer_end) {
    for (std::size_t si = layer_begin; si < layer_end; ++si) {
      const Bitset s = subs[si];
      const std::vector<Element> sv = s.to_vector();
      const std::vector<Element> sg = algo::greedy_generators(g, s);
      Bitset done = s;
      for (Element x = 0; x < n; ++x) {
        if (done.test(x)) continue;
        if (!s.test(algo::power(g, x, static_cast<long long>(p)))) continue;
        bool normalises = true;
        for (Element y : sg)
          if (!s.test(algo::conjugate(g, y, x))) {
            normalises = false;
            break;
          }
        if (!normalises) continue;
        Bitset t = s;
        Element xi = x;
        for (std::size_t i = 1; i < p; ++i, xi = g.mul(xi, x))
          for (Element a : sv) t.set(g.mul(a, xi));
        // Every element of T \ S generates T together with S.
        done |= t;
        auto [it, inserted] = index.emplace(t, subs.size());
        if (inserted) {
          subs.push_back(std::move(t));
          maximal.emplace_back();
          check_cap(subs.size(), opts.cap);
        }
        maximal[it->second].push_back(si);
      }
    }
    layer_begin = layer_end;
    layer_end = subs.size();
  }

  std::vector<Subgroup> out;
  out.reserve(subs.size());
  for (const Bitset& b : subs) out.push_back(algo::from_members(g, b));
  SubgroupLattice lat(g, std::move(out));
  // Translate generation indices to sorted lattice indices.
  std::vector<std::size_t> to_sorted(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) to_sorted[i] = *lat.index_of(subs[i]);
  std::vector<std::vector<std::size_t>> sorted_max(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto& dst = sorted_max[to_sorted[i]];
    for (std::size_t m : maximal[i]) dst.push_back(to_sorted[m]);
    std::sort(dst.begin(), dst.end());
    dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
  }
  lat.set_maximal(std::move(sorted_max));
  return lat;
}

// Fixpoint of joining subgroups with cyclic subgroups, seeded by the cyclic
// subgroups themselves.
std::vector<Subgroup> cyclic_joins(const GroupTable& g, const LatticeOptions& opts) {
  const std::size_t n = g.order();
  std::vector<Subgroup> subs;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  auto add = [&](Subgroup s) {
    if (index.emplace(s.members(), subs.size()).second) {
      subs.push_back(std::move(s));
      check_cap(subs.size(), opts.cap);
    }
  };
  add(Subgroup::trivial(n));
  std::vector<Element> cyclic_gens;
  for (Element x = 1; x < n; ++x) {
    Subgroup c = algo::generate(g, {x});
    if (index.count(c.members()) == 0) cyclic_gens.push_back(x);
    add(std::move(c));
  }
  for (std::size_t i = 1; i < subs.size(); ++i) {
    for (Element x : cyclic_gens) {
      if (subs[i].contains(x)) continue;
      Bitset members = subs[i].members();
      std::vector<Element> gens = subs[i].generators();
      algo::adjoin(g, members, gens, x);
      if (index.count(members)) continue;
      add(Subgroup(std::move(members), std::move(gens)));
    }
  }
  return subs;
}

}  // namespace

SubgroupLattice build_lattice(const GroupTable& g, const LatticeOptions& opts) {
  if (g.order() > 1) {
    if (const auto p = prime_power_base(g.order())) return layered_p_group(g, *p, opts);
  }
  SubgroupLattice lat(g, cyclic_joins(g, opts));
  lat.derive_covers();
  return lat;
}

SubgroupLattice all_subgroups(const GroupTable& g, const LatticeOptions& opts) {
  if (!opts.cache_dir.empty()) {
    if (auto cached = load_cached_lattice(g, opts.cache_dir)) {
      check_cap(cached->size(), opts.cap);
      return std::move(*cached);
    }
  }
  SubgroupLattice lat = build_lattice(g, opts);
  if (!opts.cache_dir.empty()) store_cached_lattice(lat, opts.cache_dir);
  return lat;
}

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lat) {
  std::vector<Subgroup> out;
  for (std::size_t i : lat.maximal_of(lat.whole_index())) out.push_back(lat[i]);
  return out;
}

std::vector<Subgroup> normal_subgroups(const SubgroupLattice& lat) {
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.is_normal(i)) out.push_back(lat[i]);
  return out;
}

Subgroup frattini(const SubgroupLattice& lat) {
  const auto& max = lat.maximal_of(lat.whole_index());
  if (max.empty()) return lat[lat.whole_index()];
  Bitset b = lat[max[0]].members();
  for (std::size_t i : max) b &= lat[i].members();
  return algo::from_members(lat.parent(), std::move(b));
}

std::vector<Subgroup> normal_subgroups(const GroupTable& g) { return normal_subgroups(g, whole_group(g)); }

std::vector<Subgroup> normal_subgroups(const GroupTable& g, const Subgroup& h) {
  const std::size_t n = g.order();
  std::vector<Subgroup> out;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  auto add = [&](Subgroup s) {
    if (!index.emplace(s.members(), out.size()).second) return false;
    out.push_back(std::move(s));
    return true;
  };
  add(Subgroup::trivial(n));
  std::vector<std::size_t> seeds;
  h.members().for_each([&](std::size_t x) {
    if (x == 0) return;
    const Element e = static_cast<Element>(x);
    Subgroup c = algo::normal_closure(g, std::span<const Element>(&e, 1), h.generators());
    const auto it = index.find(c.members());
    if (it != index.end()) return;
    seeds.push_back(out.size());
    add(std::move(c));
  });
  const std::vector<std::size_t> seed_list = seeds;
  for (std::size_t i = 1; i < out.size(); ++i) {
    for (std::size_t s : seed_list) {
      if (out[s].is_subgroup_of(out[i])) continue;
      Subgroup j = algo::join(g, out[i], out[s]);
      if (index.count(j.members())) continue;
      add(std::move(j));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.canonical_less(b); });
  return out;
}

Subgroup frattini_p_group(const GroupTable& g, const Subgroup& h) {
  const auto p = p_group_prime(h);
  if (!p) {
    if (h.is_trivial()) return h;
    throw Error(ErrorKind::NotAPGroup, "Frattini shortcut needs a p-group");
  }
  const Subgroup derived = algo::commutator_of(g, h, h, h.generators());
  const Subgroup powers = algo::power_subgroup(g, h.members(), static_cast<long long>(*p));
  return algo::join(g, derived, powers);
}

unsigned min_generators(const GroupTable& g) { return min_generators(g, whole_group(g)); }

unsigned min_generators(const GroupTable& g, const Subgroup& h) {
  if (h.is_trivial()) return 0;
  if (const auto p = p_group_prime(h)) {
    const Subgroup phi = frattini_p_group(g, h);
    return exact_log(h.order() / phi.order(), *p);
  }
  return min_generators_search(g, h);
}

unsigned min_generators_search(const GroupTable& g, const Subgroup& h) {
  if (h.is_trivial()) return 0;
  const std::size_t n = g.order();
  const std::vector<Element> hv = h.elements();

  // Cyclic subgroups of H up to conjugation in H.
  std::vector<Subgroup> level;
  {
    std::unordered_map<Bitset, char, BitsetHash> seen;
    for (Element x : hv) {
      if (x == 0) continue;
      Subgroup c = algo::generate(g, {x});
      if (c == h) return 1;
      if (!seen.emplace(c.members(), 1).second) continue;
      std::vector<Bitset> orbit{c.members()};
      for (std::size_t oi = 0; oi < orbit.size(); ++oi) {
        for (Element b : h.generators()) {
          Bitset img(n);
          orbit[oi].for_each([&](std::size_t y) { img.set(algo::conjugate(g, static_cast<Element>(y), b)); });
          if (seen.emplace(img, 1).second) orbit.push_back(std::move(img));
        }
      }
      level.push_back(std::move(c));
    }
  }
  for (unsigned k = 1;; ++k) {
    std::vector<Subgroup> next;
    std::unordered_map<Bitset, char, BitsetHash> seen;
    for (const Subgroup& s : level) {
      Bitset cosets = s.members();
      for (Element x : hv) {
        if (cosets.test(x)) continue;
        // <S, x> depends only on the coset S x.
        s.members().for_each([&](std::size_t a) { cosets.set(g.mul(static_cast<Element>(a), x)); });
        Bitset members = s.members();
        std::vector<Element> gens = s.generators();
        algo::adjoin(g, members, gens, x);
        if (members.count() == h.order()) return k + 1;
        if (seen.emplace(members, 1).second) next.emplace_back(std::move(members), std::move(gens));
      }
    }
    if (next.empty()) throw Error(ErrorKind::InvalidArgument, "generator search did not reach the subgroup");
    level = std::move(next);
  }
}

std::vector<unsigned> Equichain::length_list() const {
  std::vector<unsigned> out;
  for (unsigned l = 0; l < 64; ++l)
    if (lengths >> l & 1u) out.push_back(l);
  return out;
}

std::vector<std::uint64_t> chain_lengths(const SubgroupLattice& lat) {
  std::vector<std::uint64_t> len(lat.size(), 0);
  len[0] = 1;
  // Sorted by order, so maximal subgroups come first.
  for (std::size_t i = 1; i < lat.size(); ++i)
    for (std::size_t m : lat.maximal_of(i)) len[i] |= len[m] << 1;
  return len;
}

Equichain equichained(const SubgroupLattice& lat) {
  const std::uint64_t l = chain_lengths(lat).back();
  return {std::popcount(l) == 1, l};
}

std::optional<std::vector<std::size_t>> chain_of_length(const SubgroupLattice& lat, unsigned length) {
  const auto len = chain_lengths(lat);
  std::size_t cur = lat.whole_index();
  if (length >= 64 || !(len[cur] >> length & 1u)) return std::nullopt;
  std::vector<std::size_t> chain{cur};
  for (unsigned l = length; l > 0; --l) {
    for (std::size_t m : lat.maximal_of(cur))
      if (len[m] >> (l - 1) & 1u) {
        cur = m;
        break;
      }
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<unsigned> sample_chain_lengths(const SubgroupLattice& lat, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<unsigned> out;
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t cur = lat.whole_index();
    unsigned l = 0;
    while (cur != lat.trivial_index()) {
      const auto& m = lat.maximal_of(cur);
      cur = m[rng() % m.size()];
      ++l;
    }
    out.push_back(l);
  }
  return out;
}

std::optional<std::vector<Subgroup>> supersoluble_series(const GroupTable& g) {
  const auto normals = normal_subgroups(g);
  std::vector<Subgroup> series{normals.front()};
  while (series.back().order() != g.order()) {
    const Subgroup& cur = series.back();
    const Subgroup* pick = nullptr;
    for (const Subgroup& m : normals) {
      if (m.order() <= cur.order() || m.order() % cur.order() != 0) continue;
      if (!is_prime(m.order() / cur.order()) || !cur.is_subgroup_of(m)) continue;
      pick = &m;
      break;
    }
    if (!pick) return std::nullopt;
    series.push_back(*pick);
  }
  return series;
}

bool is_supersoluble(const GroupTable& g) { return supersoluble_series(g).has_value(); }

std::vector<Subgroup> composition_series(const GroupTable& g) {
  std::vector<Subgroup> out{whole_group(g)};
  while (!out.back().is_trivial()) {
    const Subgroup cur = out.back();
    const auto ns = normal_subgroups(g, cur);
    std::vector<const Subgroup*> maximal;
    for (const Subgroup& s : ns) {
      if (s.order() == cur.order()) continue;
      bool is_max = true;
      for (const Subgroup& t : ns)
        if (t.order() != cur.order() && t.order() > s.order() && s.is_subgroup_of(t)) {
          is_max = false;
          break;
        }
      if (is_max) maximal.push_back(&s);
    }
    const Subgroup* best = maximal.front();
    for (const Subgroup* s : maximal)
      if (s->members().canonical_less(best->members())) best = s;
    out.push_back(*best);
  }
  return out;
}

bool is_simple(const GroupTable& g) { return g.order() > 1 && normal_subgroups(g).size() == 2; }

std::optional<Subgroup> sylow(const SubgroupLattice& lat, std::uint64_t p) {
  const Subgroup* best = nullptr;
  for (const Subgroup& s : lat.subgroups()) {
    std::uint64_t o = s.order();
    while (o % p == 0) o /= p;
    if (o != 1) continue;
    if (!best || s.order() > best->order()) best = &s;
  }
  if (!best) return std::nullopt;
  return *best;
}

}  // namespace verba
