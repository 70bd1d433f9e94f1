#include "verba/group/table.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "verba/error.hpp"
#include "verba/group/algorithms.hpp"

namespace verba {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

GroupTable::GroupTable() {
  auto d = std::make_shared<Data>();
  d->mul = {0};
  d->inv = {0};
  d->orders = {1};
  d->hash = mix(1) ^ mix(mix(0));
  n_ = 1;
  d_ = std::move(d);
}

GroupTable GroupTable::from_cayley(std::size_t n, std::vector<Element> mul,
                                   std::vector<std::string> labels) {
  return build(n, std::move(mul), std::move(labels), true);
}

GroupTable GroupTable::trusted(std::size_t n, std::vector<Element> mul,
                               std::vector<std::string> labels) {
  return build(n, std::move(mul), std::move(labels), false);
}

GroupTable GroupTable::build(std::size_t n, std::vector<Element> mul,
                             std::vector<std::string> labels, bool check_assoc) {
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  if (mul.size() != n * n)
    throw Error(ErrorKind::NotAGroup, "table has " + std::to_string(mul.size()) +
                                          " entries, expected " + std::to_string(n * n));
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorKind::NotAGroup, "label count does not match order");
  for (Element v : mul)
    if (v >= n) throw Error(ErrorKind::NotAGroup, "entry out of range");
  for (std::size_t i = 0; i < n; ++i)
    if (mul[i] != i || mul[i * n] != i)
      throw Error(ErrorKind::NotAGroup, "element 0 is not a two-sided identity");

  auto d = std::make_shared<Data>();
  d->inv.assign(n, 0);
  {
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      bool found = false;
      for (std::size_t j = 0; j < n; ++j) {
        const Element v = mul[i * n + j];
        if (seen[v]) throw Error(ErrorKind::NotAGroup, "row " + std::to_string(i) + " repeats an entry");
        seen[v] = 1;
        if (v == 0 && !found) {
          d->inv[i] = static_cast<Element>(j);
          found = true;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (mul[d->inv[i] * n + i] != 0)
        throw Error(ErrorKind::NotAGroup, "left and right inverses differ");
  }
  d->mul = std::move(mul);
  d->labels = std::move(labels);

  d->orders.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (d->orders[i]) continue;
    std::uint32_t k = 1;
    Element x = static_cast<Element>(i);
    while (x != 0) {
      x = d->mul[x * n + i];
      ++k;
    }
    d->orders[i] = k;
  }

  std::vector<std::uint64_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t h = mix(i);
    for (std::size_t j = 0; j < n; ++j) h = mix(h ^ d->mul[i * n + j]);
    rows[i] = h;
  }
  std::sort(rows.begin(), rows.end());
  std::uint64_t h = mix(n);
  for (auto r : rows) h = mix(h ^ r);
  d->hash = h;

  GroupTable g(n, std::move(d));
  if (check_assoc) {
    const bool ok = n <= 256 ? g.check_associative() : g.check_associative(1'000'000);
    if (!ok) throw Error(ErrorKind::NotAGroup, "multiplication is not associative");
  }
  return g;
}

bool GroupTable::check_associative(std::size_t samples, std::uint64_t seed) const {
  const std::size_t n = n_;
  if (samples == 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Element ij = mul(static_cast<Element>(i), static_cast<Element>(j));
        const auto rij = row(ij);
        const auto rj = row(static_cast<Element>(j));
        const auto ri = row(static_cast<Element>(i));
        for (std::size_t k = 0; k < n; ++k)
          if (rij[k] != ri[rj[k]]) return false;
      }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> dist(0, static_cast<Element>(n - 1));
  for (std::size_t s = 0; s < samples; ++s) {
    const Element a = dist(rng), b = dist(rng), c = dist(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

std::string GroupTable::label(Element a) const {
  if (d_->labels.empty()) return std::to_string(a);
  return d_->labels[a];
}

std::size_t GroupTable::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < d_->labels.size(); ++i)
    if (d_->labels[i] == label) return i;
  return n_;
}

std::string GroupTable::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(d_->hash));
  return buf;
}

bool GroupTable::is_abelian() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (mul(static_cast<Element>(i), static_cast<Element>(j)) !=
          mul(static_cast<Element>(j), static_cast<Element>(i)))
        return false;
  return true;
}

Subgroup Subgroup::trivial(std::size_t parent_order) {
  Bitset b(parent_order);
  b.set(0);
  return Subgroup(std::move(b), {});
}

bool Homomorphism::is_homomorphism() const {
  const std::size_t n = source.order();
  if (image.size() != n) return false;
  for (Element x : image)
    if (x >= target.order()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (image[source.mul(static_cast<Element>(i), static_cast<Element>(j))] !=
          target.mul(image[i], image[j]))
        return false;
  return true;
}

bool Homomorphism::is_injective() const {
  std::vector<char> seen(target.order());
  for (Element x : image) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<char> seen(target.order());
  std::size_t hit = 0;
  for (Element x : image)
    if (!seen[x]) {
      seen[x] = 1;
      ++hit;
    }
  return hit == target.order();
}

Subgroup Homomorphism::kernel() const {
  Bitset b(source.order());
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] == 0) b.set(i);
  return algo::from_members(source, std::move(b));
}

Subgroup Homomorphism::map(const Subgroup& h) const {
  std::vector<Element> gens;
  for (Element g : h.generators()) gens.push_back(image[g]);
  return algo::generate(target, std::span<const Element>(gens));
}

}  // namespace verba
