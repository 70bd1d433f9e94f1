#include "verba/lie/maxclass.hpp"

#include <optional>

#include "verba/error.hpp"
#include "verba/group/algorithms.hpp"
#include "verba/lie/lie_ring.hpp"
#include "verba/numeric.hpp"

namespace verba::lie {

namespace {

constexpr std::size_t kCoverLimit = std::size_t{1} << 22;

std::int64_t binomial(unsigned n, unsigned k) {
  std::int64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

MaxClassCover::MaxClassCover(unsigned p, unsigned precision) : p_(p), m_(precision) {
  mod_ = static_cast<std::int64_t>(ipow(p, precision));
  const unsigned n = p - 1;
  asize_ = ipow(static_cast<std::uint64_t>(mod_), n);
  if (order() > kCoverLimit) throw Error(ErrorKind::BudgetExceeded, "maximal-class cover too large");
  // Column j of phi is the image of x_j.
  std::vector<Vec> phi(n, Vec(n, 0));
  for (unsigned j = 0; j + 1 < n; ++j) {
    phi[j][j] = 1;
    phi[j + 1][j] = 1;
  }
  for (unsigned i = 0; i < n; ++i) phi[i][n - 1] = mod(-static_cast<std::int64_t>(binomial(p, i + 1)), mod_);
  phi[n - 1][n - 1] = mod(phi[n - 1][n - 1] + 1, mod_);

  auto decode = [&](std::uint64_t c) {
    Vec v(n);
    for (unsigned i = 0; i < n; ++i) {
      v[i] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(mod_));
      c /= static_cast<std::uint64_t>(mod_);
    }
    return v;
  };
  auto encode = [&](const Vec& v) {
    std::uint64_t c = 0;
    for (unsigned i = n; i-- > 0;) c = c * static_cast<std::uint64_t>(mod_) + static_cast<std::uint64_t>(v[i]);
    return c;
  };
  act_.assign(p, std::vector<std::uint64_t>(asize_));
  for (std::uint64_t c = 0; c < asize_; ++c) act_[0][c] = c;
  for (unsigned b = 1; b < p; ++b)
    for (std::uint64_t c = 0; c < asize_; ++c) {
      const Vec v = decode(act_[b - 1][c]);
      Vec out(n, 0);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) out[i] = (out[i] + phi[i][j] * v[j]) % mod_;
      act_[b][c] = encode(out);
    }
  for (std::uint64_t c = 0; c < asize_; ++c) {
    const Vec v = decode(act_[p - 1][c]);
    Vec out(n, 0);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) out[i] = (out[i] + phi[i][j] * v[j]) % mod_;
    if (encode(out) != c) throw Error(ErrorKind::InvalidAction, "alpha^p does not act trivially");
  }
}

std::uint64_t MaxClassCover::add(std::uint64_t v, std::uint64_t w) const {
  std::uint64_t out = 0, scale = 1;
  const auto m = static_cast<std::uint64_t>(mod_);
  for (unsigned i = 0; i + 1 < p_; ++i) {
    out += ((v % m + w % m) % m) * scale;
    v /= m;
    w /= m;
    scale *= m;
  }
  return out;
}

std::uint64_t MaxClassCover::negate(std::uint64_t v) const {
  std::uint64_t out = 0, scale = 1;
  const auto m = static_cast<std::uint64_t>(mod_);
  for (unsigned i = 0; i + 1 < p_; ++i) {
    out += ((m - v % m) % m) * scale;
    v /= m;
    scale *= m;
  }
  return out;
}

Element MaxClassCover::mul(Element x, Element y) const {
  const std::uint64_t a = x / asize_, v = x % asize_, b = y / asize_, w = y % asize_;
  return static_cast<Element>(((a + b) % p_) * asize_ + add(act_[b][v], w));
}

Element MaxClassCover::inv(Element x) const {
  const std::uint64_t a = x / asize_, v = x % asize_;
  const std::uint64_t b = (p_ - a) % p_;
  return static_cast<Element>(b * asize_ + negate(act_[b][v]));
}

Element MaxClassCover::basis(unsigned i) const { return static_cast<Element>(ipow(static_cast<std::uint64_t>(mod_), i)); }

std::vector<Element> MaxClassCover::generators() const {
  std::vector<Element> g{alpha()};
  for (unsigned i = 0; i + 1 < p_; ++i) g.push_back(basis(i));
  return g;
}

namespace {

struct Cosets {
  std::vector<Element> label;  ///< element -> coset index
  std::vector<Element> reps;
};

Cosets cosets_of(const MaxClassCover& h, const Subgroup& k) {
  Cosets c;
  const auto kk = k.elements();
  c.label.assign(h.order(), static_cast<Element>(-1));
  for (Element x = 0; x < h.order(); ++x) {
    if (c.label[x] != static_cast<Element>(-1)) continue;
    const auto id = static_cast<Element>(c.reps.size());
    c.reps.push_back(x);
    for (Element y : kk) c.label[h.mul(x, y)] = id;
  }
  return c;
}

}  // namespace

MaxClassQuotient maximal_class_quotient(unsigned p, std::size_t cap) {
  if (p == 2) throw Error(ErrorKind::EvenPrime, "the maximal-class quotient needs an odd prime");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (p > 5) throw Error(ErrorKind::PrimeTooLarge, "maximal_class_quotient supports p <= 5");
  const std::uint64_t target = ipow(p, p + 2);
  if (target > cap)
    throw Error(ErrorKind::OrderExceedsCap,
                "quotient order " + std::to_string(target) + " exceeds the cap of " + std::to_string(cap));

  MaxClassQuotient out;
  for (unsigned m = 2;; ++m) {
    std::optional<MaxClassCover> cover;
    try {
      cover.emplace(p, m);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      throw Error(ErrorKind::PrecisionNotStabilized,
                  "quotient order did not stabilise before precision " + std::to_string(m));
    }
    const MaxClassCover& h = *cover;
    const auto gens = h.generators();
    Bitset all(h.order());
    for (std::size_t i = 0; i < h.order(); ++i) all.set(i);
    const Subgroup whole = algo::generate(h, std::span<const Element>(gens));
    const Subgroup hp = algo::power_subgroup(h, all, p);
    const Subgroup x = algo::commutator_of(h, hp, whole, gens);
    const Subgroup k = algo::join(h, algo::power_subgroup(h, x.members(), p), algo::commutator_of(h, x, whole, gens));
    const std::size_t order = h.order() / k.order();
    out.orders_by_precision.push_back(order);
    const auto& o = out.orders_by_precision;
    if (o.size() < 2 || o[o.size() - 1] != o[o.size() - 2]) continue;
    if (order != target)
      throw Error(ErrorKind::PrecisionNotStabilized,
                  "quotient order stabilised at " + std::to_string(order) + ", expected " + std::to_string(target));

    const Cosets c = cosets_of(h, k);
    const std::size_t n = c.reps.size();
    std::vector<Element> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[i * n + j] = c.label[h.mul(c.reps[i], c.reps[j])];
    out.group = GroupTable::trusted(n, std::move(table));
    Bitset a(n);
    for (Element e = 0; e < h.order(); ++e)
      if (h.in_a(e)) a.set(c.label[e]);
    out.image_of_a = algo::from_members(out.group, std::move(a));
    out.precision = m;
    return out;
  }
}

}  // namespace verba::lie
