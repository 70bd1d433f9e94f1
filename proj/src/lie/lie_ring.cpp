#include "verba/lie/lie_ring.hpp"

#include <algorithm>

#include "verba/error.hpp"
#include "verba/numeric.hpp"

namespace verba::lie {

namespace {

constexpr std::uint64_t kSpanLimit = std::uint64_t{1} << 26;

}  // namespace

LieRing LieRing::make(unsigned p, std::vector<unsigned> exponents, const std::vector<Bracket>& brackets) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidSpec, "Lie ring prime " + std::to_string(p) + " is not prime");
  LieRing l(p);
  const std::size_t r = exponents.size();
  std::uint64_t total = 1;
  for (unsigned e : exponents) {
    if (e == 0) throw Error(ErrorKind::InvalidSpec, "basis element of order 1");
    const auto m = static_cast<std::int64_t>(ipow(p, e));
    if (m > (std::int64_t{1} << 30)) throw Error(ErrorKind::InvalidSpec, "basis order too large");
    l.mods_.push_back(m);
    total *= static_cast<std::uint64_t>(m);
    if (total > (std::uint64_t{1} << 62)) throw Error(ErrorKind::InvalidSpec, "Lie ring too large");
  }
  l.exps_ = std::move(exponents);
  l.c_.assign(r * r, Vec(r, 0));
  for (const auto& b : brackets) {
    if (b.i >= r || b.j >= r) throw Error(ErrorKind::InvalidSpec, "bracket index out of range");
    if (b.coeffs.size() != r) throw Error(ErrorKind::InvalidSpec, "bracket image has wrong length");
    if (b.i == b.j) {
      if (std::any_of(b.coeffs.begin(), b.coeffs.end(), [](auto v) { return v != 0; }))
        throw Error(ErrorKind::InvalidSpec, "[b_i,b_i] must vanish");
      continue;
    }
    Vec v = l.reduce(b.coeffs);
    Vec& slot = l.c_[b.i * r + b.j];
    Vec& mirror = l.c_[b.j * r + b.i];
    const Vec neg = l.neg(v);
    const bool slot_set = std::any_of(slot.begin(), slot.end(), [](auto x) { return x != 0; });
    if (slot_set && slot != v)
      throw Error(ErrorKind::InvalidSpec, "conflicting brackets for a basis pair (antisymmetry)");
    slot = v;
    mirror = neg;
  }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        const std::int64_t c = l.c_[i * r + j][k];
        if (c == 0) continue;
        if (mod(static_cast<std::int64_t>(l.mods_[i]) * c, l.mods_[k]) != 0 ||
            mod(static_cast<std::int64_t>(l.mods_[j]) * c, l.mods_[k]) != 0)
          throw Error(ErrorKind::InvalidSpec, "structure constants are not well defined modulo the basis orders");
      }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = j + 1; k < r; ++k) {
        const Vec bi = l.basis(i), bj = l.basis(j), bk = l.basis(k);
        Vec s = l.bracket(l.bracket(bi, bj), bk);
        s = l.add(s, l.bracket(l.bracket(bj, bk), bi));
        s = l.add(s, l.bracket(l.bracket(bk, bi), bj));
        if (std::any_of(s.begin(), s.end(), [](auto x) { return x != 0; }))
          throw Error(ErrorKind::InvalidSpec, "Jacobi identity fails on basis triple (" + std::to_string(i) +
                                                  "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
  return l;
}

std::uint64_t LieRing::order() const noexcept {
  std::uint64_t n = 1;
  for (auto m : mods_) n *= static_cast<std::uint64_t>(m);
  return n;
}

std::int64_t LieRing::additive_exponent() const noexcept {
  std::int64_t e = 1;
  for (auto m : mods_) e = std::max(e, m);
  return e;
}

Vec LieRing::basis(std::size_t i) const {
  Vec v(rank(), 0);
  v[i] = 1;
  return v;
}

Vec LieRing::reduce(Vec a) const {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(a[i], mods_[i]);
  return a;
}

Vec LieRing::add(const Vec& a, const Vec& b) const {
  Vec r(rank());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(a[i] + b[i], mods_[i]);
  return r;
}

Vec LieRing::neg(const Vec& a) const {
  Vec r(rank());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(-a[i], mods_[i]);
  return r;
}

Vec LieRing::scale(const Vec& a, std::int64_t k) const {
  Vec r(rank());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(mod(k, mods_[i]) * a[i], mods_[i]);
  return r;
}

Vec LieRing::bracket(const Vec& a, const Vec& b) const {
  const std::size_t r = rank();
  Vec out(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (b[j] == 0 || i == j) continue;
      const Vec& c = c_[i * r + j];
      const std::int64_t ab = a[i] * b[j];
      for (std::size_t k = 0; k < r; ++k)
        if (c[k]) out[k] = mod(out[k] + mod(ab, mods_[k]) * c[k], mods_[k]);
    }
  }
  return out;
}

std::uint64_t LieRing::encode(const Vec& a) const {
  std::uint64_t code = 0, radix = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    code += static_cast<std::uint64_t>(mod(a[i], mods_[i])) * radix;
    radix *= static_cast<std::uint64_t>(mods_[i]);
  }
  return code;
}

Vec LieRing::decode(std::uint64_t code) const {
  Vec a(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto m = static_cast<std::uint64_t>(mods_[i]);
    a[i] = static_cast<std::int64_t>(code % m);
    code /= m;
  }
  return a;
}

Bitset LieRing::span(const std::vector<Vec>& gens) const {
  if (order() > kSpanLimit) throw Error(ErrorKind::BudgetExceeded, "Lie ring too large for explicit spans");
  Bitset members(order());
  members.set(0);
  std::vector<Vec> queue{zero()};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Vec x = queue[qi];
    for (const Vec& g : gens) {
      Vec y = add(x, g);
      if (members.insert(encode(y))) queue.push_back(std::move(y));
    }
  }
  return members;
}

std::size_t LieRing::nilpotency_class(bool* nilpotent) const {
  if (nilpotent) *nilpotent = true;
  if (rank() == 0) return 0;
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < rank(); ++i) gens.push_back(basis(i));
  std::size_t cls = 0;
  std::uint64_t last_size = order();
  while (true) {
    ++cls;
    std::vector<Vec> next;
    for (const Vec& g : gens)
      for (std::size_t j = 0; j < rank(); ++j) {
        Vec b = bracket(g, basis(j));
        if (std::any_of(b.begin(), b.end(), [](auto x) { return x != 0; })) next.push_back(std::move(b));
      }
    if (next.empty()) return cls;
    const std::uint64_t size = span(next).count();
    if (size == last_size) {
      if (nilpotent) *nilpotent = false;
      return 0;
    }
    last_size = size;
    gens = std::move(next);
  }
}

std::vector<LieRing::Bracket> LieRing::nonzero_brackets() const {
  std::vector<Bracket> out;
  const std::size_t r = rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const Vec& c = c_[i * r + j];
      if (std::any_of(c.begin(), c.end(), [](auto x) { return x != 0; }))
        out.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), c});
    }
  return out;
}

void to_json(nlohmann::json& j, const LieRing& l) {
  nlohmann::json br = nlohmann::json::array();
  for (const auto& b : l.nonzero_brackets()) br.push_back({b.i, b.j, b.coeffs});
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < l.rank(); ++i) orders.push_back(l.basis_order(i));
  j = {{"p", l.prime()}, {"orders", orders}, {"brackets", br}};
}

void from_json(const nlohmann::json& j, LieRing& l) {
  try {
    const auto orders = j.at("orders").get<std::vector<std::int64_t>>();
    unsigned p = 0;
    if (j.contains("p")) p = j.at("p").get<unsigned>();
    std::vector<unsigned> exps;
    for (auto o : orders) {
      const auto base = prime_power_base(static_cast<std::uint64_t>(o));
      if (!base || (p && *base != p)) throw Error(ErrorKind::InvalidSpec, "basis order " + std::to_string(o) + " is not a power of the ring prime");
      p = static_cast<unsigned>(*base);
      exps.push_back(static_cast<unsigned>(exact_log(static_cast<std::uint64_t>(o), p)));
    }
    if (p == 0) throw Error(ErrorKind::InvalidSpec, "Lie ring needs a prime \"p\"");
    std::vector<LieRing::Bracket> brs;
    if (j.contains("brackets"))
      for (const auto& b : j.at("brackets"))
        brs.push_back({b.at(0).get<unsigned>(), b.at(1).get<unsigned>(), b.at(2).get<Vec>()});
    l = LieRing::make(p, std::move(exps), brs);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("malformed Lie ring JSON: ") + e.what());
  }
}

}  // namespace verba::lie
