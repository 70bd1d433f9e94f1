#include "verba/lie/delta2.hpp"

#include <random>

#include "verba/error.hpp"
#include "verba/group/algorithms.hpp"
#include "verba/numeric.hpp"

namespace verba::lie {

namespace {

constexpr std::uint64_t kOrderBudget = 20'000'000;

// Remainder of a modulo the monic polynomial f (coefficients low to high).
Vec poly_mod(Vec a, const Vec& f, std::int64_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t i = a.size(); i-- > m;) {
    const std::int64_t c = mod(a[i], p);
    if (!c) continue;
    for (std::size_t j = 0; j <= m; ++j) a[i - m + j] = mod(a[i - m + j] - c * f[j], p);
  }
  a.resize(std::min(a.size(), m));
  return a;
}

}  // namespace

Vec least_cyclotomic_factor(unsigned p, unsigned q, unsigned m) {
  const Vec cyclo(q, 1);
  Vec c(m, 0);
  while (true) {
    Vec f = c;
    f.push_back(1);
    const Vec r = poly_mod(cyclo, f, p);
    if (std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; })) return c;
    // Lexicographic in (c_0, c_1, ...): the last coefficient moves fastest.
    std::size_t i = m;
    while (i > 0 && ++c[i - 1] == static_cast<std::int64_t>(p)) c[--i] = 0;
    if (i == 0) throw Error(ErrorKind::InvalidArgument, "no degree-m factor of the cyclotomic polynomial");
  }
}

fp::Matrix companion(const Vec& poly, unsigned p) {
  const std::size_t m = poly.size();
  fp::Matrix c = fp::zeros(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) c[i + 1][i] = 1;
  for (std::size_t j = 0; j < m; ++j) c[j][m - 1] = mod(-poly[j], p);
  return c;
}

Delta2Group::Delta2Group(unsigned p, unsigned q) : p_(p), q_(q) {
  if (p == 2) throw Error(ErrorKind::EvenPrime, "the construction needs p > 2");
  if (!is_prime(p) || !is_prime(q)) throw Error(ErrorKind::InvalidArgument, "p and q must be prime");
  if (q <= p) throw Error(ErrorKind::InvalidArgument, "the construction needs q > p");
  m_ = static_cast<unsigned>(multiplicative_order(p, q));
  d_ = 2 * m_;
  if (d_ > 12) throw Error(ErrorKind::BudgetExceeded, "V has dimension " + std::to_string(d_));
  pd_ = ipow(p, d_);
  ncode_ = pd_ * p;
  if (static_cast<std::uint64_t>(q) * ncode_ > kOrderBudget || pd_ * pd_ > kOrderBudget)
    throw Error(ErrorKind::BudgetExceeded,
                "structured group of order " + std::to_string(q * ncode_) + " is over budget");
  half_ = (static_cast<std::int64_t>(p) + 1) / 2;
  const auto pp = static_cast<std::int64_t>(p);

  poly_ = least_cyclotomic_factor(p, q, m_);
  const fp::Matrix c = companion(poly_, p);
  const fp::Matrix ci = *fp::inverse(c, pp);
  zv_ = fp::zeros(d_, d_);
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned j = 0; j < m_; ++j) {
      zv_[i][j] = c[i][j];
      zv_[m_ + i][m_ + j] = ci[i][j];
    }
  if (fp::power(zv_, q, pp) != fp::identity(d_)) throw Error(ErrorKind::InvalidAction, "z^q is not the identity");

  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned a = 0; a < d_; ++a)
    for (unsigned b = a + 1; b < d_; ++b) pairs.emplace_back(a, b);
  const std::size_t w = pairs.size();
  zw_ = fp::zeros(w, w);
  for (std::size_t r = 0; r < w; ++r)
    for (std::size_t s = 0; s < w; ++s) {
      const auto [i, j] = pairs[r];
      const auto [a, b] = pairs[s];
      zw_[r][s] = mod(zv_[i][a] * zv_[j][b] - zv_[j][a] * zv_[i][b], pp);
    }
  fp::Matrix fix = fp::transpose(zw_);
  for (std::size_t i = 0; i < w; ++i) fix[i][i] = mod(fix[i][i] - 1, pp);
  const fp::Matrix fixed = fp::nullspace(fix, w, pp);
  if (fixed.empty()) throw Error(ErrorKind::NoFixedEigenvector, "z has no fixed functional on [L,L]");
  phi_ = fixed.front();
  form_ = fp::zeros(d_, d_);
  for (std::size_t s = 0; s < w; ++s) {
    const auto [a, b] = pairs[s];
    form_[a][b] = phi_[s];
    form_[b][a] = mod(-phi_[s], pp);
  }

  auto decode = [&](std::uint64_t v) {
    Vec x(d_);
    for (unsigned i = 0; i < d_; ++i) {
      x[i] = static_cast<std::int64_t>(v % p);
      v /= p;
    }
    return x;
  };
  auto encode = [&](const Vec& x) {
    std::uint64_t v = 0;
    for (unsigned i = d_; i-- > 0;) v = v * p + static_cast<std::uint64_t>(x[i]);
    return static_cast<std::uint32_t>(v);
  };
  std::vector<Vec> vecs(pd_);
  for (std::uint64_t v = 0; v < pd_; ++v) vecs[v] = decode(v);
  act_.resize(q * pd_);
  fp::Matrix mc = fp::identity(d_);
  for (unsigned k = 0; k < q; ++k) {
    for (std::uint64_t v = 0; v < pd_; ++v) act_[k * pd_ + v] = encode(fp::apply(mc, vecs[v], pp));
    mc = fp::mul(mc, zv_, pp);
  }
  vadd_.resize(pd_ * pd_);
  bil_.resize(pd_ * pd_);
  vneg_.resize(pd_);
  for (std::uint64_t v = 0; v < pd_; ++v) {
    Vec neg(d_);
    for (unsigned i = 0; i < d_; ++i) neg[i] = mod(-vecs[v][i], pp);
    vneg_[v] = encode(neg);
    const Vec bv = fp::apply(fp::transpose(form_), vecs[v], pp);  // v^T B
    for (std::uint64_t u = 0; u < pd_; ++u) {
      Vec sum(d_);
      std::int64_t f = 0;
      for (unsigned i = 0; i < d_; ++i) {
        sum[i] = (vecs[v][i] + vecs[u][i]) % pp;
        f += bv[i] * vecs[u][i];
      }
      vadd_[v * pd_ + u] = encode(sum);
      bil_[v * pd_ + u] = static_cast<std::uint8_t>(mod(f, pp));
    }
  }
}

Element Delta2Group::mul(Element x, Element y) const {
  const std::uint64_t c1 = x / ncode_, n1 = x % ncode_, c2 = y / ncode_, n2 = y % ncode_;
  const std::uint64_t v = act_[c2 * pd_ + n1 % pd_], a = n1 / pd_;
  const std::uint64_t w = n2 % pd_, b = n2 / pd_;
  const std::uint64_t s = (a + b + static_cast<std::uint64_t>(half_) * bil_[v * pd_ + w]) % p_;
  return static_cast<Element>(((c1 + c2) % q_) * ncode_ + s * pd_ + vadd_[v * pd_ + w]);
}

Element Delta2Group::inv(Element x) const {
  const std::uint64_t c = x / ncode_, n = x % ncode_;
  const std::uint64_t back = (q_ - c) % q_;
  const std::uint64_t a = (p_ - n / pd_) % p_;
  return static_cast<Element>(back * ncode_ + a * pd_ + act_[back * pd_ + vneg_[n % pd_]]);
}

std::vector<Element> Delta2Group::generators() const {
  std::vector<Element> g{z()};
  for (unsigned i = 0; i < d_; ++i) g.push_back(static_cast<Element>(ipow(p_, i)));
  return g;
}

std::string Delta2Group::label(Element x) const {
  const std::uint64_t c = x / ncode_, n = x % ncode_;
  std::string s = "z^" + std::to_string(c) + "(";
  std::uint64_t v = n % pd_;
  for (unsigned i = 0; i < d_; ++i, v /= p_) s += std::to_string(v % p_);
  return s + ";" + std::to_string(n / pd_) + ")";
}

Delta2Report delta2_construction(unsigned p, unsigned q, std::uint64_t samples, std::uint64_t seed) {
  const Delta2Group g(p, q);
  Delta2Report r;
  r.p = p;
  r.q = q;
  r.m = g.m();
  r.d = g.d();
  r.order = g.order();
  r.min_poly = g.min_poly();
  const auto pp = static_cast<std::int64_t>(p);

  r.no_fixed_hyperplane_on_v = true;
  for (std::int64_t t = 0; t < pp; ++t) {
    fp::Matrix a = g.z_on_v();
    for (unsigned i = 0; i < g.d(); ++i)
      for (unsigned j = 0; j < g.d(); ++j) a[i][j] = mod((i == j ? t : 0) - a[i][j], pp);
    if (fp::det(a, pp) == 0) r.no_fixed_hyperplane_on_v = false;
  }
  fp::Matrix shifted = g.z_on_wedge();
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i][i] = mod(shifted[i][i] - 1, pp);
  r.one_is_eigenvalue = fp::rank(shifted, pp) < shifted.size();

  r.inverses_exact = true;
  for (Element x = 0; x < g.order(); ++x)
    if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0 || g.mul(0, x) != x || g.mul(x, 0) != x) {
      r.inverses_exact = false;
      break;
    }
  std::mt19937_64 rng(seed);
  r.associativity_samples = samples;
  r.associative = true;
  for (std::uint64_t i = 0; i < samples && r.associative; ++i) {
    const auto a = static_cast<Element>(rng() % g.order()), b = static_cast<Element>(rng() % g.order()),
               c = static_cast<Element>(rng() % g.order());
    r.associative = g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
  }

  const auto gens = g.generators();
  const Subgroup whole = algo::generate(g, std::span<const Element>(gens));
  const auto ds = algo::derived_series(g, whole);
  r.derived_length = ds.back().is_trivial() ? ds.size() - 1 : 0;
  if (ds.size() > 1) {
    const Subgroup& d1 = ds[1];
    bool inside = true;
    d1.members().for_each([&](std::size_t x) { inside = inside && g.in_n(static_cast<Element>(x)); });
    r.derived_is_n = inside && d1.order() == g.order() / q;
  }
  r.delta2_order = ds.size() > 2 ? ds[2].order() : 1;
  r.index_is_order_over_p = whole.order() == g.order() && whole.order() / r.delta2_order == g.order() / p;
  return r;
}

void to_json(nlohmann::json& j, const Delta2Report& r) {
  j = {{"p", r.p},
       {"q", r.q},
       {"m", r.m},
       {"d", r.d},
       {"order", r.order},
       {"min_poly", r.min_poly},
       {"no_fixed_hyperplane_on_v", r.no_fixed_hyperplane_on_v},
       {"one_is_eigenvalue_on_wedge", r.one_is_eigenvalue},
       {"derived_is_n", r.derived_is_n},
       {"delta2_order", r.delta2_order},
       {"derived_length", r.derived_length},
       {"index_is_order_over_p", r.index_is_order_over_p},
       {"associativity_samples", r.associativity_samples},
       {"associative", r.associative},
       {"inverses_exact", r.inverses_exact},
       {"passed", r.passed()}};
}

}  // namespace verba::lie
