#include "verba/atlas/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "verba/error.hpp"
#include "verba/group/structure.hpp"
#include "verba/lie/forms.hpp"
#include "verba/lie/maxclass.hpp"
#include "verba/numeric.hpp"

namespace verba::atlas {

const std::vector<std::string>& all_builders() {
  static const std::vector<std::string> names = {
      "cyclic",   "elementary_abelian", "dihedral",   "quaternion", "dicyclic", "symmetric", "scalar_extension",
      "c3_on_q8", "metacyclic",         "linear",     "wreath",     "lazard",   "maxclass"};
  return names;
}

void validate(const CorpusConfig& cfg) {
  for (const auto& b : cfg.builders)
    if (std::find(all_builders().begin(), all_builders().end(), b) == all_builders().end())
      throw Error(ErrorKind::InvalidArgument, "unknown corpus builder \"" + b + "\"");
  for (auto p : cfg.primes)
    if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "corpus prime filter needs primes");
  if (cfg.max_order == 0 || cfg.budgets.lattice_cap == 0 || cfg.budgets.tuple_budget == 0 ||
      cfg.budgets.iso_budget == 0)
    throw Error(ErrorKind::InvalidArgument, "corpus budgets and max order must be positive");
}

GroupSpec dicyclic(std::uint64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "dicyclic group needs n >= 1");
  const std::uint64_t m = 2 * n, order = 4 * n;
  // code 2i + j for a^i x^j, with x a x^-1 = a^-1 and x^2 = a^n
  spec::CayleyTable t{order, std::vector<Element>(order * order)};
  for (std::uint64_t u = 0; u < order; ++u) {
    for (std::uint64_t v = 0; v < order; ++v) {
      const std::uint64_t i = u / 2, j = u % 2, k = v / 2, l = v % 2;
      std::uint64_t e, f;
      if (j == 0) {
        e = (i + k) % m;
        f = l;
      } else if (l == 0) {
        e = (i + m - k) % m;
        f = 1;
      } else {
        e = (i + m - k + n) % m;
        f = 0;
      }
      t.table[u * order + v] = static_cast<Element>(2 * e + f);
    }
  }
  return t;
}

GroupSpec wreath(unsigned a, unsigned b) {
  if (a < 1 || b < 1 || a * b > 16) throw Error(ErrorKind::InvalidArgument, "wreath product needs a*b <= 16");
  std::vector<std::uint32_t> base(a * b), top(a * b);
  for (unsigned t = 0; t < b; ++t) {
    for (unsigned i = 0; i < a; ++i) {
      base[t * a + i] = t == 0 ? (i + 1) % a : t * a + i;
      top[t * a + i] = ((t + 1) % b) * a + i;
    }
  }
  return permutations(a * b, {base, top});
}

namespace {

struct Candidate {
  std::string name;
  GroupSpec spec;
  std::uint64_t order;
};

bool order_allowed(std::uint64_t n, const CorpusConfig& cfg) {
  if (n > cfg.max_order) return false;
  if (cfg.primes.empty()) return true;
  const auto base = prime_power_base(n);
  return base && std::find(cfg.primes.begin(), cfg.primes.end(), *base) != cfg.primes.end();
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

std::string cyclic_label(std::uint64_t k) { return k == 1 ? "g" : "g^" + std::to_string(k); }

std::string vec_label(std::int64_t x, std::int64_t y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

struct Mat2 {
  std::int64_t a, b, c, d;  ///< [[a,b],[c,d]] acting on column vectors
};

unsigned mat_order(const Mat2& m, std::int64_t q) {
  Mat2 x = m;
  for (unsigned k = 1; k <= 64; ++k) {
    if (mod(x.a, q) == 1 && mod(x.b, q) == 0 && mod(x.c, q) == 0 && mod(x.d, q) == 1) return k;
    x = {mod(x.a * m.a + x.b * m.c, q), mod(x.a * m.b + x.b * m.d, q), mod(x.c * m.a + x.d * m.c, q),
         mod(x.c * m.b + x.d * m.d, q)};
  }
  return 0;
}

void add_builder(const std::string& b, const CorpusConfig& cfg, std::vector<Candidate>& out) {
  const std::uint64_t n = cfg.max_order;
  auto push = [&](std::string name, GroupSpec s, std::uint64_t order) {
    if (order_allowed(order, cfg)) out.push_back({std::move(name), std::move(s), order});
  };
  if (b == "cyclic") {
    for (std::uint64_t k = 1; k <= n; ++k) push("C" + std::to_string(k), cyclic(k), k);
  } else if (b == "elementary_abelian") {
    for (auto p : primes_upto(n))
      for (unsigned r = 2; ipow(p, r) <= n; ++r) push("C" + std::to_string(p) + "^" + std::to_string(r),
                                                     elementary_abelian(p, r), ipow(p, r));
  } else if (b == "dihedral") {
    for (std::uint64_t k = 2; 2 * k <= n; ++k) push("D" + std::to_string(k), dihedral(k), 2 * k);
  } else if (b == "quaternion") {
    push("Q8", quaternion8(), 8);
  } else if (b == "dicyclic") {
    for (std::uint64_t k = 2; 4 * k <= n; ++k) push("Dic" + std::to_string(k), dicyclic(k), 4 * k);
  } else if (b == "symmetric") {
    push("S3", symmetric(3), 6);
    push("S4", symmetric(4), 24);
    push("S5", symmetric(5), 120);
    push("A4", parse_named("A4"), 12);
    push("A5", parse_named("A5"), 60);
  } else if (b == "scalar_extension") {
    for (auto p : primes_upto(n)) {
      for (auto q : primes_upto(n / p)) {
        if ((q - 1) % p != 0) continue;
        std::int64_t lambda = 2;
        while (multiplicative_order(lambda, static_cast<std::int64_t>(q)) != p) ++lambda;
        for (unsigned s = 1; p * ipow(q, s) <= n; ++s) {
          const GroupSpec g = scalar_extension(p, q, s, lambda);
          push(g.name(), g, p * ipow(q, s));
        }
      }
    }
  } else if (b == "c3_on_q8") {
    push("C3:Q8", c3_on_q8(), 24);
  } else if (b == "metacyclic") {
    // C_k ⋊ C_m with generator acting by g -> g^r, r of order m' | m, r != 1
    for (std::uint64_t k = 3; k * 2 <= n; ++k) {
      for (std::uint64_t m = 2; k * m <= n; ++m) {
        if (!order_allowed(k * m, cfg)) continue;
        for (std::uint64_t r = 2; r < k; ++r) {
          if (std::gcd(r, k) != 1) continue;
          const auto ord = multiplicative_order(static_cast<std::int64_t>(r), static_cast<std::int64_t>(k));
          if (m % ord != 0) continue;
          push("C" + std::to_string(m) + ":C" + std::to_string(k) + "[" + std::to_string(r) + "]",
               semidirect(cyclic(k), cyclic(m), {{cyclic_label(r)}}), k * m);
        }
      }
    }
  } else if (b == "linear") {
    // C_m acting on C_q^2 through a matrix of order dividing m
    const std::vector<Mat2> mats = {{0, 1, 1, 0}, {0, -1, 1, 0}, {0, -1, 1, -1}, {1, 1, 0, 1}, {-1, 0, 0, -1}};
    for (std::int64_t q : {2, 3, 5, 7}) {
      for (const Mat2& mt : mats) {
        const unsigned o = mat_order(mt, q);
        if (o <= 1) continue;
        for (std::uint64_t m = o; m * static_cast<std::uint64_t>(q * q) <= n; m += o) {
          const std::vector<spec::ImageRef> row = {vec_label(mod(mt.a, q), mod(mt.c, q)),
                                                   vec_label(mod(mt.b, q), mod(mt.d, q))};
          push("C" + std::to_string(m) + ":C" + std::to_string(q) + "^2[" + std::to_string(mt.a) + "," +
                   std::to_string(mt.b) + "," + std::to_string(mt.c) + "," + std::to_string(mt.d) + "]",
               semidirect(elementary_abelian(static_cast<std::uint64_t>(q), 2), cyclic(m), {row}),
               m * static_cast<std::uint64_t>(q * q));
        }
      }
    }
  } else if (b == "wreath") {
    for (unsigned a = 2; a <= 8; ++a) {
      for (unsigned c = 2; a * c <= 16; ++c) {
        const std::uint64_t order = ipow(a, c) * c;
        if (order > n) continue;
        push("C" + std::to_string(a) + "wrC" + std::to_string(c), wreath(a, c), order);
      }
    }
  } else if (b == "lazard") {
    for (auto p : primes_upto(std::min<std::uint64_t>(n, 7))) {
      if (p == 2) continue;
      for (const auto& r : lie::small_lie_rings(static_cast<unsigned>(p)))
        push("exp[" + r.name + "," + std::to_string(p) + "]", lazard_exp_spec(r.ring), r.ring.order());
    }
  } else if (b == "maxclass") {
    if (order_allowed(243, cfg)) {
      const lie::MaxClassQuotient q = lie::maximal_class_quotient(3);
      const auto t = q.group.table();
      push("MaxClass3", spec::CayleyTable{q.group.order(), std::vector<Element>(t.begin(), t.end())},
           q.group.order());
    }
  }
}

struct Dedup {
  const CorpusConfig& cfg;
  Corpus& corpus;
  std::map<std::pair<std::size_t, std::uint64_t>, std::vector<std::size_t>> buckets;

  /// Returns true when the candidate became a new entry.
  bool offer(const Candidate& c) {
    ++corpus.candidates;
    GroupTable t;
    try {
      t = materialize(c.spec, cfg.max_order);
    } catch (const Error& e) {
      corpus.failures.push_back({c.name, c.spec, std::string(to_string(e.kind()))});
      return false;
    }
    const auto key = std::make_pair(t.order(), iso_signature(t));
    auto& bucket = buckets[key];
    for (std::size_t idx : bucket) {
      try {
        if (is_isomorphic(t, corpus.entries[idx].table, {cfg.budgets.iso_budget})) {
          corpus.entries[idx].aliases.push_back(c.name);
          return false;
        }
      } catch (const Error& e) {
        if (!e.is_budget()) throw;
        corpus.failures.push_back({c.name, c.spec, "iso:" + std::string(to_string(e.kind()))});
        return false;
      }
    }
    bucket.push_back(corpus.entries.size());
    corpus.entries.push_back({c.name, c.spec, std::move(t), {}});
    return true;
  }
};

std::string wrap_name(const std::string& s) { return s.find(' ') == std::string::npos ? s : "(" + s + ")"; }

}  // namespace

Corpus build_corpus(const CorpusConfig& cfg) {
  validate(cfg);
  Corpus corpus;
  std::vector<Candidate> cands;
  for (const auto& b : cfg.builders) add_builder(b, cfg, cands);
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.order < b.order; });
  Dedup dedup{cfg, corpus, {}};
  for (const auto& c : cands) dedup.offer(c);

  // Products of pairs with at least one factor new in the previous round.
  std::size_t fresh_from = 0;
  for (unsigned round = 0; round < cfg.product_depth; ++round) {
    const std::size_t n = corpus.entries.size();
    std::vector<Candidate> prods;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = std::max(i, fresh_from); j < n; ++j) {
        const auto& a = corpus.entries[i];
        const auto& b = corpus.entries[j];
        if (a.table.order() < 2 || b.table.order() < 2) continue;
        const std::uint64_t order = a.table.order() * b.table.order();
        if (!order_allowed(order, cfg)) continue;
        prods.push_back({wrap_name(a.name) + " x " + wrap_name(b.name), direct_product(a.spec, b.spec), order});
      }
    }
    std::stable_sort(prods.begin(), prods.end(), [](const Candidate& a, const Candidate& b) { return a.order < b.order; });
    fresh_from = n;
    bool added = false;
    for (const auto& c : prods) added |= dedup.offer(c);
    if (!added) break;
  }
  std::stable_sort(corpus.entries.begin(), corpus.entries.end(),
                   [](const CorpusEntry& a, const CorpusEntry& b) { return a.table.order() < b.table.order(); });
  return corpus;
}

namespace {

void merge_into(Corpus& out, Corpus&& part) {
  for (auto& e : part.entries) out.entries.push_back(std::move(e));
  for (auto& f : part.failures) out.failures.push_back(std::move(f));
  out.candidates += part.candidates;
}

}  // namespace

Corpus p_group_corpus(const Budgets& b) {
  Corpus out;
  for (auto [p, n] : {std::pair<std::uint64_t, std::size_t>{2, 64}, {3, 243}, {5, 625}}) {
    CorpusConfig cfg;
    cfg.max_order = n;
    cfg.builders = all_builders();
    cfg.product_depth = 4;
    cfg.primes = {p};
    cfg.budgets = b;
    merge_into(out, build_corpus(cfg));
  }
  return out;
}

Corpus general_corpus(std::size_t max_order, const Budgets& b) {
  CorpusConfig cfg;
  cfg.max_order = max_order;
  cfg.builders = all_builders();
  cfg.product_depth = 4;
  cfg.budgets = b;
  return build_corpus(cfg);
}

}  // namespace verba::atlas
