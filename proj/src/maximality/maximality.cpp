#include "verba/maximality/maximality.hpp"

#include <algorithm>

#include "verba/error.hpp"
#include "verba/group/algorithms.hpp"
#include "verba/numeric.hpp"

namespace verba {

std::vector<std::size_t> verbal_indices(const Word& w, const SubgroupLattice& lat, const VerbalOptions& opts) {
  std::vector<std::size_t> out(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i)
    out[i] = lat[i].order() / verbal_subgroup(w, lat.parent(), lat[i], opts).order();
  return out;
}

Breadth w_breadth(const Word& w, const SubgroupLattice& lat, const VerbalOptions& opts) {
  const auto idx = verbal_indices(w, lat, opts);
  std::size_t best = 0;
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] > idx[best]) best = i;
  return {idx[best], lat[best]};
}

Breadth w_breadth(const Word& w, const GroupTable& g, const MaximalityOptions& opts) {
  return w_breadth(w, all_subgroups(g, opts.lattice), opts.verbal);
}

MaximalityReport maximality_report(const Word& w, const SubgroupLattice& lat, const VerbalOptions& opts) {
  const auto idx = verbal_indices(w, lat, opts);
  MaximalityReport r;
  r.group_hash = lat.parent().hash();
  r.word = w;
  const std::size_t top = lat.whole_index();
  r.index = idx[top];
  std::size_t best = 0, best_proper = 0;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i] > idx[best]) best = i;
    if (i != top && idx[i] > idx[best_proper]) best_proper = i;
  }
  r.breadth = idx[best];
  r.breadth_witness = lat[best];
  if (top != 0 && idx[best_proper] >= r.index) {
    r.is_w_maximal = false;
    r.witness = lat[best_proper];
  }
  return r;
}

MaximalityReport is_w_maximal(const Word& w, const GroupTable& g, const MaximalityOptions& opts) {
  return maximality_report(w, all_subgroups(g, opts.lattice), opts.verbal);
}

namespace {

// Shared dynamic program: value[S] must strictly exceed every value on a
// proper subgroup of S, i.e. the best value below any maximal subgroup.
template <class T>
HereditaryResult hereditary_dp(const SubgroupLattice& lat, const std::vector<T>& value) {
  const std::size_t n = lat.size();
  std::vector<std::size_t> arg(n, n);  // subgroup attaining the best value strictly below
  HereditaryResult res;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m : lat.maximal_of(i)) {
      const std::size_t cand = (arg[m] < n && value[arg[m]] > value[m]) ? arg[m] : m;
      if (arg[i] == n || value[cand] > value[arg[i]] ||
          (value[cand] == value[arg[i]] && cand < arg[i]))
        arg[i] = cand;
    }
    if (arg[i] < n && value[arg[i]] >= value[i] && res.holds) {
      res.holds = false;
      res.first_failing = lat[i];
      res.failing_witness = lat[arg[i]];
    }
  }
  return res;
}

}  // namespace

HereditaryResult is_hereditarily_w_maximal(const Word& w, const SubgroupLattice& lat, const VerbalOptions& opts) {
  return hereditary_dp(lat, verbal_indices(w, lat, opts));
}

HereditaryResult is_hereditarily_w_maximal(const Word& w, const GroupTable& g, const MaximalityOptions& opts) {
  return is_hereditarily_w_maximal(w, all_subgroups(g, opts.lattice), opts.verbal);
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

PrecedesResult precedes_unchecked(const Word& w, const GroupTable& h, const GroupTable& g,
                                  const MaximalityOptions& opts) {
  PrecedesResult res;
  if (g.order() % h.order() != 0) return res;
  const std::size_t k = g.order() / h.order();
  const Subgroup wg = verbal_subgroup(w, g, opts.verbal);
  if (wg.order() % k != 0) return res;
  bool unknown = false;
  for (const Subgroup& n : normal_subgroups(g)) {
    if (n.order() != k || !n.is_subgroup_of(wg)) continue;
    const Quotient q = quotient(g, n);
    try {
      if (auto iso = is_isomorphic(q.group, h, opts.iso)) {
        res.answer = Tri::Yes;
        res.kernel = n;
        res.iso = std::move(iso);
        return res;
      }
    } catch (const Error& e) {
      if (!e.is_budget()) throw;
      unknown = true;
    }
  }
  res.answer = unknown ? Tri::Unknown : Tri::No;
  return res;
}

PrecedesResult precedes(const Word& w, const GroupTable& h, const GroupTable& g, const MaximalityOptions& opts) {
  if (!is_w_maximal(w, g, opts).is_w_maximal)
    throw Error(ErrorKind::NotWMaximal, "the larger group is not " + w.to_string() + "-maximal");
  if (!is_w_maximal(w, h, opts).is_w_maximal)
    throw Error(ErrorKind::NotWMaximal, "the smaller group is not " + w.to_string() + "-maximal");
  return precedes_unchecked(w, h, g, opts);
}

namespace {

std::size_t require_p_group(const GroupTable& g) {
  if (g.order() == 1) return 0;
  const auto p = prime_power_base(g.order());
  if (!p) throw Error(ErrorKind::NotAPGroup, "order " + std::to_string(g.order()) + " is not a prime power");
  return static_cast<std::size_t>(*p);
}

struct InterchangeParts {
  Subgroup whole, wg, fixed;  // fixed = [w(G),G]^p [w(G),G,G]
};

InterchangeParts interchange_parts(const Word& w, const GroupTable& g, std::size_t p, const VerbalOptions& opts) {
  InterchangeParts parts;
  parts.whole = whole_group(g);
  parts.wg = verbal_subgroup(w, g, opts);
  const Subgroup c = commutator_subgroup(g, parts.wg, parts.whole);
  const Subgroup cp = power_subgroup(g, c, static_cast<long long>(p == 0 ? 1 : p));
  const Subgroup cg = commutator_subgroup(g, c, parts.whole);
  parts.fixed = algo::join(g, cp, cg);
  return parts;
}

}  // namespace

Subgroup interchange_rhs(const Word& w, const GroupTable& g, const Subgroup& n, const VerbalOptions& opts) {
  const std::size_t p = require_p_group(g);
  const InterchangeParts parts = interchange_parts(w, g, p, opts);
  return algo::join(g, commutator_subgroup(g, n, parts.wg), parts.fixed);
}

InterchangeResult is_interchangeable(const Word& w, const GroupTable& g, const VerbalOptions& opts) {
  InterchangeResult res;
  res.prime = require_p_group(g);
  const InterchangeParts parts = interchange_parts(w, g, res.prime, opts);
  for (const Subgroup& n : normal_subgroups(g)) {
    const Subgroup wn = verbal_subgroup(w, g, n, opts);
    const Subgroup lhs = commutator_subgroup(g, wn, parts.whole);
    if (lhs.is_trivial()) continue;
    const Subgroup rhs = algo::join(g, commutator_subgroup(g, n, parts.wg), parts.fixed);
    if (!lhs.is_subgroup_of(rhs)) {
      res.holds = false;
      res.witness = n;
      return res;
    }
  }
  return res;
}

std::optional<Subgroup> find_subgroup_with(const SubgroupLattice& lat, const SubgroupConstraint& c) {
  const Subgroup* best = nullptr;
  for (const Subgroup& h : lat.subgroups()) {
    if (best && h.order() <= best->order()) continue;
    const Series s = series(lat.parent(), h, SeriesKind::LowerCentral);
    if (!s.reaches_trivial || s.length > c.max_class) continue;
    if (c.max_exponent && exponent(lat.parent(), h) > *c.max_exponent) continue;
    best = &h;
  }
  if (!best) return std::nullopt;
  return *best;
}

std::vector<unsigned> generator_counts(const SubgroupLattice& lat) {
  std::vector<unsigned> d(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) d[i] = min_generators(lat.parent(), lat[i]);
  return d;
}

DMaxResult is_d_maximal(const SubgroupLattice& lat) {
  DMaxResult res;
  const std::size_t top = lat.whole_index();
  res.d = min_generators(lat.parent(), lat[top]);
  for (std::size_t i = 0; i < top; ++i) {
    if (min_generators(lat.parent(), lat[i]) >= res.d) {
      res.holds = false;
      res.witness = lat[i];
      break;
    }
  }
  return res;
}

DMaxResult is_d_maximal(const GroupTable& g, const LatticeOptions& opts) {
  return is_d_maximal(all_subgroups(g, opts));
}

HereditaryResult is_hereditarily_d_maximal(const SubgroupLattice& lat) {
  return hereditary_dp(lat, generator_counts(lat));
}

HereditaryResult is_hereditarily_d_maximal(const GroupTable& g, const LatticeOptions& opts) {
  return is_hereditarily_d_maximal(all_subgroups(g, opts));
}

std::string to_string(const HdmShape& s) {
  switch (s.kind) {
    case HdmShape::ElementaryAbelian:
      if (s.p == 0) return "elementary abelian (trivial)";
      return "elementary abelian " + std::to_string(s.p) + "^" + std::to_string(s.r);
    case HdmShape::ScalarExtension:
      return "C" + std::to_string(s.p) + " acting on C" + std::to_string(s.q) + "^" + std::to_string(s.s) +
             " by scalar " + std::to_string(s.lambda);
    case HdmShape::NotHdm:
      return "not hereditarily d-maximal: " + s.reason;
  }
  return {};
}

HdmShape classify_hdm(const GroupTable& g) {
  HdmShape out;
  auto fail = [&](std::string why) {
    out.kind = HdmShape::NotHdm;
    out.reason = std::move(why);
    return out;
  };
  if (g.order() == 1) {
    out.kind = HdmShape::ElementaryAbelian;
    return out;
  }
  const Subgroup all = whole_group(g);
  if (g.is_abelian()) {
    const auto p = prime_power_base(g.order());
    if (!p || exponent(g) != *p) return fail("abelian but not elementary abelian");
    out.kind = HdmShape::ElementaryAbelian;
    out.p = *p;
    out.r = exact_log(g.order(), *p);
    return out;
  }
  const Subgroup d = commutator_subgroup(g, all, all);
  const auto q = prime_power_base(d.order());
  if (!q || exponent(g, d) != *q || !is_abelian(g, d)) return fail("derived subgroup is not elementary abelian");
  const std::size_t index = g.order() / d.order();
  if (!is_prime(index)) return fail("derived subgroup has non-prime index " + std::to_string(index));
  const std::uint64_t p = index;
  if (p == *q) return fail("not a split extension by a group of coprime order");
  Element x = 0;
  for (Element e = 1; e < g.order() && x == 0; ++e)
    if (!d.contains(e) && g.element_order(e) == p) x = e;
  if (x == 0) return fail("no complement of order " + std::to_string(p));

  // The action of x on a basis of D must be one scalar.
  std::uint64_t lambda = 0;
  for (Element v : d.generators()) {
    const Element c = algo::conjugate(g, v, x);
    std::uint64_t l = 0;
    for (std::uint64_t k = 1; k < *q; ++k)
      if (algo::power(g, v, static_cast<long long>(k)) == c) {
        l = k;
        break;
      }
    if (l == 0) return fail("complement does not act by scalars");
    if (lambda == 0) lambda = l;
    if (l != lambda) return fail("complement acts by different scalars");
  }
  if (lambda == 1) return fail("complement acts trivially");
  std::uint64_t least = lambda, cur = lambda;
  for (std::uint64_t k = 2; k < p; ++k) {
    cur = cur * lambda % *q;
    least = std::min(least, cur);
  }
  out.kind = HdmShape::ScalarExtension;
  out.p = p;
  out.q = *q;
  out.s = exact_log(d.order(), *q);
  out.lambda = least;
  return out;
}

nlohmann::json subgroup_json(const GroupTable& g, const Subgroup& s) {
  nlohmann::json gens = nlohmann::json::array();
  for (Element e : s.generators()) gens.push_back(g.label(e));
  return {{"order", s.order()}, {"generators", std::move(gens)}};
}

nlohmann::json report_json(const GroupTable& g, const MaximalityReport& r) {
  nlohmann::json j;
  j["group_hash"] = g.hash_hex();
  j["word"] = r.word.to_string();
  j["order"] = g.order();
  j["index"] = r.index;
  j["is_w_maximal"] = r.is_w_maximal;
  j["witness"] = r.witness ? subgroup_json(g, *r.witness) : nlohmann::json(nullptr);
  j["breadth"] = r.breadth;
  j["breadth_witness"] = subgroup_json(g, r.breadth_witness);
  return j;
}

void to_json(nlohmann::json& j, const HdmShape& s) {
  switch (s.kind) {
    case HdmShape::ElementaryAbelian:
      j = {{"shape", "elementary_abelian"}, {"p", s.p}, {"r", s.r}};
      break;
    case HdmShape::ScalarExtension:
      j = {{"shape", "scalar_extension"}, {"p", s.p}, {"q", s.q}, {"s", s.s}, {"lambda", s.lambda}};
      break;
    case HdmShape::NotHdm:
      j = {{"shape", "not_hdm"}, {"reason", s.reason}};
      break;
  }
}

}  // namespace verba
