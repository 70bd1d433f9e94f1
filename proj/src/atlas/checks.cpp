#include "verba/atlas/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "verba/error.hpp"
#include "verba/group/structure.hpp"
#include "verba/lattice/lattice.hpp"
#include "verba/lie/delta2.hpp"
#include "verba/lie/forms.hpp"
#include "verba/lie/lazard.hpp"
#include "verba/lie/maxclass.hpp"
#include "verba/lie/subrings.hpp"
#include "verba/maximality/maximality.hpp"
#include "verba/numeric.hpp"
#include "verba/atlas/atlas.hpp"

namespace verba::atlas {

class CheckContext {
 public:
  explicit CheckContext(const VerifyOptions& o) : opts(o) {}

  const VerifyOptions& opts;

  [[nodiscard]] LatticeOptions lattice_opts() const { return {opts.budgets.lattice_cap, opts.cache_dir}; }
  [[nodiscard]] VerbalOptions verbal_opts() const { return {opts.budgets.tuple_budget, true}; }

  const Corpus& pgroups() {
    if (!pg_) pg_ = p_group_corpus(opts.budgets);
    return *pg_;
  }
  const Corpus& general() {
    if (!gc_) gc_ = general_corpus(63, opts.budgets);
    return *gc_;
  }
  const SubgroupLattice& plattice(std::size_t i) { return lattice(plat_, pgroups().entries[i].table, i); }
  const SubgroupLattice& glattice(std::size_t i) { return lattice(glat_, general().entries[i].table, i); }

 private:
  const SubgroupLattice& lattice(std::map<std::size_t, SubgroupLattice>& m, const GroupTable& g, std::size_t i) {
    auto it = m.find(i);
    if (it == m.end()) it = m.emplace(i, all_subgroups(g, lattice_opts())).first;
    return it->second;
  }

  std::optional<Corpus> pg_, gc_;
  std::map<std::size_t, SubgroupLattice> plat_, glat_;
};

namespace {

/// Counts checked instances and keeps the first few violations.
struct Tally {
  std::size_t checked = 0, violations = 0;
  std::vector<std::string> samples;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++violations;
    if (samples.size() < 6) samples.push_back(what);
  }
  [[nodiscard]] CheckOutcome outcome(const std::string& noun) const {
    std::string d = std::to_string(checked) + " " + noun + ", " + std::to_string(violations) + " violations";
    for (const auto& s : samples) d += "; " + s;
    if (violations > samples.size()) d += "; ...";
    return {violations == 0, d};
  }
};

std::uint64_t prime_of(const GroupTable& g) { return *p_group_prime(whole_group(g)); }

Subgroup derived(const GroupTable& g) {
  const Subgroup w = whole_group(g);
  return commutator_subgroup(g, w, w);
}

Subgroup join(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> gens = a.generators();
  for (Element x : b.generators()) gens.push_back(x);
  return subgroup_generated(g, gens);
}

/// w(F) for every composition factor F of G.
bool vanishes_on_composition_factors(const Word& w, const GroupTable& g, const VerbalOptions& vo) {
  const std::vector<Subgroup> cs = composition_series(g);
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    std::vector<Element> emb;
    const GroupTable top = restrict_to(g, cs[i], &emb);
    Bitset below(top.order());
    for (std::size_t k = 0; k < emb.size(); ++k)
      if (cs[i + 1].contains(emb[k])) below.set(k);
    const Quotient f = quotient(top, subgroup_from_members(top, below));
    if (!verbal_subgroup(w, f.group, vo).is_trivial()) return false;
  }
  return true;
}

std::vector<Word> interchange_words(std::uint64_t p) {
  const auto q = static_cast<long long>(p);
  return {gamma_word(2), gamma_word(3), power_commutator_word(q, 2), power_commutator_word(q * q, 2)};
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

// ---------------------------------------------------------------------------

CheckOutcome quaternion_example(CheckContext&) {
  const GroupTable g = materialize(c3_on_q8());
  const Subgroup d2 = verbal_subgroup(delta_word(2), g);
  std::set<std::string> labels;
  for (Element e : d2.elements()) labels.insert(g.label(e));
  const bool pm1 = labels == std::set<std::string>{"(1,1)", "(1,-1)"};
  const MaximalityReport m = is_w_maximal(delta_word(2), g);
  const std::size_t dl = series(g, SeriesKind::Derived).length;
  const bool ok = g.order() == 24 && d2.order() == 2 && pm1 && m.index == 12 && m.is_w_maximal && dl == 3;
  return {ok, "|G|=" + std::to_string(g.order()) + ", |delta2(G)|=" + std::to_string(d2.order()) +
                  (pm1 ? " {+-1}" : " (not {+-1})") + ", index " + std::to_string(m.index) +
                  ", delta2-maximal " + (m.is_w_maximal ? "yes" : "no") + ", derived length " + std::to_string(dl)};
}

CheckOutcome lie_example_one(CheckContext& ctx) {
  const lie::LieRing l = lie::example_one_ring(3);
  const lie::GeneralDMax gd = lie::lie_d_maximal_general(l);
  const lie::LazardGroup lg = lie::lazard_exp(l);
  const GroupTable& g = lg.group;
  const unsigned d = min_generators(g);
  const std::size_t comm = derived(g).order();
  const bool dmax = is_d_maximal(all_subgroups(g, ctx.lattice_opts())).holds;
  const bool ok = gd.holds && g.order() == 81 && d == 3 && comm == 9 && dmax;
  std::string detail = std::string("Lie ring d-maximal ") + (gd.holds ? "yes" : "no") + " (index " +
                       std::to_string(gd.index) + ", " + std::to_string(gd.subrings) + " subrings); |G|=" +
                       std::to_string(g.order()) + ", d=" + std::to_string(d) + ", |[G,G]|=" + std::to_string(comm) +
                       (comm == 9 ? "" : " (expected 9)") + ", lattice d-maximal " + (dmax ? "yes" : "no");
  return {ok, detail};
}

CheckOutcome lie_example_two(CheckContext& ctx) {
  const lie::FormFamily ff = lie::example_two_family(3);
  std::size_t proper = 0, failing = 0;
  std::string first;
  for (unsigned j = 0; j < ff.dim; ++j) {
    lie::for_each_subspace(ff.dim, j, ff.p, [&](const lie::fp::Matrix& w) {
      ++proper;
      const std::size_t rank = j == 0 ? 0 : lie::wedge_rank(ff, w);
      if (j + ff.k() - rank >= ff.dim) {
        if (failing++ == 0) {
          first = "[";
          for (const auto& row : w) {
            first += "(";
            for (std::size_t c = 0; c < row.size(); ++c) first += (c ? "," : "") + std::to_string(row[c]);
            first += ")";
          }
          first += "]";
        }
      }
      return true;
    });
  }
  const bool lie_dmax = failing == 0;
  const lie::ClassTwoDMax r = lie::lie_d_maximal_class2(ff);
  const lie::LazardGroup lg = lie::lazard_exp(lie::lie_from_forms(ff));
  const GroupTable& g = lg.group;
  const unsigned d = min_generators(g);
  const std::size_t comm = derived(g).order();
  const bool gdmax = is_d_maximal(all_subgroups(g, ctx.lattice_opts())).holds;
  const bool ok = proper == 211 && lie_dmax && r.holds == lie_dmax && g.order() == 729 && d == 4 && comm == 9 &&
                  gdmax && gdmax == lie_dmax;
  std::string detail = std::to_string(proper) + " proper subspaces, " + std::to_string(failing) +
                       " violate the inequality" + (first.empty() ? "" : " (first " + first + ")") +
                       "; |G|=" + std::to_string(g.order()) + ", d=" + std::to_string(d) +
                       ", |[G,G]|=" + std::to_string(comm) + ", lattice d-maximal " + (gdmax ? "yes" : "no") +
                       (gdmax == lie_dmax ? ", Lie and group sides agree" : ", Lie and group sides DISAGREE");
  return {ok, detail};
}

CheckOutcome wedge_lemma(CheckContext& ctx) {
  std::mt19937_64 rng(ctx.opts.seed);
  Tally t;
  for (unsigned p : {3u, 5u}) {
    for (unsigned dim = 2; dim <= 5; ++dim) {
      for (unsigned k = 1; k <= 3; ++k) {
        std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
        for (int trial = 0; trial < 1000; ++trial) {
          lie::FormFamily ff{p, dim, {}};
          for (unsigned i = 0; i < k; ++i) {
            lie::fp::Matrix f = lie::fp::zeros(dim, dim);
            for (unsigned a = 0; a < dim; ++a)
              for (unsigned b = a + 1; b < dim; ++b) {
                f[a][b] = coef(rng);
                f[b][a] = mod(-f[a][b], p);
              }
            ff.forms.push_back(std::move(f));
          }
          const unsigned r = std::uniform_int_distribution<unsigned>(1, dim)(rng);
          lie::fp::Matrix w;
          do {
            w.assign(r, lie::Vec(dim));
            for (auto& row : w)
              for (auto& x : row) x = coef(rng);
          } while (lie::fp::rank(w, p) != r);
          const std::size_t a = lie::wedge_rank(ff, w), b = lie::value_span_dim(ff, w);
          t.expect(a == b, "p=" + std::to_string(p) + " dim=" + std::to_string(dim) + " k=" + std::to_string(k) +
                               ": " + std::to_string(a) + " vs " + std::to_string(b));
        }
      }
    }
  }
  return t.outcome("random families");
}

CheckOutcome interchange_lemma(CheckContext& ctx) {
  Tally t;
  std::map<std::string, std::size_t> by_word;
  const auto& c = ctx.pgroups();
  for (const auto& e : c.entries) {
    const std::uint64_t p = prime_of(e.table);
    for (const Word& w : interchange_words(p)) {
      const InterchangeResult r = is_interchangeable(w, e.table, ctx.verbal_opts());
      t.expect(r.holds, e.name + " " + w.to_string());
      if (!r.holds) ++by_word["p=" + std::to_string(p) + " " + w.to_string()];
    }
  }
  CheckOutcome out = t.outcome("(group, word) pairs");
  for (const auto& [k, v] : by_word) out.detail += "; " + k + ": " + std::to_string(v) + " groups";
  return out;
}

CheckOutcome maxclass_example(CheckContext&) {
  const lie::MaxClassQuotient q = lie::maximal_class_quotient(3);
  const GroupTable& g = q.group;
  const Subgroup whole = whole_group(g);
  const Subgroup z = center(g);
  const Word w = power_word(3);
  const Subgroup g3 = power_subgroup(g, 3);
  const Subgroup c = commutator_subgroup(g, g3, whole);
  const bool central = c.is_subgroup_of(z);
  const InterchangeResult r = is_interchangeable(w, g);
  const Subgroup& n = q.image_of_a;
  const Subgroup wn = verbal_subgroup(w, g, n);
  const Subgroup lhs = commutator_subgroup(g, wn, whole);
  const Subgroup rhs = interchange_rhs(w, g, n);
  const bool witness = is_normal(g, n) && !lhs.is_subgroup_of(rhs) && rhs.is_trivial() && wn == g3 && lhs == c;
  const bool ok = g.order() == 243 && c.order() == 3 && central && !r.holds && witness;
  return {ok, "|G|=" + std::to_string(g.order()) + " (precision " + std::to_string(q.precision) +
                  "), |[G^3,G]|=" + std::to_string(c.order()) + (central ? " central" : " not central") +
                  ", x^3 interchangeable " + (r.holds ? "yes" : "no") + ", image of A: N^3=G^3 " +
                  (wn == g3 ? "yes" : "no") + ", |[N^3,G]|=" + std::to_string(lhs.order()) +
                  ", |right-hand side|=" + std::to_string(rhs.order())};
}

CheckOutcome centre_theorem(CheckContext& ctx) {
  Tally t;
  std::size_t premise = 0;
  const auto& c = ctx.pgroups();
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& g = c.entries[i].table;
    const SubgroupLattice& lat = ctx.plattice(i);
    const Subgroup z = center(g);
    for (const Word& w : interchange_words(prime_of(g))) {
      if (!maximality_report(w, lat, ctx.verbal_opts()).is_w_maximal) continue;
      if (!is_interchangeable(w, g, ctx.verbal_opts()).holds) continue;
      ++premise;
      t.expect(verbal_subgroup(w, g, ctx.verbal_opts()).is_subgroup_of(z), c.entries[i].name + " " + w.to_string());
    }
  }
  return t.outcome("w-maximal interchangeable pairs (of " + std::to_string(c.entries.size() * 4) + " pairs)");
}

CheckOutcome large_subgroups(CheckContext& ctx) {
  Tally t;
  const auto& c = ctx.pgroups();
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    const GroupTable& g = e.table;
    const SubgroupLattice& lat = ctx.plattice(i);
    const std::uint64_t p = prime_of(g);
    const Series lc = series(g, SeriesKind::LowerCentral);
    for (unsigned cl = 1; cl <= 3; ++cl) {
      const std::size_t gamma = cl - 1 < lc.terms.size() ? lc.terms[cl - 1].order() : 1;
      const auto h = find_subgroup_with(lat, {cl, std::nullopt});
      t.expect(h && h->order() * gamma >= g.order(), e.name + " class<=" + std::to_string(cl));
    }
    const std::uint64_t ex = p == 2 ? 8 : p;
    const Subgroup pw = join(g, power_subgroup(g, static_cast<long long>(ex)), derived(g));
    const auto h = find_subgroup_with(lat, {2, ex});
    t.expect(h && h->order() * pw.order() >= g.order(), e.name + " exponent " + std::to_string(ex));
    t.expect(h && exact_log(h->order(), p) >= min_generators(g), e.name + " d(G) <= k");
  }
  return t.outcome("bounds");
}

CheckOutcome dmax_structure(CheckContext& ctx) {
  Tally t;
  const auto& c = ctx.pgroups();
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    const GroupTable& g = e.table;
    const std::uint64_t p = prime_of(g);
    if (p == 2 || g.order() <= p || !is_d_maximal(ctx.plattice(i)).holds) continue;
    const Subgroup dg = derived(g);
    const unsigned d = min_generators(g);
    const bool top = power_subgroup(g, static_cast<long long>(p)).is_subgroup_of(dg);
    const bool bottom = is_abelian(g, dg) && (dg.is_trivial() || exponent(g, dg) == p);
    const bool bound = d >= 2 && dg.order() <= ipow(p, d - 2);
    t.expect(top && bottom && bound, e.name + ": |[G,G]|=" + std::to_string(dg.order()) + " d=" + std::to_string(d));
  }
  return t.outcome("d-maximal odd p-groups");
}

CheckOutcome vanishing(CheckContext& ctx) {
  Tally t;
  const VerbalOptions vo = ctx.verbal_opts();
  const auto& pc = ctx.pgroups();
  for (std::size_t i = 0; i < pc.entries.size(); ++i) {
    const auto& e = pc.entries[i];
    const std::uint64_t p = prime_of(e.table);
    std::vector<Word> ws = interchange_words(p);
    ws.push_back(power_word(static_cast<long long>(p)));
    ws.push_back(delta_word(2));
    for (const Word& w : ws) {
      if (!is_hereditarily_w_maximal(w, ctx.plattice(i), vo).holds) continue;
      t.expect(verbal_subgroup(w, e.table, vo).is_trivial(), e.name + " " + w.to_string());
      t.expect(vanishes_on_composition_factors(w, e.table, vo), e.name + " factors " + w.to_string());
    }
  }
  const auto& gc = ctx.general();
  std::vector<Word> plain;
  for (long long m = 1; m <= 6; ++m) plain.push_back(power_word(m));
  for (unsigned k = 1; k <= 3; ++k) plain.push_back(gamma_word(k));
  const std::vector<Word> other = {delta_word(2), power_commutator_word(2, 2), power_commutator_word(3, 2)};
  for (std::size_t i = 0; i < gc.entries.size(); ++i) {
    const auto& e = gc.entries[i];
    for (const Word& w : plain) {
      if (!is_hereditarily_w_maximal(w, ctx.glattice(i), vo).holds) continue;
      t.expect(verbal_subgroup(w, e.table, vo).is_trivial(), e.name + " " + w.to_string());
      t.expect(vanishes_on_composition_factors(w, e.table, vo), e.name + " factors " + w.to_string());
    }
    for (const Word& w : other) {
      if (!is_hereditarily_w_maximal(w, ctx.glattice(i), vo).holds) continue;
      t.expect(vanishes_on_composition_factors(w, e.table, vo), e.name + " factors " + w.to_string());
    }
  }
  return t.outcome("hereditarily w-maximal instances");
}

CheckOutcome hdm_classification(CheckContext& ctx) {
  Tally t;
  const auto& gc = ctx.general();
  std::size_t hdm = 0;
  for (std::size_t i = 0; i < gc.entries.size(); ++i) {
    const auto& e = gc.entries[i];
    const GroupTable& g = e.table;
    const SubgroupLattice& lat = ctx.glattice(i);
    const bool h = is_hereditarily_d_maximal(lat).holds;
    const unsigned d = min_generators(g);
    const HdmShape shape = classify_hdm(g);
    hdm += h;
    t.expect(h == (d == nu(g.order())), e.name + " hdm vs d=nu");
    t.expect(h == (shape.kind != HdmShape::NotHdm), e.name + " hdm vs shape");
    const Equichain ec = equichained(lat);
    t.expect(ec.equichained == is_supersoluble(g), e.name + " equichained vs supersoluble");
    if (h) t.expect(ec.equichained && ec.length_list() == std::vector<unsigned>{d}, e.name + " chain length");
    if (is_d_maximal(lat).holds) {
      const std::vector<unsigned> counts = generator_counts(lat);
      for (std::size_t m : lat.maximal_of(lat.whole_index()))
        t.expect(counts[m] + 1 == d, e.name + " d(M)+1");
    }
  }
  const SubgroupLattice s4 = all_subgroups(materialize(symmetric(4)), ctx.lattice_opts());
  const Equichain ec = equichained(s4);
  t.expect(!ec.equichained && ec.length_list() == std::vector<unsigned>{3, 4} && chain_of_length(s4, 3) &&
               chain_of_length(s4, 4),
           "S4 chain lengths");
  CheckOutcome out = t.outcome("statements over " + std::to_string(gc.entries.size()) + " groups");
  out.detail += "; " + std::to_string(hdm) + " hereditarily d-maximal";
  return out;
}

CheckOutcome delta2_check(CheckContext& ctx) {
  const lie::Delta2Report r = lie::delta2_construction(3, 13, 1'000'000, ctx.opts.seed);
  return {r.passed(), "|G|=" + std::to_string(r.order) + ", |delta2(G)|=" + std::to_string(r.delta2_order) +
                          ", derived length " + std::to_string(r.derived_length) + ", index |G|/3 " +
                          (r.index_is_order_over_p ? "yes" : "no") + ", no root on V " +
                          (r.no_fixed_hyperplane_on_v ? "yes" : "no") + ", [G,G]=N " +
                          (r.derived_is_n ? "yes" : "no")};
}

Word random_word(std::mt19937_64& rng) {
  const unsigned arity = std::uniform_int_distribution<unsigned>(1, 3)(rng);
  std::uniform_int_distribution<unsigned> var(0, arity - 1);
  std::uniform_int_distribution<int> ex(-3, 3);
  auto plain = [&](unsigned len) {
    std::vector<Letter> ls;
    for (unsigned i = 0; i < len; ++i) {
      int e = 0;
      while (e == 0) e = ex(rng);
      ls.push_back({var(rng), e});
    }
    return Word(arity, ls);
  };
  if (rng() % 2) return plain(std::uniform_int_distribution<unsigned>(1, 10)(rng));
  // A product of commutators, sometimes times a non-commutator tail.
  Word w(arity);
  const unsigned parts = std::uniform_int_distribution<unsigned>(1, 2)(rng);
  for (unsigned i = 0; i < parts; ++i) w = w * commutator(plain(2), plain(2));
  if (rng() % 3 == 0) w = w * plain(1);
  return w;
}

CheckOutcome words_and_poset(CheckContext& ctx) {
  Tally t;
  // Commutator words against exponent sums read off in C_101.
  std::mt19937_64 rng(ctx.opts.seed);
  const GroupTable c101 = materialize(cyclic(101));
  const auto gen = static_cast<Element>(c101.find_label("g"));
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(rng);
    bool oracle = true;
    for (unsigned v = 0; v < w.arity(); ++v) {
      std::vector<Element> args(w.arity(), 0);
      args[v] = gen;
      oracle = oracle && evaluate(w, c101, args) == 0;
    }
    t.expect(is_commutator_word(w) == oracle, "commutator " + w.to_string());
  }
  for (unsigned j = 1; j <= 6; ++j)
    t.expect(w_breadth(power_word(2), materialize(cyclic(1u << j))).value == 2, "breadth C" + std::to_string(1u << j));

  const std::vector<Word> full = {parse_word("x^5"), parse_word("x^2 y^3"), parse_word("x y^2 x^-1 y"),
                                  parse_word("x^7 [x,y]")};
  for (const auto& e : ctx.pgroups().entries) {
    const std::uint64_t p = prime_of(e.table);
    for (const Word& w : full) {
      if (classify_word(w, p).kind != WordClass::FullModP) continue;
      t.expect(verbal_subgroup(w, e.table, ctx.verbal_opts()).order() == e.table.order(),
               "full mod p " + e.name + " " + w.to_string());
    }
  }

  CorpusConfig cfg;
  cfg.max_order = 24;
  cfg.builders = all_builders();
  cfg.product_depth = 2;
  cfg.words = {delta_word(2)};
  cfg.budgets = ctx.opts.budgets;
  const Corpus corpus = build_corpus(cfg);
  std::vector<nlohmann::json> records;
  std::string top_hash;
  std::optional<GroupTable> top;
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    records.push_back(atlas_record(corpus.entries[i], "G" + std::to_string(i + 1), cfg));
    if (corpus.entries[i].aliases.empty() && corpus.entries[i].name == "C3:Q8") {
      top_hash = corpus.entries[i].table.hash_hex();
      top = corpus.entries[i].table;
    }
  }
  const Poset po = poset_build(records, delta_word(2), ctx.opts.budgets);
  t.expect(po.acyclic, "poset acyclic");
  t.expect(po.unknown.empty(), "poset has unknown pairs");
  bool edge = false;
  if (top) {
    const Quotient q = quotient(*top, center(*top));
    for (const auto& e : po.edges) {
      if (e.upper != top_hash) continue;
      for (const auto& r : records)
        if (r["hash"] == e.lower && is_isomorphic(materialize(r["spec"].get<GroupSpec>()), q.group)) edge = true;
    }
  }
  t.expect(edge, "edge (C3:Q8)/{+-1} precedes C3:Q8");
  CheckOutcome out = t.outcome("statements");
  out.detail += "; poset " + std::to_string(po.nodes.size()) + " nodes, " + std::to_string(po.edges.size()) +
                " edges, " + std::to_string(po.maximal.size()) + " maximal";
  return out;
}

/// Closure of every subset of at most four elements, by repeated products.
std::set<std::vector<Element>> subset_closures(const GroupTable& g) {
  const std::size_t n = g.order();
  std::set<std::vector<Element>> out;
  std::vector<Element> pick;
  auto closure = [&] {
    std::vector<char> in(n, 0);
    in[0] = 1;
    for (Element x : pick) in[x] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t a = 0; a < n; ++a)
        if (in[a])
          for (std::size_t b = 0; b < n; ++b)
            if (in[b]) {
              const Element c = g.mul(static_cast<Element>(a), static_cast<Element>(b));
              if (!in[c]) in[c] = 1, grew = true;
            }
    }
    std::vector<Element> s;
    for (std::size_t a = 0; a < n; ++a)
      if (in[a]) s.push_back(static_cast<Element>(a));
    return s;
  };
  auto rec = [&](auto&& self, Element from) -> void {
    out.insert(closure());
    if (pick.size() == 4) return;
    for (Element x = from; x < n; ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

CheckOutcome oracles(CheckContext& ctx) {
  Tally t;
  const std::vector<Word> std_words = {gamma_word(2), gamma_word(3), delta_word(2), power_word(2), power_word(3),
                                       power_word(4), power_word(6), power_commutator_word(2, 2),
                                       power_commutator_word(3, 2)};
  VerbalOptions slow = ctx.verbal_opts();
  slow.fast_paths = false;
  const auto& gc = ctx.general();
  for (const auto& e : gc.entries) {
    if (e.table.order() > 24) continue;
    for (const Word& w : std_words)
      t.expect(verbal_subgroup(w, e.table, ctx.verbal_opts()) == verbal_subgroup(w, e.table, slow),
               "fast path " + e.name + " " + w.to_string());
    std::set<std::vector<Element>> lat;
    const SubgroupLattice full = all_subgroups(e.table, ctx.lattice_opts());
    for (const Subgroup& s : full.subgroups()) lat.insert(s.elements());
    t.expect(lat == subset_closures(e.table), "lattice " + e.name);
  }
  for (const auto& e : ctx.pgroups().entries)
    t.expect(min_generators(e.table) == min_generators_search(e.table, whole_group(e.table)), "d(G) " + e.name);
  for (unsigned p : {3u, 5u}) {
    for (const auto& r : lie::small_lie_rings(p)) {
      if (r.ring.order() > 3125) continue;
      const lie::LazardGroup lg = lie::lazard_exp(r.ring);
      t.expect(lie::matches_ring(lie::lazard_log(lg.group), r.ring, lg.code_of),
               "round trip " + r.name + " p=" + std::to_string(p));
    }
  }
  return t.outcome("comparisons");
}

}  // namespace

const std::vector<std::string>& check_scopes() {
  static const std::vector<std::string> s = {"breadth", "interchange", "dmax", "hereditary", "hdm", "oracles"};
  return s;
}

const std::vector<Check>& check_registry() {
  static const std::vector<Check> checks = {
      {"quaternion-example", "hereditary", "C3 acting on Q8 is delta2-maximal but not metabelian", 5, false,
       quaternion_example},
      {"lie-example-one", "dmax", "C3 x C3 x C9 with [x,y] = 3z is d-maximal; exp has d = 3, |[G,G]| = 9", 30, false,
       lie_example_one},
      {"lie-example-two", "dmax", "two forms on F_3^4 give a d-maximal group of order 3^6", 300, true,
       lie_example_two},
      {"wedge-lemma", "dmax", "wedge rank equals value span dimension", 60, false, wedge_lemma},
      {"interchange-lemma", "interchange", "gamma_k and x^p^i[y,z] are interchangeable in corpus p-groups", 600,
       false, interchange_lemma},
      {"maxclass-example", "interchange", "x^3 is not interchangeable in the maximal class quotient", 120, false,
       maxclass_example},
      {"centre-theorem", "interchange", "w-maximal and interchangeable implies w(G) <= Z(G)", 600, false,
       centre_theorem},
      {"large-subgroups", "interchange", "large subgroups of small class and exponent; d(G) <= k", 600, false,
       large_subgroups},
      {"dmax-structure", "dmax", "d-maximal odd p-groups: elementary abelian layers, |[G,G]| <= p^(d-2)", 600,
       false, dmax_structure},
      {"vanishing", "hereditary", "hereditarily w-maximal groups have w(G) = 1", 600, false, vanishing},
      {"hdm-classification", "hdm", "hereditarily d-maximal iff d(G) = nu(|G|) iff elementary abelian or scalar extension", 900, false,
       hdm_classification},
      {"delta2-construction", "hereditary", "delta2-maximal group of derived length 3 for p = 3, q = 13", 120, true,
       delta2_check},
      {"words-and-poset", "breadth", "commutator words, x^2-breadth, full words, delta2 poset", 600, false,
       words_and_poset},
      {"oracles", "oracles", "fast paths, lattice, d(G) and Lazard round trip against brute force", 600, false,
       oracles},
  };
  return checks;
}

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed || r.skipped; });
}

bool VerifyReport::any_budget_abort() const {
  return std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.budget_abort; });
}

VerifyReport verify_paper(const VerifyOptions& opts, const std::function<void(const CheckResult&)>& on_result) {
  const auto& reg = check_registry();
  for (const auto& o : opts.only) {
    const bool known = std::any_of(reg.begin(), reg.end(), [&](const Check& c) { return c.id == o; }) ||
                       std::find(check_scopes().begin(), check_scopes().end(), o) != check_scopes().end();
    if (!known) throw Error(ErrorKind::InvalidArgument, "no check or scope named \"" + o + "\"");
  }
  CheckContext ctx(opts);
  VerifyReport report;
  for (const Check& c : reg) {
    if (!opts.only.empty() &&
        std::none_of(opts.only.begin(), opts.only.end(), [&](const std::string& o) { return o == c.id || o == c.scope; }))
      continue;
    CheckResult r;
    r.id = c.id;
    r.scope = c.scope;
    r.title = c.title;
    r.time_limit_s = c.time_limit_s;
    if (c.heavy && opts.budget_small) {
      r.skipped = true;
      r.detail = "skipped by --budget-small";
    } else {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const CheckOutcome o = c.run(ctx);
        r.passed = o.passed;
        r.detail = o.detail;
      } catch (const Error& e) {
        r.passed = false;
        r.budget_abort = e.is_budget();
        r.detail = e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (r.seconds > r.time_limit_s) {
        r.over_time = true;
        r.passed = false;
      }
    }
    if (on_result) on_result(r);
    report.results.push_back(std::move(r));
  }
  return report;
}

std::string format_line(const CheckResult& r) {
  const char* tag = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
  std::string s = std::string(tag) + " " + r.id + " [" + r.scope + "] (" + fmt(r.seconds) + " s, limit " +
                  fmt(r.time_limit_s) + " s" + (r.over_time ? ", over time" : "") + "): " + r.detail;
  return s;
}

void to_json(nlohmann::json& j, const CheckResult& r) {
  j = {{"id", r.id},          {"scope", r.scope},     {"title", r.title},
       {"passed", r.passed},  {"skipped", r.skipped}, {"budget_abort", r.budget_abort},
       {"seconds", r.seconds}, {"time_limit_s", r.time_limit_s}, {"over_time", r.over_time},
       {"detail", r.detail}};
}

}  // namespace verba::atlas
