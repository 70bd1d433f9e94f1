#include <gtest/gtest.h>

#include <random>
#include <set>

#include "verba/error.hpp"
#include "verba/group/spec.hpp"
#include "verba/group/structure.hpp"
#include "verba/lattice/lattice.hpp"
#include "verba/lie/delta2.hpp"
#include "verba/lie/forms.hpp"
#include "verba/lie/lazard.hpp"
#include "verba/lie/maxclass.hpp"
#include "verba/lie/subrings.hpp"
#include "verba/maximality/maximality.hpp"
#include "verba/numeric.hpp"

using namespace verba;
using namespace verba::lie;

namespace {

// Upper unitriangular 3x3 matrices over F_p as a raw table, multiplied as matrices.
GroupTable unitriangular(unsigned p) {
  const std::size_t n = std::size_t{p} * p * p;
  auto code = [p](std::int64_t a, std::int64_t b, std::int64_t c) {
    return static_cast<Element>(mod(a, p) + p * mod(b, p) + p * p * mod(c, p));
  };
  std::vector<Element> mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::int64_t a = x % p, b = (x / p) % p, c = x / (p * p);
      const std::int64_t d = y % p, e = (y / p) % p, f = y / (p * p);
      // [[1,a,c],[0,1,b],[0,0,1]] * [[1,d,f],[0,1,e],[0,0,1]]
      mul[x * n + y] = code(a + d, b + e, c + f + a * e);
    }
  return GroupTable::from_cayley(n, std::move(mul));
}

FormFamily random_family(std::mt19937_64& rng, unsigned p, unsigned dim, unsigned k) {
  FormFamily ff{p, dim, {}};
  for (unsigned i = 0; i < k; ++i) {
    fp::Matrix m = fp::zeros(dim, dim);
    for (unsigned a = 0; a < dim; ++a)
      for (unsigned b = a + 1; b < dim; ++b) {
        m[a][b] = static_cast<std::int64_t>(rng() % p);
        m[b][a] = mod(-m[a][b], p);
      }
    ff.forms.push_back(std::move(m));
  }
  return ff;
}

fp::Matrix random_subspace(std::mt19937_64& rng, unsigned p, unsigned dim) {
  const unsigned r = static_cast<unsigned>(rng() % (dim + 1));
  fp::Matrix w;
  while (w.size() < r) {
    Vec v(dim);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % p);
    fp::Matrix t = w;
    t.push_back(v);
    if (fp::rank(t, p) == t.size()) w = std::move(t);
  }
  return w;
}

std::uint64_t vec_code(const Vec& v, unsigned p) {
  std::uint64_t c = 0;
  for (auto x : v) c = c * p + static_cast<std::uint64_t>(x);
  return c;
}

// Spans of all j-tuples of vectors, as sets of vector codes.
std::size_t brute_subspace_count(unsigned n, unsigned j, unsigned p) {
  const std::uint64_t total = ipow(p, n);
  std::vector<Vec> vecs(total, Vec(n));
  for (std::uint64_t c = 0; c < total; ++c)
    for (unsigned i = 0, x = static_cast<unsigned>(c); i < n; ++i, x /= p) vecs[c][n - 1 - i] = x % p;
  std::set<std::set<std::uint64_t>> spans;
  std::vector<std::uint64_t> idx(j, 0);
  while (true) {
    fp::Matrix rows;
    for (auto i : idx) rows.push_back(vecs[i]);
    if (fp::rank(rows, p) == j) {
      std::set<std::uint64_t> s;
      for (std::uint64_t coeffs = 0; coeffs < ipow(p, j); ++coeffs) {
        Vec v(n, 0);
        std::uint64_t c = coeffs;
        for (unsigned r = 0; r < j; ++r, c /= p)
          for (unsigned i = 0; i < n; ++i) v[i] = (v[i] + static_cast<std::int64_t>(c % p) * rows[r][i]) % p;
        s.insert(vec_code(v, p));
      }
      spans.insert(std::move(s));
    }
    std::size_t i = 0;
    while (i < j && ++idx[i] == total) idx[i++] = 0;
    if (i == j) break;
  }
  return j == 0 ? 1 : spans.size();
}

}  // namespace

TEST(Forms, LieFromForms) {
  const LieRing h = lie_from_forms(heisenberg_family(3));
  EXPECT_EQ(h.rank(), 3u);
  EXPECT_EQ(h.nilpotency_class(), 2u);
  EXPECT_EQ(lie_from_forms(FormFamily{3, 3, {fp::zeros(3, 3)}}).nilpotency_class(), 1u);
  const LieRing two = lie_from_forms(example_two_family(3));
  EXPECT_EQ(two.rank(), 6u);
  EXPECT_EQ(two.nilpotency_class(), 2u);
  try {
    (void)lie_from_forms(FormFamily{3, 2, {{{0, 1}, {1, 0}}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAntisymmetric);
  }
  const nlohmann::json j = example_two_family(5);
  EXPECT_EQ(j.get<FormFamily>(), example_two_family(5));
  const FormFamily flat = nlohmann::json::parse(R"({"p":3,"dim":2,"forms":[[0,1,2,0]]})").get<FormFamily>();
  EXPECT_EQ(flat, heisenberg_family(3));
}

TEST(Forms, WedgeRankMatchesValueSpan) {
  std::mt19937_64 rng(7);
  for (unsigned p : {3u, 5u})
    for (unsigned dim = 2; dim <= 5; ++dim)
      for (unsigned k = 1; k <= 3; ++k)
        for (int t = 0; t < 50; ++t) {
          const FormFamily ff = random_family(rng, p, dim, k);
          const fp::Matrix w = random_subspace(rng, p, dim);
          EXPECT_EQ(wedge_rank(ff, w), value_span_dim(ff, w));
        }
  const FormFamily two = example_two_family(3);
  EXPECT_EQ(wedge_rank(two), 2u);
  EXPECT_EQ(value_span_dim(two, fp::identity(4)), 2u);
  EXPECT_EQ(wedge_rank(FormFamily{3, 3, {}}), 0u);
  // The radical of a degenerate form.
  const FormFamily deg{3, 3, {{{0, 1, 0}, {2, 0, 0}, {0, 0, 0}}}};
  EXPECT_EQ(wedge_rank(deg, {{0, 0, 1}}), 0u);
  EXPECT_EQ(value_span_dim(deg, {{0, 0, 1}}), 0u);
  try {
    (void)wedge_rank(two, {{1, 0, 0, 0}, {2, 0, 0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadSubspace);
  }
}

TEST(Forms, SubspaceEnumeration) {
  for (unsigned p : {2u, 3u})
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned j = 0; j <= n; ++j) {
        if (ipow(p, n * j) > 600'000) continue;
        std::set<std::set<std::uint64_t>> seen;
        std::size_t count = 0;
        for_each_subspace(n, j, p, [&](const fp::Matrix& w) {
          ++count;
          EXPECT_EQ(fp::rank(w, p), j);
          const fp::Echelon e = fp::rref(w, p);
          EXPECT_EQ(e.rows, w);
          return true;
        });
        EXPECT_EQ(count, gaussian_binomial(n, j, p)) << p << " " << n << " " << j;
        EXPECT_EQ(count, brute_subspace_count(n, j, p)) << p << " " << n << " " << j;
      }
  std::uint64_t proper = 0;
  for (unsigned j = 0; j < 4; ++j) proper += gaussian_binomial(4, j, 3);
  EXPECT_EQ(proper, 211u);
}

TEST(Forms, ClassTwoDMaximality) {
  EXPECT_FALSE(lie_d_maximal_class2(heisenberg_family(3)).holds);
  EXPECT_FALSE(lie_d_maximal_class2(heisenberg_family(5)).holds);
  const ClassTwoDMax zero = lie_d_maximal_class2(FormFamily{3, 3, {fp::zeros(3, 3)}});
  EXPECT_FALSE(zero.holds);
  EXPECT_TRUE(lie_d_maximal_class2(FormFamily{3, 4, {standard_form(4, 3)}}).holds);

  // Two alternating forms on F_p^4 always share an isotropic plane; this
  // one is explicit for the pair below.
  const FormFamily two = example_two_family(3);
  const ClassTwoDMax r = lie_d_maximal_class2(two);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(wedge_rank(two, *r.witness), 0u);
  const fp::Matrix plane{{1, 0, 2, 1}, {0, 1, 1, 0}};
  EXPECT_EQ(wedge_rank(two, plane), 0u);
  EXPECT_EQ(value_span_dim(two, plane), 0u);

  try {
    (void)lie_d_maximal_class2(two, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SubspaceCountExceedsBudget);
  }
}

TEST(Forms, ClassTwoAgreesWithGroupSide) {
  std::mt19937_64 rng(11);
  std::vector<FormFamily> fams{heisenberg_family(3), example_two_family(3), FormFamily{3, 4, {standard_form(4, 3)}},
                               FormFamily{5, 4, {standard_form(4, 5)}}};
  for (unsigned dim = 2; dim <= 4; ++dim)
    for (unsigned k = 1; k <= 2; ++k)
      for (int t = 0; t < 6; ++t) fams.push_back(random_family(rng, 3, dim, k));
  int positive = 0;
  for (const FormFamily& ff : fams) {
    if (wedge_rank(ff) != ff.k()) continue;
    const LazardGroup g = lazard_exp(lie_from_forms(ff));
    const bool lie_side = lie_d_maximal_class2(ff).holds;
    EXPECT_EQ(lie_side, is_d_maximal(g.group).holds);
    EXPECT_EQ(lie_side, lie_d_maximal_general(lie_from_forms(ff)).holds);
    positive += lie_side;
  }
  EXPECT_GE(positive, 2);
}

TEST(Forms, Search) {
  EXPECT_TRUE(form_search(3, 2, 1).empty());
  FormSearchOptions canon;
  canon.first_form = standard_form(4, 3);
  EXPECT_TRUE(form_search(3, 4, 2, canon).empty());
  const auto one = form_search(3, 4, 1);
  EXPECT_FALSE(one.empty());
  for (const auto& hit : one) EXPECT_EQ(hit.derived_dim, 1u);
  FormSearchOptions rnd;
  rnd.strategy = SearchStrategy::Random;
  rnd.seed = 42;
  rnd.trials = 30;
  const auto a = form_search(3, 4, 1, rnd), b = form_search(3, 4, 1, rnd);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].family, b[i].family);
  EXPECT_FALSE(a.empty());
}

TEST(Subrings, Examples) {
  const GeneralDMax ex1 = lie_d_maximal_general(example_one_ring(3));
  EXPECT_TRUE(ex1.holds);
  EXPECT_EQ(ex1.index, 27u);
  EXPECT_TRUE(lie_d_maximal_general(LieRing(3)).holds);
  for (unsigned r = 1; r <= 3; ++r)
    EXPECT_TRUE(lie_d_maximal_general(LieRing::make(3, std::vector<unsigned>(r, 1), {})).holds) << r;
  EXPECT_FALSE(lie_d_maximal_general(LieRing::make(3, {2}, {})).holds);
  EXPECT_FALSE(lie_d_maximal_general(lie_from_forms(heisenberg_family(3))).holds);
}

TEST(Subrings, MatchSubgroupsOfExp) {
  for (unsigned p : {3u, 5u})
    for (const NamedRing& nr : small_lie_rings(p)) {
      if (nr.ring.order() > 729) continue;
      const LazardGroup g = lazard_exp(nr.ring);
      const SubgroupLattice lat = all_subgroups(g.group);
      const auto subs = all_subrings(nr.ring);
      ASSERT_EQ(subs.size(), lat.size()) << nr.name;
      std::set<std::vector<std::uint64_t>> ring_sets, group_sets;
      for (const Subring& s : subs) {
        std::vector<std::uint64_t> codes;
        s.members.for_each([&](std::size_t c) { codes.push_back(c); });
        ring_sets.insert(codes);
      }
      for (const Subgroup& s : lat.subgroups()) {
        std::vector<std::uint64_t> codes;
        for (Element e : s.elements()) codes.push_back(g.code_of[e]);
        std::sort(codes.begin(), codes.end());
        group_sets.insert(codes);
      }
      EXPECT_EQ(ring_sets, group_sets) << nr.name;
      // |G : G^p[G,G]| = |L : pL + [L,L]|
      const Subgroup whole = whole_group(g.group);
      const Subgroup phi = frattini_p_group(g.group, whole);
      std::vector<Vec> basis;
      for (std::size_t i = 0; i < nr.ring.rank(); ++i) basis.push_back(nr.ring.basis(i));
      EXPECT_EQ(g.group.order() / phi.order(), frattini_index(nr.ring, subring_closure(nr.ring, basis))) << nr.name;
      EXPECT_EQ(lie_d_maximal_general(nr.ring).holds, is_d_maximal(lat).holds) << nr.name;
    }
}

TEST(Lazard, RoundTrip) {
  for (unsigned p : {3u, 5u})
    for (const NamedRing& nr : small_lie_rings(p)) {
      if (nr.ring.order() > 3125) continue;
      const LazardGroup g = lazard_exp(nr.ring);
      EXPECT_EQ(g.group.order(), nr.ring.order());
      const LieTable t = lazard_log(g.group);
      EXPECT_TRUE(matches_ring(t, nr.ring, g.code_of)) << nr.name;
      const LieRing back = t.to_lie_ring();
      EXPECT_EQ(back.order(), nr.ring.order());
      EXPECT_TRUE(is_isomorphic(lazard_exp(back).group, g.group).has_value()) << nr.name;
    }
}

TEST(Lazard, Examples) {
  const LazardGroup ab = lazard_exp(LieRing::make(3, {1, 2}, {}));
  EXPECT_TRUE(is_isomorphic(ab.group, materialize(parse_named("C3xC9"))).has_value());

  const LazardGroup heis = lazard_exp(lie_from_forms(heisenberg_family(3)));
  EXPECT_EQ(heis.group.order(), 27u);
  EXPECT_EQ(exponent(heis.group), 3u);
  EXPECT_EQ(series(heis.group, SeriesKind::LowerCentral).length, 2u);
  EXPECT_TRUE(is_isomorphic(heis.group, unitriangular(3)).has_value());

  const LazardGroup ex1 = lazard_exp(example_one_ring(3));
  EXPECT_EQ(ex1.group.order(), 81u);
  EXPECT_EQ(min_generators(ex1.group), 3u);
  const Subgroup whole = whole_group(ex1.group);
  // [G,G] = exp([L,L]) = <3z>.
  EXPECT_EQ(commutator_subgroup(ex1.group, whole, whole).order(), 3u);
  EXPECT_TRUE(is_d_maximal(ex1.group).holds);

  const LazardGroup ex2 = lazard_exp(lie_from_forms(example_two_family(3)));
  EXPECT_EQ(ex2.group.order(), 729u);
  EXPECT_EQ(min_generators(ex2.group), 4u);
  const Subgroup w2 = whole_group(ex2.group);
  EXPECT_EQ(commutator_subgroup(ex2.group, w2, w2).order(), 9u);

  try {
    (void)lazard_exp(LieRing::make(2, {1, 1}, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EvenPrime);
  }
  try {
    (void)lazard_log(materialize(symmetric(3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAPGroup);
  }
}

TEST(MaxClass, QuotientForThree) {
  const MaxClassQuotient q = maximal_class_quotient(3);
  const GroupTable& g = q.group;
  EXPECT_EQ(g.order(), 243u);
  EXPECT_EQ(q.image_of_a.order(), 81u);
  EXPECT_TRUE(is_normal(g, q.image_of_a));
  const Subgroup whole = whole_group(g);
  const Subgroup gp = power_subgroup(g, whole, 3);
  const Subgroup c = commutator_subgroup(g, gp, whole);
  EXPECT_EQ(c.order(), 3u);
  EXPECT_TRUE(c.is_subgroup_of(center(g)));
  // [N^p, G] against the right-hand side for N the image of A.
  const Word w = power_word(3);
  const Subgroup np = power_subgroup(g, q.image_of_a, 3);
  EXPECT_EQ(np, gp);
  const Subgroup lhs = commutator_subgroup(g, np, whole);
  EXPECT_FALSE(lhs.is_subgroup_of(interchange_rhs(w, g, q.image_of_a)));
  EXPECT_TRUE(interchange_rhs(w, g, q.image_of_a).is_trivial());
  EXPECT_FALSE(is_interchangeable(w, g).holds);
  EXPECT_EQ(series(g, SeriesKind::LowerCentral).length, 4u);
}

TEST(MaxClass, Errors) {
  for (auto [p, kind] : {std::pair{2u, ErrorKind::EvenPrime}, std::pair{7u, ErrorKind::PrimeTooLarge},
                         std::pair{5u, ErrorKind::OrderExceedsCap}}) {
    try {
      (void)maximal_class_quotient(p);
      FAIL() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), kind) << p;
    }
  }
}

TEST(MaxClass, CoverIsAGroupOfMaximalClass) {
  const MaxClassCover h(3, 2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    const auto a = static_cast<Element>(rng() % h.order()), b = static_cast<Element>(rng() % h.order()),
               c = static_cast<Element>(rng() % h.order());
    ASSERT_EQ(h.mul(h.mul(a, b), c), h.mul(a, h.mul(b, c)));
    ASSERT_EQ(h.mul(a, h.inv(a)), 0u);
  }
}

TEST(Delta2, Construction) {
  EXPECT_EQ(multiplicative_order(3, 13), 3u);
  const Vec f = least_cyclotomic_factor(3, 13, 3);
  ASSERT_EQ(f.size(), 3u);
  const fp::Matrix c = companion(f, 3);
  EXPECT_EQ(fp::power(c, 13, 3), fp::identity(3));
  EXPECT_NE(fp::power(c, 1, 3), fp::identity(3));

  const Delta2Report r = delta2_construction(3, 13, 200'000);
  EXPECT_EQ(r.order, 28431u);
  EXPECT_EQ(r.d, 6u);
  EXPECT_TRUE(r.no_fixed_hyperplane_on_v);
  EXPECT_TRUE(r.one_is_eigenvalue);
  EXPECT_TRUE(r.derived_is_n);
  EXPECT_EQ(r.delta2_order, 3u);
  EXPECT_EQ(r.derived_length, 3u);
  EXPECT_TRUE(r.index_is_order_over_p);
  EXPECT_TRUE(r.associative);
  EXPECT_TRUE(r.inverses_exact);
  EXPECT_TRUE(r.passed());

  try {
    (void)delta2_construction(3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Delta2, NormalSubgroupIsExpOfQuotientRing) {
  const Delta2Group g(3, 13);
  // L/Z from the form B: basis e_1..e_d and one central element.
  FormFamily ff{3, g.d(), {g.form()}};
  const LieRing l = lie_from_forms(ff);
  const LazardGroup n = lazard_exp(l);
  ASSERT_EQ(n.group.order(), 2187u);
  const auto p = static_cast<std::uint64_t>(g.p());
  const std::uint64_t pd = ipow(p, g.d());
  // Ring code is mixed radix over (e_1..e_d, z); the structured code is
  // v + a p^d with v in the same digit order.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t x = rng() % (pd * p), y = rng() % (pd * p);
    const Element gx = n.index_of[x], gy = n.index_of[y];
    ASSERT_EQ(n.code_of[n.group.mul(gx, gy)], g.mul(static_cast<Element>(x), static_cast<Element>(y)));
  }
}
