#include <gtest/gtest.h>

#include <filesystem>

#include "oracles.hpp"
#include "verba/error.hpp"
#include "verba/group/spec.hpp"
#include "verba/group/structure.hpp"
#include "verba/lattice/cache.hpp"
#include "verba/lattice/lattice.hpp"

using namespace verba;

namespace {

std::set<std::set<Element>> lattice_sets(const SubgroupLattice& lat) {
  std::set<std::set<Element>> out;
  for (const Subgroup& s : lat.subgroups()) out.insert(oracle::members(s));
  return out;
}

}  // namespace

TEST(Lattice, Counts) {
  EXPECT_EQ(all_subgroups(materialize(symmetric(3))).size(), 6u);
  EXPECT_EQ(all_subgroups(materialize(cyclic(5))).size(), 2u);
  EXPECT_EQ(all_subgroups(materialize(quaternion8())).size(), 6u);
  EXPECT_EQ(all_subgroups(materialize(symmetric(4))).size(), 30u);
  EXPECT_EQ(all_subgroups(materialize(elementary_abelian(2, 4))).size(), 67u);
  EXPECT_EQ(all_subgroups(GroupTable()).size(), 1u);
}

TEST(Lattice, MatchesSubsetBruteForce) {
  for (const char* name : {"S3", "Q8", "D4", "C2^3", "C12", "D6", "C2xC6", "C3xC3", "A4", "D5", "C15"}) {
    const GroupTable g = materialize(parse_named(name));
    const auto brute = oracle::all_subsets_closed(g);
    EXPECT_EQ(lattice_sets(all_subgroups(g)), std::set<std::set<Element>>(brute.begin(), brute.end())) << name;
  }
}

TEST(Lattice, MatchesSmallSubsetClosures) {
  for (const char* name : {"S4", "C3:Q8", "C2^4", "D8", "Q8xC2", "C2xA4", "C3xQ8", "D12"}) {
    const GroupTable g = materialize(parse_named(name));
    EXPECT_EQ(lattice_sets(all_subgroups(g)), oracle::small_subset_closures(g, 4)) << name;
  }
}

TEST(Lattice, CoversAreExactlyMaximality) {
  for (const char* name : {"S4", "D4", "C2^3", "Heis3", "C3:Q8"}) {
    const SubgroupLattice lat = all_subgroups(materialize(parse_named(name)));
    for (std::size_t t = 0; t < lat.size(); ++t) {
      std::vector<std::size_t> expect;
      for (std::size_t s = 0; s < lat.size(); ++s) {
        if (s == t || !lat[s].is_subgroup_of(lat[t])) continue;
        bool between = false;
        for (std::size_t u = 0; u < lat.size() && !between; ++u)
          between = u != s && u != t && lat[s].is_subgroup_of(lat[u]) && lat[u].is_subgroup_of(lat[t]);
        if (!between) expect.push_back(s);
      }
      EXPECT_EQ(lat.maximal_of(t), expect) << name << " " << t;
    }
    for (std::size_t i = 0; i < lat.size(); ++i)
      EXPECT_EQ(lat.is_normal(i), is_normal(lat.parent(), lat[i]));
    for (std::size_t i = 1; i < lat.size(); ++i) EXPECT_TRUE(lat[i - 1].canonical_less(lat[i]));
  }
}

TEST(Lattice, ClosedUnderIntersection) {
  const SubgroupLattice lat = all_subgroups(materialize(parse_named("S4")));
  for (std::size_t a = 0; a < lat.size(); ++a)
    for (std::size_t b = 0; b < lat.size(); ++b)
      EXPECT_TRUE(lat.index_of(lat[a].members() & lat[b].members()).has_value());
}

TEST(Lattice, Cap) {
  try {
    (void)all_subgroups(materialize(elementary_abelian(2, 4)), {.cap = 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  try {
    (void)all_subgroups(materialize(symmetric(4)), {.cap = 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Lattice, Frattini) {
  EXPECT_EQ(frattini(all_subgroups(materialize(cyclic(4)))).order(), 2u);
  const GroupTable q8 = materialize(quaternion8());
  EXPECT_EQ(frattini(all_subgroups(q8)), center(q8));
  EXPECT_TRUE(frattini(all_subgroups(materialize(elementary_abelian(3, 3)))).is_trivial());
  for (const char* name : {"Q8", "D4", "C2xC4", "Heis3", "C9xC3", "D8"}) {
    const GroupTable g = materialize(parse_named(name));
    const Subgroup phi = frattini(all_subgroups(g));
    EXPECT_EQ(phi, frattini_p_group(g, whole_group(g))) << name;
    EXPECT_TRUE(is_normal(g, phi));
    const Quotient q = quotient(g, phi);
    EXPECT_TRUE(frattini(all_subgroups(q.group)).is_trivial());
  }
  EXPECT_EQ(frattini(all_subgroups(materialize(symmetric(4)))).order(), 1u);
}

TEST(Lattice, MinGenerators) {
  EXPECT_EQ(min_generators(materialize(elementary_abelian(3, 3))), 3u);
  EXPECT_EQ(min_generators(materialize(symmetric(3))), 2u);
  EXPECT_EQ(min_generators(GroupTable()), 0u);
  EXPECT_EQ(min_generators(materialize(quaternion8())), 2u);
  EXPECT_EQ(min_generators(materialize(cyclic(12))), 1u);
  EXPECT_EQ(min_generators(materialize(parse_named("C2xC2xC3"))), 2u);
  EXPECT_EQ(min_generators(materialize(parse_named("S3xS3"))), 2u);
  EXPECT_EQ(min_generators(materialize(parse_named("C2^3xC3"))), 3u);
  for (const char* name : {"Q8", "D4", "C2^4", "Heis3", "C9xC3", "D8", "C2xC4xC2", "Heis5"}) {
    const GroupTable g = materialize(parse_named(name));
    EXPECT_EQ(min_generators(g), min_generators_search(g, whole_group(g))) << name;
  }
}

TEST(Lattice, ChainsAndSupersolubility) {
  const Equichain s3 = equichained(all_subgroups(materialize(symmetric(3))));
  EXPECT_TRUE(s3.equichained);
  EXPECT_EQ(s3.length_list(), std::vector<unsigned>{2});

  const SubgroupLattice s4 = all_subgroups(materialize(symmetric(4)));
  const Equichain e = equichained(s4);
  EXPECT_FALSE(e.equichained);
  EXPECT_EQ(e.length_list(), (std::vector<unsigned>{3, 4}));
  for (unsigned len : {3u, 4u}) {
    const auto chain = chain_of_length(s4, len);
    ASSERT_TRUE(chain.has_value());
    ASSERT_EQ(chain->size(), len + 1);
    EXPECT_EQ(chain->front(), s4.trivial_index());
    EXPECT_EQ(chain->back(), s4.whole_index());
    for (std::size_t i = 0; i + 1 < chain->size(); ++i) {
      const auto& m = s4.maximal_of((*chain)[i + 1]);
      EXPECT_NE(std::find(m.begin(), m.end(), (*chain)[i]), m.end());
    }
  }
  EXPECT_FALSE(chain_of_length(s4, 5).has_value());
  for (unsigned l : sample_chain_lengths(s4, 50, 3)) EXPECT_TRUE(l == 3 || l == 4);

  EXPECT_EQ(equichained(all_subgroups(materialize(elementary_abelian(2, 3)))).length_list(),
            std::vector<unsigned>{3});
  EXPECT_FALSE(is_supersoluble(materialize(symmetric(4))));
  EXPECT_TRUE(is_supersoluble(materialize(symmetric(3))));
  EXPECT_FALSE(is_supersoluble(materialize(parse_named("A4"))));
  for (const char* name : {"S3", "S4", "A4", "D6", "C3:Q8", "Q8", "C3xS3", "C2xA4", "D5", "A5"}) {
    const GroupTable g = materialize(parse_named(name));
    EXPECT_EQ(equichained(all_subgroups(g)).equichained, is_supersoluble(g)) << name;
  }
}

TEST(Lattice, CompositionSylowSimple) {
  const auto cs = composition_series(materialize(cyclic(6)));
  ASSERT_EQ(cs.size(), 3u);
  std::multiset<std::size_t> factors{cs[0].order() / cs[1].order(), cs[1].order() / cs[2].order()};
  EXPECT_EQ(factors, (std::multiset<std::size_t>{2, 3}));
  const auto s4 = composition_series(materialize(symmetric(4)));
  std::vector<std::size_t> orders;
  for (const Subgroup& s : s4) orders.push_back(s.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{24, 12, 4, 2, 1}));
  EXPECT_TRUE(is_simple(materialize(parse_named("A5"))));
  EXPECT_TRUE(is_simple(materialize(cyclic(7))));
  EXPECT_FALSE(is_simple(materialize(symmetric(4))));
  const GroupTable s3 = materialize(symmetric(3));
  const auto syl = sylow(all_subgroups(s3), 3);
  ASSERT_TRUE(syl.has_value());
  EXPECT_EQ(*syl, commutator_subgroup(s3, whole_group(s3), whole_group(s3)));
  EXPECT_EQ(sylow(all_subgroups(materialize(symmetric(4))), 2)->order(), 8u);
}

TEST(Lattice, NormalSubgroups) {
  for (const char* name : {"S4", "D4", "C2^3", "Heis3", "C3:Q8", "A5"}) {
    const GroupTable g = materialize(parse_named(name));
    EXPECT_EQ(normal_subgroups(g), normal_subgroups(all_subgroups(g))) << name;
  }
}

TEST(Lattice, DiskCache) {
  const auto dir = std::filesystem::temp_directory_path() / "verba-lattice-test";
  std::filesystem::remove_all(dir);
  const GroupTable g = materialize(symmetric(4));
  const SubgroupLattice fresh = all_subgroups(g, {.cache_dir = dir.string()});
  ASSERT_TRUE(std::filesystem::exists(lattice_cache_path(g, dir.string())));
  const auto loaded = load_cached_lattice(g, dir.string());
  ASSERT_TRUE(loaded.has_value());
  ASSERT_EQ(loaded->size(), fresh.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    EXPECT_EQ((*loaded)[i], fresh[i]);
    EXPECT_EQ(loaded->maximal_of(i), fresh.maximal_of(i));
  }
  // A different table must not pick up this file.
  EXPECT_FALSE(load_cached_lattice(materialize(parse_named("C2xA4")), dir.string()).has_value());
  std::filesystem::remove_all(dir);
}
