#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "verba/error.hpp"
#include "verba/group/algorithms.hpp"
#include "verba/group/spec.hpp"
#include "verba/group/structure.hpp"

using namespace verba;

namespace {

Subgroup by_labels(const GroupTable& g, std::initializer_list<const char*> labels) {
  Bitset b(g.order());
  for (const char* l : labels) {
    const auto i = g.find_label(l);
    EXPECT_LT(i, g.order()) << l;
    b.set(i);
  }
  return subgroup_from_members(g, b);
}

Subgroup of_order(const GroupTable& g, std::size_t order) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == order) return algo::generate(g, {x});
  return Subgroup::trivial(g.order());
}

}  // namespace

TEST(Materialize, CyclicElementOrders) {
  const GroupTable c6 = materialize(cyclic(6));
  ASSERT_EQ(c6.order(), 6u);
  for (Element i = 0; i < 6; ++i) EXPECT_EQ(c6.element_order(i), 6 / std::gcd(i, 6u)) << i;
}

TEST(Materialize, IdentityIsZeroEverywhere) {
  for (const char* name : {"C1", "C7", "D5", "Q8", "S4", "C2^3", "C3:Q8", "A4", "Heis3", "C2xS3"}) {
    const GroupTable g = materialize(parse_named(name));
    for (Element i = 0; i < g.order(); ++i) {
      EXPECT_EQ(g.mul(0, i), i);
      EXPECT_EQ(g.mul(i, 0), i);
      EXPECT_EQ(g.mul(i, g.inv(i)), 0u);
    }
    EXPECT_TRUE(g.check_associative()) << name;
  }
}

TEST(Materialize, Orders) {
  EXPECT_EQ(materialize(dihedral(4)).order(), 8u);
  EXPECT_EQ(materialize(symmetric(5)).order(), 120u);
  EXPECT_EQ(materialize(c3_on_q8()).order(), 24u);
  EXPECT_EQ(materialize(elementary_abelian(3, 4)).order(), 81u);
  EXPECT_EQ(materialize(parse_named("Heis5")).order(), 125u);
  EXPECT_EQ(materialize(direct_product(cyclic(4), quaternion8())).order(), 32u);
}

TEST(Materialize, ScalarExtensionOfOrderSixIsS3) {
  const GroupTable se = materialize(scalar_extension(2, 3, 1, 2));
  const GroupTable s3 = materialize(symmetric(3));
  auto iso = is_isomorphic(se, s3);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(iso->is_homomorphism());
  EXPECT_TRUE(iso->is_injective());
}

TEST(Materialize, CapAndInvalidAction) {
  try {
    (void)materialize(symmetric(5), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderExceedsCap);
  }
  // i -> -1 is not an automorphism of Q8.
  try {
    (void)materialize(semidirect(quaternion8(), cyclic(2), {{std::string("-1"), std::string("j")}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidAction);
  }
  // An automorphism of order 3 cannot come from C2.
  try {
    (void)materialize(semidirect(quaternion8(), cyclic(2), {{std::string("j"), std::string("k")}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidAction);
  }
  try {
    (void)materialize(scalar_extension(2, 5, 1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidAction);
  }
}

TEST(Materialize, RawTableValidation) {
  // Z/3 table accepted.
  EXPECT_EQ(materialize(spec::CayleyTable{3, {0, 1, 2, 1, 2, 0, 2, 0, 1}}).order(), 3u);
  // A Latin square with identity that is not associative (order 5 loop).
  const std::vector<Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  try {
    (void)materialize(spec::CayleyTable{5, loop});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGroup);
  }
  try {
    (void)GroupTable::from_cayley(2, {0, 1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGroup);
  }
}

TEST(Materialize, PermutationCompositionIsLeftToRight) {
  // (0 1) then (1 2) sends 0 -> 2 -> 1 -> 0.
  const BuiltGroup b = materialize_with_generators(permutations(3, {{1, 0, 2}, {0, 2, 1}}));
  const Element t = b.generators[0], u = b.generators[1];
  EXPECT_EQ(b.table.label(b.table.mul(t, u)), "(0 2 1)");
}

TEST(SpecJson, RoundTripIsByteIdentical) {
  for (const GroupSpec& s : {cyclic(6), dihedral(4), quaternion8(), symmetric(4), elementary_abelian(3, 2),
                             direct_product(cyclic(2), symmetric(3)), c3_on_q8(), scalar_extension(3, 7, 2, 2),
                             parse_named("Heis3"), permutations(4, {{1, 2, 3, 0}})}) {
    const std::string text = to_canonical_json(s);
    const GroupSpec back = parse_group_spec(text);
    EXPECT_EQ(to_canonical_json(back), text);
    EXPECT_EQ(materialize(back).hash(), materialize(s).hash());
  }
  EXPECT_EQ(to_canonical_json(cyclic(6)), R"({"kind":"cyclic","n":6})");
}

TEST(Quotient, Examples) {
  const GroupTable c6 = materialize(cyclic(6));
  Quotient q = quotient(c6, of_order(c6, 3));
  EXPECT_EQ(q.group.order(), 2u);

  const GroupTable s3 = materialize(symmetric(3));
  Quotient q2 = quotient(s3, of_order(s3, 3));
  EXPECT_EQ(q2.group.order(), 2u);
  EXPECT_TRUE(is_isomorphic(q2.group, materialize(cyclic(2))).has_value());
  EXPECT_TRUE(q2.projection.is_homomorphism());
  EXPECT_TRUE(q2.projection.is_surjective());
  EXPECT_EQ(q2.projection.kernel(), of_order(s3, 3));

  const GroupTable q8 = materialize(quaternion8());
  Quotient q3 = quotient(q8, by_labels(q8, {"1", "-1"}));
  EXPECT_EQ(q3.group.order(), 4u);
  EXPECT_EQ(exponent(q3.group), 2u);

  try {
    (void)quotient(s3, of_order(s3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormal);
  }
}

TEST(Commutators, AgreeWithExhaustiveSet) {
  for (const char* name : {"S3", "Q8", "D4", "A4", "S4", "C3:Q8", "C2xD5", "Heis3", "D6", "C5xS3"}) {
    const GroupTable g = materialize(parse_named(name));
    const Subgroup all = whole_group(g);
    EXPECT_EQ(oracle::members(commutator_subgroup(g, all, all)), oracle::derived_subgroup(g)) << name;
  }
  const GroupTable q8 = materialize(quaternion8());
  const Subgroup all = whole_group(q8);
  EXPECT_EQ(commutator_subgroup(q8, all, all), by_labels(q8, {"1", "-1"}));
}

TEST(Commutators, SymmetricInArguments) {
  const GroupTable g = materialize(symmetric(4));
  const Subgroup all = whole_group(g);
  const Subgroup d = commutator_subgroup(g, all, all);
  const Subgroup v = commutator_subgroup(g, d, d);
  EXPECT_EQ(commutator_subgroup(g, d, all), commutator_subgroup(g, all, d));
  EXPECT_EQ(commutator_subgroup(g, v, d), commutator_subgroup(g, d, v));
  EXPECT_EQ(v.order(), 4u);
}

TEST(Commutators, AbelianIsTrivial) {
  const GroupTable g = materialize(parse_named("C4xC6"));
  const Subgroup all = whole_group(g);
  EXPECT_TRUE(commutator_subgroup(g, all, of_order(g, 4)).is_trivial());
}

TEST(Series, Examples) {
  const GroupTable g = materialize(c3_on_q8());
  const Series d = series(g, SeriesKind::Derived);
  ASSERT_TRUE(d.reaches_trivial);
  EXPECT_EQ(d.length, 3u);
  std::vector<std::size_t> orders;
  for (const auto& t : d.terms) orders.push_back(t.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{24, 8, 2, 1}));

  const Series l = series(materialize(dihedral(4)), SeriesKind::LowerCentral);
  EXPECT_TRUE(l.reaches_trivial);
  EXPECT_EQ(l.length, 2u);

  const Series a = series(materialize(cyclic(10)), SeriesKind::LowerCentral);
  EXPECT_EQ(a.length, 1u);
  EXPECT_TRUE(a.terms.back().is_trivial());

  const Series s3 = series(materialize(symmetric(3)), SeriesKind::LowerCentral);
  EXPECT_FALSE(s3.reaches_trivial);
}

TEST(Structure, PowerCenterExponent) {
  EXPECT_EQ(power_subgroup(materialize(cyclic(4)), 2).order(), 2u);
  const GroupTable q8 = materialize(quaternion8());
  EXPECT_EQ(center(q8), by_labels(q8, {"1", "-1"}));
  EXPECT_EQ(exponent(materialize(elementary_abelian(2, 2))), 2u);
  EXPECT_EQ(exponent(materialize(symmetric(4))), 12u);
  const auto orders = element_orders(q8);
  EXPECT_EQ(std::count(orders.begin(), orders.end(), 2u), 1);
  const GroupTable s3 = materialize(symmetric(3));
  EXPECT_EQ(centralizer(s3, of_order(s3, 3)).order(), 3u);
  EXPECT_EQ(normalizer(s3, of_order(s3, 2)).order(), 2u);
}

TEST(Isomorphism, Examples) {
  const GroupTable c6 = materialize(cyclic(6));
  const GroupTable c2c3 = materialize(direct_product(cyclic(2), cyclic(3)));
  auto iso = is_isomorphic(c6, c2c3);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(iso->is_homomorphism());
  EXPECT_TRUE(iso->is_injective());
  EXPECT_FALSE(is_isomorphic(materialize(quaternion8()), materialize(dihedral(4))).has_value());
  const GroupTable s4 = materialize(symmetric(4));
  auto self = is_isomorphic(s4, s4);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(self->is_homomorphism());
  EXPECT_FALSE(is_isomorphic(materialize(parse_named("D4xC2")), materialize(parse_named("Q8xC2"))).has_value());
  // Two presentations of C3 x S3.
  auto two = is_isomorphic(materialize(parse_named("C3xS3")), materialize(parse_named("S3xC3")));
  ASSERT_TRUE(two.has_value());
  EXPECT_TRUE(two->is_homomorphism());
}

TEST(Isomorphism, SymmetricOnSmallGroups) {
  const std::vector<const char*> names = {"C8", "C2xC4", "C2^3", "D4", "Q8", "C12", "C2xC6", "A4", "D6", "C3:Q8",
                                          "S4", "C2xA4", "SE(3,7,1,2)", "C21"};
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j) {
      const GroupTable a = materialize(parse_named(names[i]));
      const GroupTable b = materialize(parse_named(names[j]));
      EXPECT_EQ(is_isomorphic(a, b).has_value(), i == j) << names[i] << " " << names[j];
    }
}

TEST(DirectProduct, ProjectionsAreHomomorphisms) {
  // Element labels of a product are "(a,b)"; project by parsing the label.
  const GroupTable a = materialize(symmetric(3));
  const GroupTable b = materialize(cyclic(4));
  const GroupTable p = materialize(direct_product(symmetric(3), cyclic(4)));
  ASSERT_EQ(p.order(), 24u);
  Homomorphism left{p, a, {}}, right{p, b, {}};
  for (Element x = 0; x < p.order(); ++x) {
    const std::string l = p.label(x);
    const auto comma = l.rfind(',');
    left.image.push_back(static_cast<Element>(a.find_label(l.substr(1, comma - 1))));
    right.image.push_back(static_cast<Element>(b.find_label(l.substr(comma + 1, l.size() - comma - 2))));
  }
  EXPECT_TRUE(left.is_homomorphism());
  EXPECT_TRUE(right.is_homomorphism());
  EXPECT_TRUE(left.is_surjective());
  EXPECT_TRUE(right.is_surjective());
}

TEST(Restriction, SubgroupTable) {
  const GroupTable s4 = materialize(symmetric(4));
  const Subgroup d = commutator_subgroup(s4, whole_group(s4), whole_group(s4));
  std::vector<Element> emb;
  const GroupTable a4 = restrict_to(s4, d, &emb);
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_TRUE(is_isomorphic(a4, materialize(parse_named("A4"))).has_value());
  for (Element i = 0; i < a4.order(); ++i)
    for (Element j = 0; j < a4.order(); ++j) EXPECT_EQ(emb[a4.mul(i, j)], s4.mul(emb[i], emb[j]));
}
