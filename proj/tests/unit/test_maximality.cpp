#include <gtest/gtest.h>

#include "verba/error.hpp"
#include "verba/group/spec.hpp"
#include "verba/maximality/maximality.hpp"
#include "verba/numeric.hpp"

using namespace verba;

TEST(Breadth, Examples) {
  const Breadth s3 = w_breadth(parse_word("[x,y]"), materialize(symmetric(3)));
  EXPECT_EQ(s3.value, 3u);
  EXPECT_EQ(s3.witness.order(), 3u);
  EXPECT_EQ(w_breadth(parse_word("[x,y]"), GroupTable()).value, 1u);
  for (unsigned j = 1; j <= 6; ++j)
    EXPECT_EQ(w_breadth(power_word(2), materialize(cyclic(1u << j))).value, 2u) << j;
}

TEST(WMaximal, Examples) {
  const GroupTable g = materialize(c3_on_q8());
  const MaximalityReport r = is_w_maximal(delta_word(2), g);
  EXPECT_TRUE(r.is_w_maximal);
  EXPECT_EQ(r.index, 12u);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_GE(r.breadth, r.index);

  const MaximalityReport q = is_w_maximal(parse_word("[x,y]"), materialize(quaternion8()));
  EXPECT_FALSE(q.is_w_maximal);
  ASSERT_TRUE(q.witness.has_value());
  EXPECT_EQ(q.witness->order(), 4u);
  EXPECT_EQ(q.index, 4u);

  EXPECT_TRUE(is_w_maximal(parse_word("[x,y]"), materialize(elementary_abelian(2, 3))).is_w_maximal);
}

TEST(WMaximal, HereditaryMatchesPerSubgroupTables) {
  const std::vector<Word> words = {parse_word("[x,y]"), power_word(2), power_word(3), delta_word(2),
                                   power_commutator_word(2, 2)};
  for (const char* name : {"S4", "D4", "C3:Q8", "Q8", "C2^3", "S3", "C3xS3"}) {
    const GroupTable g = materialize(parse_named(name));
    const SubgroupLattice lat = all_subgroups(g);
    for (const Word& w : words) {
      const HereditaryResult h = is_hereditarily_w_maximal(w, lat);
      std::optional<Subgroup> first;
      for (const Subgroup& s : lat.subgroups()) {
        if (!is_w_maximal(w, restrict_to(g, s)).is_w_maximal) {
          first = s;
          break;
        }
      }
      EXPECT_EQ(h.holds, !first.has_value()) << name << " " << w;
      if (first) {
        ASSERT_TRUE(h.first_failing.has_value());
        EXPECT_EQ(*h.first_failing, *first) << name << " " << w;
      }
    }
  }
}

TEST(DMaximal, Examples) {
  EXPECT_EQ(nu(12), 3u);
  const GroupTable s3 = materialize(symmetric(3));
  EXPECT_TRUE(is_hereditarily_d_maximal(s3).holds);
  EXPECT_EQ(classify_hdm(s3), (HdmShape{HdmShape::ScalarExtension, 2, 3, 0, 1, 2, ""}));
  EXPECT_EQ(min_generators(s3), nu(6));
  const DMaxResult c4 = is_d_maximal(materialize(cyclic(4)));
  EXPECT_FALSE(c4.holds);
  ASSERT_TRUE(c4.witness.has_value());
  EXPECT_EQ(c4.witness->order(), 2u);
  EXPECT_TRUE(is_d_maximal(materialize(elementary_abelian(3, 2))).holds);
  EXPECT_EQ(classify_hdm(GroupTable()).kind, HdmShape::ElementaryAbelian);
}

TEST(DMaximal, ClassificationAgreesWithLatticeAndNu) {
  for (const char* name : {"S3", "S4", "A4", "D5", "Q8", "C2^3", "C3^2", "C6", "C4", "D6", "SE(3,7,1,2)",
                           "SE(2,3,2,2)", "SE(2,5,2,4)", "SE(3,13,1,3)", "C3:Q8", "C2xS3", "E5^2", "C1"}) {
    const GroupTable g = materialize(parse_named(name));
    const bool hdm = is_hereditarily_d_maximal(g).holds;
    EXPECT_EQ(hdm, min_generators(g) == nu(g.order())) << name;
    EXPECT_EQ(hdm, classify_hdm(g).kind != HdmShape::NotHdm) << name << " " << to_string(classify_hdm(g));
  }
  EXPECT_EQ(classify_hdm(materialize(parse_named("SE(3,7,1,4)"))).lambda, 2u);
}

TEST(Precedes, Examples) {
  const Word d2 = delta_word(2);
  const GroupTable g = materialize(c3_on_q8());
  const PrecedesResult self = precedes(d2, g, g);
  EXPECT_EQ(self.answer, Tri::Yes);
  EXPECT_TRUE(self.kernel->is_trivial());

  const Quotient q = quotient(g, center(g));
  const PrecedesResult down = precedes(d2, q.group, g);
  EXPECT_EQ(down.answer, Tri::Yes);
  EXPECT_EQ(down.kernel->order(), 2u);
  EXPECT_EQ(precedes(d2, g, q.group).answer, Tri::No);

  try {
    (void)precedes(parse_word("[x,y]"), materialize(cyclic(2)), materialize(symmetric(3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotWMaximal);
  }
}

TEST(Interchange, Examples) {
  for (const char* name : {"D4", "Q8", "Heis3", "C2xC4", "D8"}) {
    const GroupTable g = materialize(parse_named(name));
    EXPECT_TRUE(is_interchangeable(gamma_word(2), g).holds) << name;
    EXPECT_TRUE(is_interchangeable(gamma_word(3), g).holds) << name;
  }
  EXPECT_TRUE(is_interchangeable(power_word(2), materialize(parse_named("C4xC2"))).holds);
  try {
    (void)is_interchangeable(gamma_word(2), materialize(symmetric(3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAPGroup);
  }
}

TEST(FindSubgroup, Examples) {
  const SubgroupLattice q8 = all_subgroups(materialize(quaternion8()));
  EXPECT_EQ(find_subgroup_with(q8, {.max_class = 2})->order(), 8u);
  EXPECT_EQ(find_subgroup_with(q8, {.max_class = 1})->order(), 4u);
  EXPECT_EQ(find_subgroup_with(all_subgroups(materialize(parse_named("D4"))), {.max_class = 1})->order(), 4u);
  const SubgroupLattice h = all_subgroups(materialize(parse_named("Heis3")));
  EXPECT_EQ(find_subgroup_with(h, {.max_class = 2, .max_exponent = 3})->order(), 27u);
  EXPECT_EQ(find_subgroup_with(h, {.max_class = 1})->order(), 9u);
}
