#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "verba/error.hpp"
#include "verba/group/spec.hpp"
#include "verba/group/structure.hpp"
#include "verba/word/verbal.hpp"
#include "verba/word/word.hpp"

using namespace verba;

TEST(Parse, Commutator) {
  const Word w = parse_word("[x,y]");
  EXPECT_EQ(w.arity(), 2u);
  EXPECT_EQ(w.to_string(), "x1^-1x2^-1x1x2");
  EXPECT_TRUE(is_commutator_word(w));
}

TEST(Parse, ZeroExponentAndSyntaxErrors) {
  try {
    (void)parse_word("x^0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroExponent);
  }
  for (const char* bad : {"", "[x]", "x^", "(x", "x^y", "2x", "[x,y", "x*", "x)", "x^-"}) {
    try {
      (void)parse_word(bad);
      ADD_FAILURE() << bad;
    } catch (const SyntaxError& e) {
      EXPECT_LE(e.position(), std::string(bad).size()) << bad;
    }
  }
  try {
    (void)parse_word("x y ) z");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, PowerTimesCommutator) {
  const Word w = parse_word("x^3[y,z]");
  EXPECT_EQ(w.arity(), 3u);
  EXPECT_EQ(w.exponent_sums(), (std::vector<long long>{3, 0, 0}));
  EXPECT_EQ(recognize(w), (StdWord{StdWordKind::PowerCommutator, 3, 2}));
}

TEST(Parse, JuxtapositionStarAndReduction) {
  EXPECT_EQ(parse_word("xy"), parse_word("x*y"));
  EXPECT_EQ(parse_word("x y y^-1 x").to_string(), "x1^2");
  EXPECT_EQ(parse_word("(xy)^-1"), Word(2, {{1, -1}, {0, -1}}));
  EXPECT_TRUE(parse_word("x x^-1").is_identity());
  EXPECT_EQ(parse_word("1").arity(), 0u);
  EXPECT_EQ(parse_word("[x,y,z]"), parse_word("[[x,y],z]"));
  EXPECT_EQ(parse_word("x1^2x3").arity(), 3u);
}

TEST(Parse, PrintParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const unsigned n = 1 + rng() % 4;
    std::vector<Letter> ls;
    const int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i)
      ls.push_back({static_cast<unsigned>(rng() % n), static_cast<long long>(rng() % 7) - 3});
    const Word w(n, ls);
    if (w.is_identity()) continue;
    // Trailing unused variables are not visible in the text.
    const Word back = parse_word(w.to_string());
    EXPECT_EQ(back.letters(), w.letters()) << w.to_string();
    EXPECT_EQ(back.to_string(), w.to_string());
    nlohmann::json j = w;
    EXPECT_EQ(j.get<Word>(), w);
  }
}

TEST(StdWords, Shapes) {
  EXPECT_EQ(delta_word(1), parse_word("[x,y]"));
  EXPECT_EQ(gamma_word(1), parse_word("y"));
  const Word d2 = delta_word(2);
  EXPECT_EQ(d2.arity(), 4u);
  EXPECT_EQ(d2, parse_word("[[x1,x2],[y1,y2]]"));
  EXPECT_EQ(delta_word(3).arity(), 8u);
  EXPECT_EQ(gamma_word(3), parse_word("[a,b,c]"));
  EXPECT_EQ(recognize(d2), (StdWord{StdWordKind::Delta, 1, 2}));
  EXPECT_EQ(recognize(gamma_word(3)), (StdWord{StdWordKind::Gamma, 1, 3}));
  EXPECT_EQ(recognize(parse_word("x^-4")), (StdWord{StdWordKind::Power, 4, 1}));
  EXPECT_FALSE(recognize(parse_word("[x,y]^-1")).has_value());
}

TEST(Evaluate, Examples) {
  const GroupTable s3 = materialize(symmetric(3));
  Element t = 0, c = 0;
  for (Element x = 0; x < s3.order(); ++x) {
    if (s3.element_order(x) == 2 && !t) t = x;
    if (s3.element_order(x) == 3 && !c) c = x;
  }
  const Element v = evaluate(parse_word("[x,y]"), s3, std::vector<Element>{t, c});
  EXPECT_EQ(s3.element_order(v), 3u);
  EXPECT_EQ(v, oracle::commutator(s3, t, c));

  const Word w = parse_word("x^2[y,z]x^-1");
  EXPECT_EQ(evaluate(w, s3, std::vector<Element>{0, 0, 0}), 0u);

  const GroupTable c4 = materialize(cyclic(4));
  EXPECT_EQ(evaluate(power_word(2), c4, std::vector<Element>{1}), 2u);
  try {
    (void)evaluate(w, s3, std::vector<Element>{0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
  }
}

TEST(Verbal, Examples) {
  const GroupTable s3 = materialize(symmetric(3));
  EXPECT_EQ(verbal_subgroup(parse_word("[x,y]"), s3).order(), 3u);
  EXPECT_EQ(verbal_subgroup(parse_word("[x,y]"), s3, whole_group(s3), {.fast_paths = false}).order(), 3u);
  const GroupTable e = materialize(elementary_abelian(3, 3));
  EXPECT_TRUE(verbal_subgroup(parse_word("x^3[y,z]"), e).is_trivial());
  const GroupTable g = materialize(c3_on_q8());
  const Subgroup d2 = verbal_subgroup(delta_word(2), g);
  EXPECT_EQ(d2.order(), 2u);
  EXPECT_EQ(verbal_subgroup(delta_word(2), g, whole_group(g), {.fast_paths = false}), d2);
}

TEST(Verbal, BudgetExceeded) {
  const GroupTable g = materialize(symmetric(5));
  try {
    (void)verbal_subgroup(parse_word("[x,y]^2[z,w]"), g, {.budget = 1000});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    EXPECT_TRUE(e.is_budget());
  }
}

TEST(Verbal, FastPathsMatchEnumeration) {
  const std::vector<Word> words = {power_word(2),  power_word(3),          power_word(4),
                                   gamma_word(2),  gamma_word(3),          delta_word(2),
                                   power_commutator_word(2, 2), power_commutator_word(3, 2),
                                   power_commutator_word(4, 2)};
  for (const char* name : {"S3", "Q8", "D4", "A4", "C3:Q8", "C2xC4", "Heis3", "D6", "C3xS3"}) {
    const GroupTable g = materialize(parse_named(name));
    const Subgroup all = whole_group(g);
    for (const Word& w : words) {
      const Subgroup fast = verbal_subgroup(w, g);
      const Subgroup slow = verbal_subgroup(w, g, all, {.fast_paths = false});
      EXPECT_EQ(fast, slow) << name << " " << w.to_string();
      EXPECT_TRUE(is_normal(g, fast));
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_word(parse_word("[x,y]"), 3).kind, WordClass::CommutatorWord);
  EXPECT_EQ(classify_word(parse_word("x^3[y,z]"), 3), (WordClass{WordClass::LevelK, 3, 1}));
  EXPECT_EQ(classify_word(parse_word("xy"), 3).kind, WordClass::FullModP);
  EXPECT_EQ(classify_word(parse_word("x^9y^18"), 3), (WordClass{WordClass::LevelK, 3, 2}));
  EXPECT_EQ(classify_word(parse_word("x^4y^6"), 3).kind, WordClass::FullModP);
}
