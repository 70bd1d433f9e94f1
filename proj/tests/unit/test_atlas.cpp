#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <set>

#include "verba/atlas/atlas.hpp"
#include "verba/atlas/checks.hpp"
#include "verba/error.hpp"
#include "verba/group/structure.hpp"
#include "verba/lattice/lattice.hpp"
#include "verba/numeric.hpp"

using namespace verba;
using namespace verba::atlas;

namespace {

CorpusConfig small_config() {
  CorpusConfig cfg;
  cfg.max_order = 24;
  cfg.builders = {"cyclic", "dihedral", "quaternion", "symmetric", "scalar_extension", "c3_on_q8"};
  cfg.product_depth = 2;
  return cfg;
}

}  // namespace

TEST(Corpus, TwoGroupsUpToEight) {
  CorpusConfig cfg;
  cfg.max_order = 8;
  cfg.builders = all_builders();
  cfg.product_depth = 3;
  cfg.primes = {2};
  const Corpus c = build_corpus(cfg);
  std::multiset<std::size_t> orders;
  std::set<std::string> names;
  for (const auto& e : c.entries) {
    orders.insert(e.table.order());
    names.insert(e.name);
  }
  EXPECT_EQ(orders, (std::multiset<std::size_t>{2, 4, 4, 8, 8, 8, 8, 8}));
  for (const char* n : {"C2", "C4", "C8", "Q8"}) EXPECT_TRUE(names.count(n)) << n;
  std::size_t abelian = 0;
  for (const auto& e : c.entries)
    if (e.table.order() == 8) abelian += e.table.is_abelian();
  EXPECT_EQ(abelian, 3u);
  EXPECT_TRUE(c.failures.empty());
}

TEST(Corpus, EmptyBuilderList) {
  CorpusConfig cfg;
  cfg.builders = {};
  const Corpus c = build_corpus(cfg);
  EXPECT_TRUE(c.entries.empty());
  EXPECT_EQ(c.candidates, 0u);
}

TEST(Corpus, IsomorphicCandidatesMerge) {
  const Corpus c = build_corpus(small_config());
  const GroupTable c6 = materialize(cyclic(6));
  std::size_t copies = 0;
  for (const auto& e : c.entries) {
    if (e.table.order() != 6 || !is_isomorphic(e.table, c6)) continue;
    ++copies;
    EXPECT_FALSE(e.aliases.empty());
  }
  EXPECT_EQ(copies, 1u);
  for (std::size_t i = 0; i < c.entries.size(); ++i)
    for (std::size_t j = i + 1; j < c.entries.size(); ++j)
      if (c.entries[i].table.order() == c.entries[j].table.order())
        EXPECT_FALSE(is_isomorphic(c.entries[i].table, c.entries[j].table))
            << c.entries[i].name << " " << c.entries[j].name;
}

TEST(Corpus, RejectsBadConfig) {
  CorpusConfig cfg;
  cfg.builders = {"nonsense"};
  EXPECT_THROW(validate(cfg), Error);
  cfg.builders = {"cyclic"};
  cfg.budgets.lattice_cap = 0;
  EXPECT_THROW(validate(cfg), Error);
}

TEST(Atlas, ReproducibleJsonLines) {
  CorpusConfig cfg = small_config();
  cfg.words = {delta_word(2), power_word(2)};
  const std::string a = to_json_lines(atlas_build(cfg, 1));
  const std::string b = to_json_lines(atlas_build(cfg, 3));
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
}

TEST(Atlas, ReloadSpotCheck) {
  CorpusConfig cfg = small_config();
  const auto records = atlas_build(cfg);
  const auto path = (std::filesystem::temp_directory_path() / "verba_atlas_test.jsonl").string();
  write_json_lines(path, records);
  const auto back = read_json_lines(path);
  std::remove(path.c_str());
  ASSERT_EQ(back.size(), records.size());
  std::set<std::string> hashes;
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i], records[i]);
    hashes.insert(back[i]["hash"].get<std::string>());
    if (i % 10 != 0) continue;
    const GroupTable g = materialize(back[i]["spec"].get<GroupSpec>());
    EXPECT_EQ(back[i]["d"].get<unsigned>(), min_generators(g));
    EXPECT_EQ(back[i]["hash"].get<std::string>(), g.hash_hex());
  }
  EXPECT_EQ(hashes.size(), back.size());
  EXPECT_THROW((void)read_json_lines(path), Error);
}

TEST(Atlas, HdmQueryMatchesShapes) {
  CorpusConfig cfg;
  cfg.max_order = 63;
  cfg.builders = all_builders();
  cfg.product_depth = 2;
  const auto records = atlas_build(cfg);
  const auto hits = atlas_query(records, {parse_predicate("hdm=true")});
  std::size_t shaped = 0;
  for (const auto& r : records) {
    const bool shape = r["hdm_shape"]["shape"] != "not_hdm";
    shaped += shape;
    EXPECT_EQ(shape, r["d"].get<unsigned>() == nu(r["order"].get<std::uint64_t>())) << r["name"];
  }
  EXPECT_EQ(hits.size(), shaped);
  for (const auto& r : hits) EXPECT_NE(r["hdm_shape"]["shape"], "not_hdm") << r["name"];
  EXPECT_GT(hits.size(), 20u);
}

TEST(Atlas, Predicates) {
  const nlohmann::json r = {{"order", 12}, {"words", {{"x1^2", {{"w_maximal", true}}}}}};
  EXPECT_TRUE(matches(r, parse_predicate("order<=12")));
  EXPECT_FALSE(matches(r, parse_predicate("order>12")));
  EXPECT_TRUE(matches(r, parse_predicate("order!=5")));
  EXPECT_TRUE(matches(r, parse_predicate("words.x1^2.w_maximal=true")));
  EXPECT_FALSE(matches(r, parse_predicate("missing=1")));
  EXPECT_THROW((void)parse_predicate("order"), Error);
}

TEST(Poset, DeltaTwoEdge) {
  CorpusConfig cfg = small_config();
  cfg.words = {delta_word(2)};
  const auto records = atlas_build(cfg);
  const Poset p = poset_build(records, delta_word(2));
  EXPECT_TRUE(p.acyclic);
  EXPECT_TRUE(p.unknown.empty());
  const GroupTable top = materialize(c3_on_q8());
  const Quotient q = quotient(top, center(top));
  bool found = false;
  for (const auto& e : p.edges) {
    if (e.upper != top.hash_hex()) continue;
    for (const auto& r : records)
      if (r["hash"] == e.lower) found = found || is_isomorphic(materialize(r["spec"].get<GroupSpec>()), q.group).has_value();
  }
  EXPECT_TRUE(found);
  for (const auto& e : p.edges) EXPECT_NE(e.lower, e.upper);
}

TEST(Verify, ScopesAndSkips) {
  VerifyOptions o;
  o.only = {"no-such-check"};
  EXPECT_THROW((void)verify_paper(o), Error);

  o.only = {"quaternion-example", "delta2-construction"};
  o.budget_small = true;
  const VerifyReport r = verify_paper(o);
  ASSERT_EQ(r.results.size(), 2u);
  EXPECT_TRUE(r.results[0].passed);
  EXPECT_TRUE(r.results[1].skipped);
  EXPECT_TRUE(r.all_passed());
  EXPECT_NE(format_line(r.results[0]).find("PASS quaternion-example"), std::string::npos);

  std::set<std::string> ids;
  for (const auto& c : check_registry()) {
    ids.insert(c.id);
    EXPECT_NE(std::find(check_scopes().begin(), check_scopes().end(), c.scope), check_scopes().end());
  }
  EXPECT_EQ(ids.size(), 14u);
}
