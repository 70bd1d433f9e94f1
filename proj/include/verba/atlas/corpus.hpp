#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "verba/group/spec.hpp"
#include "verba/maximality/maximality.hpp"
#include "verba/word/word.hpp"

namespace verba::atlas {

struct Budgets {
  std::size_t lattice_cap = 100'000;
  std::uint64_t tuple_budget = 100'000'000;
  std::size_t iso_budget = 2'000'000;
};

/// Builder names: cyclic, elementary_abelian, dihedral, quaternion,
/// dicyclic, symmetric, scalar_extension, c3_on_q8, metacyclic, linear,
/// wreath, lazard, maxclass.
struct CorpusConfig {
  std::size_t max_order = 24;
  std::vector<std::string> builders;
  /// Rounds of pairwise direct products over the deduplicated corpus.
  unsigned product_depth = 1;
  /// Keep only nontrivial groups of prime power order for these primes;
  /// empty keeps everything.
  std::vector<std::uint64_t> primes;
  std::vector<Word> words;
  Budgets budgets;
  std::uint64_t seed = 1;
  std::string cache_dir;
};

[[nodiscard]] const std::vector<std::string>& all_builders();
void validate(const CorpusConfig& cfg);

struct CorpusEntry {
  std::string name;
  GroupSpec spec;
  GroupTable table;
  /// Names of later candidates found isomorphic to this one.
  std::vector<std::string> aliases;
};

struct CorpusFailure {
  std::string name;
  GroupSpec spec;
  std::string status;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<CorpusFailure> failures;
  std::size_t candidates = 0;
};

/// Materialises every builder candidate (and products) up to max_order and
/// keeps one group per isomorphism class, in order of (order, discovery).
[[nodiscard]] Corpus build_corpus(const CorpusConfig& cfg);

/// The p-groups of orders up to 2^6, 3^5 and 5^4.
[[nodiscard]] Corpus p_group_corpus(const Budgets& b = {});
/// All builders up to the given order.
[[nodiscard]] Corpus general_corpus(std::size_t max_order, const Budgets& b = {});

/// Dicyclic group of order 4n (generalised quaternion for n a power of 2).
[[nodiscard]] GroupSpec dicyclic(std::uint64_t n);
/// C_a wr C_b as permutations of a*b points (a*b <= 16).
[[nodiscard]] GroupSpec wreath(unsigned a, unsigned b);

}  // namespace verba::atlas
