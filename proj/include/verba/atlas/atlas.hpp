#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "verba/atlas/corpus.hpp"

namespace verba::atlas {

/// One JSON object per corpus entry: hash, name, aliases, spec, order,
/// exponent, d, nu, nilpotency_class and derived_length (null when the
/// series does not reach 1), abelian, supersoluble, d_maximal, hdm,
/// hdm_shape, lattice_size, words (keyed by word text: index, breadth,
/// w_maximal, hereditary), rep and status. Budget failures leave the
/// affected fields out and set status to the error kind.
[[nodiscard]] nlohmann::json atlas_record(const CorpusEntry& e, const std::string& rep, const CorpusConfig& cfg);

/// Records for the whole corpus, ordered by hash (failed candidates last,
/// by name). `jobs` workers share the entries.
[[nodiscard]] std::vector<nlohmann::json> atlas_build(const CorpusConfig& cfg, unsigned jobs = 1);

/// One compact line per record; keys are sorted so equal input gives equal
/// bytes.
[[nodiscard]] std::string to_json_lines(const std::vector<nlohmann::json>& records);
void write_json_lines(const std::string& path, const std::vector<nlohmann::json>& records);
[[nodiscard]] std::vector<nlohmann::json> read_json_lines(const std::string& path);

/// `path op value` with op one of = != < <= > >=; path is dotted into the
/// record, e.g. "hdm=true", "order<=24", "words.x1^2.w_maximal=true".
struct Predicate {
  std::vector<std::string> path;
  std::string op;
  nlohmann::json value;
};

[[nodiscard]] Predicate parse_predicate(const std::string& text);
[[nodiscard]] bool matches(const nlohmann::json& record, const Predicate& p);
[[nodiscard]] std::vector<nlohmann::json> atlas_query(const std::vector<nlohmann::json>& records,
                                                      const std::vector<Predicate>& preds);

struct PosetEdge {
  std::string lower, upper;  ///< record hashes, lower ⪯_w upper
  std::size_t kernel_order = 1;
};

struct Poset {
  std::string word;
  std::vector<std::string> nodes;  ///< w-maximal records, by hash
  std::vector<PosetEdge> edges;
  std::vector<std::string> maximal;
  /// Pairs whose comparison hit a budget.
  std::vector<std::pair<std::string, std::string>> unknown;
  bool acyclic = true;
};

/// Runs precedes over all pairs of w-maximal records with |H| dividing |G|
/// properly. Records without a stored result for w are evaluated from spec.
[[nodiscard]] Poset poset_build(const std::vector<nlohmann::json>& records, const Word& w,
                                const Budgets& budgets = {});
[[nodiscard]] nlohmann::json to_json(const Poset& p, const std::vector<nlohmann::json>& records);

}  // namespace verba::atlas
