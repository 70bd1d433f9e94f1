#include "verba/atlas/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "verba/error.hpp"
#include "verba/group/structure.hpp"
#include "verba/lattice/lattice.hpp"
#include "verba/numeric.hpp"

namespace verba::atlas {

using nlohmann::json;

namespace {

json series_length(const GroupTable& g, SeriesKind kind) {
  const Series s = series(g, kind);
  if (!s.reaches_trivial) return nullptr;
  return s.length;
}

}  // namespace

json atlas_record(const CorpusEntry& e, const std::string& rep, const CorpusConfig& cfg) {
  const GroupTable& g = e.table;
  json r;
  r["hash"] = g.hash_hex();
  r["name"] = e.name;
  r["aliases"] = e.aliases;
  r["spec"] = e.spec;
  r["rep"] = rep;
  r["order"] = g.order();
  r["exponent"] = exponent(g);
  r["nu"] = nu(g.order());
  r["abelian"] = g.is_abelian();
  r["nilpotency_class"] = series_length(g, SeriesKind::LowerCentral);
  r["derived_length"] = series_length(g, SeriesKind::Derived);
  r["status"] = "ok";
  try {
    r["d"] = min_generators(g);
    r["hdm_shape"] = classify_hdm(g);
    r["supersoluble"] = is_supersoluble(g);
    const SubgroupLattice lat = all_subgroups(g, {cfg.budgets.lattice_cap, cfg.cache_dir});
    r["lattice_size"] = lat.size();
    r["d_maximal"] = is_d_maximal(lat).holds;
    r["hdm"] = is_hereditarily_d_maximal(lat).holds;
    const VerbalOptions vo{cfg.budgets.tuple_budget, true};
    json words = json::object();
    for (const Word& w : cfg.words) {
      json wr;
      try {
        const MaximalityReport m = maximality_report(w, lat, vo);
        wr["index"] = m.index;
        wr["breadth"] = m.breadth;
        wr["w_maximal"] = m.is_w_maximal;
        wr["hereditary"] = is_hereditarily_w_maximal(w, lat, vo).holds;
      } catch (const Error& err) {
        if (!err.is_budget()) throw;
        wr["status"] = std::string(to_string(err.kind()));
      }
      words[w.to_string()] = std::move(wr);
    }
    r["words"] = std::move(words);
  } catch (const Error& err) {
    if (!err.is_budget()) throw;
    r["status"] = std::string(to_string(err.kind()));
  }
  return r;
}

std::vector<json> atlas_build(const CorpusConfig& cfg, unsigned jobs) {
  const Corpus corpus = build_corpus(cfg);
  const std::size_t n = corpus.entries.size();
  std::vector<json> records(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      char rep[32];
      std::snprintf(rep, sizeof rep, "G%04zu", i + 1);
      records[i] = atlas_record(corpus.entries[i], rep, cfg);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(records.begin(), records.end(),
            [](const json& a, const json& b) { return a["hash"].get<std::string>() < b["hash"].get<std::string>(); });
  std::vector<json> failed;
  for (const auto& f : corpus.failures) failed.push_back({{"name", f.name}, {"spec", f.spec}, {"status", f.status}});
  std::sort(failed.begin(), failed.end(),
            [](const json& a, const json& b) { return a["name"].get<std::string>() < b["name"].get<std::string>(); });
  for (auto& f : failed) records.push_back(std::move(f));
  return records;
}

std::string to_json_lines(const std::vector<json>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.dump();
    out += '\n';
  }
  return out;
}

void write_json_lines(const std::string& path, const std::vector<json>& records) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, "cannot write " + path);
  f << to_json_lines(records);
  if (!f) throw Error(ErrorKind::IoError, "write failed for " + path);
}

std::vector<json> read_json_lines(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, "cannot read " + path);
  std::vector<json> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::InvalidSpec, path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Predicate parse_predicate(const std::string& text) {
  static const char* ops[] = {"<=", ">=", "!=", "=", "<", ">"};
  for (const char* op : ops) {
    const auto pos = text.find(op);
    if (pos == std::string::npos || pos == 0) continue;
    Predicate p;
    p.op = op;
    std::stringstream ss(text.substr(0, pos));
    for (std::string part; std::getline(ss, part, '.');) p.path.push_back(part);
    const std::string rhs = text.substr(pos + std::string(op).size());
    try {
      p.value = json::parse(rhs);
    } catch (const json::exception&) {
      p.value = rhs;
    }
    return p;
  }
  throw Error(ErrorKind::InvalidArgument, "predicate needs one of = != < <= > >=: \"" + text + "\"");
}

bool matches(const json& record, const Predicate& p) {
  const json* cur = &record;
  for (const auto& key : p.path) {
    if (!cur->is_object() || !cur->contains(key)) return false;
    cur = &(*cur)[key];
  }
  if (p.op == "=") return *cur == p.value;
  if (p.op == "!=") return *cur != p.value;
  if (!cur->is_number() || !p.value.is_number()) return false;
  const double a = cur->get<double>(), b = p.value.get<double>();
  if (p.op == "<") return a < b;
  if (p.op == "<=") return a <= b;
  if (p.op == ">") return a > b;
  return a >= b;
}

std::vector<json> atlas_query(const std::vector<json>& records, const std::vector<Predicate>& preds) {
  std::vector<json> out;
  for (const auto& r : records)
    if (std::all_of(preds.begin(), preds.end(), [&](const Predicate& p) { return matches(r, p); }))
      out.push_back(r);
  return out;
}

Poset poset_build(const std::vector<json>& records, const Word& w, const Budgets& budgets) {
  Poset out;
  out.word = w.to_string();
  const MaximalityOptions mo{{budgets.tuple_budget, true}, {budgets.lattice_cap, {}}, {budgets.iso_budget}};
  struct Node {
    std::string hash;
    GroupTable table;
  };
  std::vector<Node> nodes;
  for (const auto& r : records) {
    if (!r.contains("hash") || r.value("status", "") != "ok") continue;
    bool maximal = false;
    const auto& words = r.value("words", json::object());
    if (words.contains(out.word) && words[out.word].contains("w_maximal")) {
      maximal = words[out.word]["w_maximal"].get<bool>();
      if (!maximal) continue;
    }
    GroupTable t = materialize(r["spec"].get<GroupSpec>());
    if (!maximal) {
      try {
        maximal = is_w_maximal(w, t, mo).is_w_maximal;
      } catch (const Error& e) {
        if (!e.is_budget()) throw;
        out.unknown.emplace_back(r["hash"].get<std::string>(), "");
      }
    }
    if (maximal) nodes.push_back({r["hash"].get<std::string>(), std::move(t)});
  }
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.hash < b.hash; });
  for (const auto& nd : nodes) out.nodes.push_back(nd.hash);

  std::vector<std::vector<std::size_t>> up(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const std::size_t h = nodes[i].table.order(), g = nodes[j].table.order();
      if (i == j || h >= g || g % h != 0) continue;
      try {
        const PrecedesResult pr = precedes_unchecked(w, nodes[i].table, nodes[j].table, mo);
        if (pr.answer == Tri::Yes) {
          out.edges.push_back({nodes[i].hash, nodes[j].hash, pr.kernel ? pr.kernel->order() : 1});
          up[i].push_back(j);
        } else if (pr.answer == Tri::Unknown) {
          out.unknown.emplace_back(nodes[i].hash, nodes[j].hash);
        }
      } catch (const Error& e) {
        if (!e.is_budget()) throw;
        out.unknown.emplace_back(nodes[i].hash, nodes[j].hash);
      }
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (up[i].empty()) out.maximal.push_back(nodes[i].hash);

  // Kahn's algorithm over the "precedes" edges.
  std::vector<std::size_t> indeg(nodes.size(), 0), queue;
  for (const auto& u : up)
    for (auto j : u) ++indeg[j];
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (indeg[i] == 0) queue.push_back(i);
  std::size_t seen = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi, ++seen)
    for (auto j : up[queue[qi]])
      if (--indeg[j] == 0) queue.push_back(j);
  out.acyclic = seen == nodes.size();
  return out;
}

json to_json(const Poset& p, const std::vector<json>& records) {
  std::map<std::string, std::string> names;
  for (const auto& r : records)
    if (r.contains("hash")) names[r["hash"].get<std::string>()] = r.value("name", "");
  json edges = json::array();
  for (const auto& e : p.edges)
    edges.push_back({{"lower", e.lower}, {"upper", e.upper}, {"lower_name", names[e.lower]},
                     {"upper_name", names[e.upper]}, {"kernel_order", e.kernel_order}});
  json unknown = json::array();
  for (const auto& [a, b] : p.unknown) unknown.push_back({a, b});
  return {{"word", p.word}, {"nodes", p.nodes},     {"edges", edges},
          {"maximal", p.maximal}, {"unknown", unknown}, {"acyclic", p.acyclic}};
}

}  // namespace verba::atlas
