#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "verba/atlas/atlas.hpp"
#include "verba/atlas/checks.hpp"
#include "verba/error.hpp"
#include "verba/group/structure.hpp"
#include "verba/lattice/lattice.hpp"
#include "verba/lie/delta2.hpp"
#include "verba/lie/forms.hpp"
#include "verba/lie/lazard.hpp"
#include "verba/lie/maxclass.hpp"
#include "verba/lie/subrings.hpp"
#include "verba/maximality/maximality.hpp"

using nlohmann::json;
using namespace verba;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  bool json_out = false;
  std::string cache_dir;
  bool no_cache = false;
  std::size_t lattice_cap = 100'000;
  std::uint64_t tuple_budget = 100'000'000;
  std::size_t iso_budget = 2'000'000;
  std::uint64_t subspace_budget = 10'000'000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;

  [[nodiscard]] std::string cache() const { return no_cache ? std::string() : cache_dir; }
  [[nodiscard]] atlas::Budgets budgets() const { return {lattice_cap, tuple_budget, iso_budget}; }
  [[nodiscard]] VerbalOptions verbal() const { return {tuple_budget, true}; }
  [[nodiscard]] MaximalityOptions maximality() const {
    return {verbal(), {lattice_cap, cache()}, {iso_budget}};
  }
};

/// Inline JSON, or the contents of a file when the argument names one.
json read_json_arg(const std::string& text) {
  std::string body = text;
  if (std::filesystem::is_regular_file(text)) {
    std::ifstream f(text);
    std::stringstream ss;
    ss << f.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("not JSON: ") + e.what());
  }
}

void print_text(const json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      std::cout << indent << it.key() << ":\n";
      print_text(*it, indent + "  ");
    } else {
      std::cout << indent << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
}

void emit(const Globals& g, const json& j) {
  if (g.json_out || !j.is_object()) {
    std::cout << j.dump() << "\n";
  } else {
    print_text(j);
  }
}

json group_info(const GroupSpec& spec, const std::vector<Word>& words, const Globals& gl) {
  atlas::CorpusEntry e{spec.name(), spec, materialize(spec), {}};
  atlas::CorpusConfig cfg;
  cfg.words = words;
  cfg.budgets = gl.budgets();
  cfg.cache_dir = gl.cache();
  json r = atlas::atlas_record(e, "", cfg);
  r.erase("rep");
  r.erase("aliases");
  r["center_order"] = center(e.table).order();
  const Subgroup w = whole_group(e.table);
  r["derived_order"] = commutator_subgroup(e.table, w, w).order();
  return r;
}

Word word_arg(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "--word is required");
  return parse_word(text);
}

GroupSpec spec_arg(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "--spec is required");
  return parse_group_spec(text);
}

std::vector<Word> word_list(const std::vector<std::string>& texts) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verba: verbal subgroups, w-maximality and d-maximality in finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  if (const char* env = std::getenv("VERBA_CACHE_DIR")) gl.cache_dir = env;
  app.add_flag("--json", gl.json_out, "Emit JSON");
  app.add_option("--cache-dir", gl.cache_dir, "Lattice cache directory (VERBA_CACHE_DIR)");
  app.add_flag("--no-cache", gl.no_cache, "Ignore the lattice cache");
  app.add_option("--budget-lattice", gl.lattice_cap, "Most subgroups enumerated")->check(CLI::PositiveNumber);
  app.add_option("--budget-tuples", gl.tuple_budget, "Most word-argument tuples evaluated")->check(CLI::PositiveNumber);
  app.add_option("--budget-iso", gl.iso_budget, "Isomorphism search nodes")->check(CLI::PositiveNumber);
  app.add_option("--budget-subspaces", gl.subspace_budget, "Most subspaces enumerated")->check(CLI::PositiveNumber);
  app.add_option("--seed", gl.seed, "Random seed");
  app.add_option("--jobs", gl.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string spec_text, word_text, lower_text;
  std::vector<std::string> arg_labels, word_texts;
  int code = kPass;

  auto add_spec = [&](CLI::App* c) { c->add_option("--spec", spec_text, "GroupSpec JSON, file or name")->required(); };
  auto add_word = [&](CLI::App* c) { c->add_option("--word", word_text, "Word, e.g. \"[x,y]\" or \"x^2\"")->required(); };

  // group info | eval
  auto* group = app.add_subcommand("group", "Group structure");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "Order, exponent, series, d(G), shapes");
  add_spec(info);
  info->add_option("--word", word_texts, "Words to report on (repeatable)")->allow_extra_args(false);
  info->callback([&] { emit(gl, group_info(spec_arg(spec_text), word_list(word_texts), gl)); });

  auto* eval = group->add_subcommand("eval", "Evaluate a word on element labels");
  add_spec(eval);
  add_word(eval);
  eval->add_option("args", arg_labels, "One element label per variable")->required();
  eval->callback([&] {
    const GroupTable g = materialize(spec_arg(spec_text));
    const Word w = word_arg(word_text);
    if (arg_labels.size() != w.arity())
      throw Error(ErrorKind::ArityMismatch, "word has " + std::to_string(w.arity()) + " variables");
    std::vector<Element> args;
    for (const auto& l : arg_labels) {
      const std::size_t i = g.find_label(l);
      if (i == g.order()) throw Error(ErrorKind::InvalidArgument, "no element labelled \"" + l + "\"");
      args.push_back(static_cast<Element>(i));
    }
    emit(gl, {{"word", w.to_string()}, {"value", g.label(evaluate(w, g, args))}});
  });

  auto* verbal = app.add_subcommand("verbal", "The verbal subgroup w(G)");
  add_spec(verbal);
  add_word(verbal);
  verbal->callback([&] {
    const GroupTable g = materialize(spec_arg(spec_text));
    const Word w = word_arg(word_text);
    const Subgroup v = verbal_subgroup(w, g, gl.verbal());
    json j = subgroup_json(g, v);
    j["word"] = w.to_string();
    j["index"] = g.order() / v.order();
    emit(gl, j);
  });

  auto report_verb = [&](const char* name, const char* help, bool hereditary) {
    auto* c = app.add_subcommand(name, help);
    add_spec(c);
    add_word(c);
    c->callback([&, hereditary] {
      const GroupTable g = materialize(spec_arg(spec_text));
      const Word w = word_arg(word_text);
      const SubgroupLattice lat = all_subgroups(g, gl.maximality().lattice);
      json j = report_json(g, maximality_report(w, lat, gl.verbal()));
      if (hereditary) {
        const HereditaryResult h = is_hereditarily_w_maximal(w, lat, gl.verbal());
        j["hereditary"] = h.holds;
        j["first_failing"] = h.first_failing ? subgroup_json(g, *h.first_failing) : json(nullptr);
        j["failing_witness"] = h.failing_witness ? subgroup_json(g, *h.failing_witness) : json(nullptr);
      }
      emit(gl, j);
    });
  };
  report_verb("breadth", "w-breadth and witness", false);
  report_verb("maximal", "Whether G is w-maximal", false);
  report_verb("hereditary", "Whether every subgroup is w-maximal", true);

  auto* inter = app.add_subcommand("interchange", "Whether w is interchangeable in the p-group G");
  add_spec(inter);
  add_word(inter);
  inter->callback([&] {
    const GroupTable g = materialize(spec_arg(spec_text));
    const Word w = word_arg(word_text);
    const InterchangeResult r = is_interchangeable(w, g, gl.verbal());
    emit(gl, {{"word", w.to_string()},
              {"prime", r.prime},
              {"interchangeable", r.holds},
              {"witness", r.witness ? subgroup_json(g, *r.witness) : json(nullptr)}});
  });

  auto* hdm = app.add_subcommand("classify-hdm", "Hereditarily d-maximal shape");
  add_spec(hdm);
  hdm->callback([&] {
    const GroupTable g = materialize(spec_arg(spec_text));
    json j = classify_hdm(g);
    j["d"] = min_generators(g);
    j["hdm"] = is_hereditarily_d_maximal(g, gl.maximality().lattice).holds;
    j["d_maximal"] = is_d_maximal(g, gl.maximality().lattice).holds;
    emit(gl, j);
  });

  auto* prec = app.add_subcommand("precedes", "Whether H precedes G in the w-order");
  add_spec(prec);
  add_word(prec);
  prec->add_option("--lower", lower_text, "GroupSpec of H")->required();
  prec->callback([&] {
    const GroupTable g = materialize(spec_arg(spec_text));
    const GroupTable h = materialize(spec_arg(lower_text));
    const Word w = word_arg(word_text);
    const PrecedesResult r = precedes(w, h, g, gl.maximality());
    emit(gl, {{"word", w.to_string()},
              {"answer", to_string(r.answer)},
              {"kernel", r.kernel ? subgroup_json(g, *r.kernel) : json(nullptr)}});
    if (r.answer == Tri::Unknown) code = kBudget;
  });

  // lie check | exp | search
  auto* lie = app.add_subcommand("lie", "Lie rings and alternating forms");
  lie->require_subcommand(1);
  std::string forms_text, ring_text;
  auto lie_input = [&](CLI::App* c) {
    auto* f = c->add_option("--forms", forms_text, "FormFamily JSON or file");
    auto* r = c->add_option("--ring", ring_text, "LieRing JSON or file");
    f->excludes(r);
  };
  auto ring_of = [&]() -> lie::LieRing {
    if (!forms_text.empty()) {
      const lie::FormFamily ff = read_json_arg(forms_text).get<lie::FormFamily>();
      ff.validate();
      return lie::lie_from_forms(ff);
    }
    if (!ring_text.empty()) return read_json_arg(ring_text).get<lie::LieRing>();
    throw Error(ErrorKind::InvalidArgument, "one of --forms or --ring is required");
  };
  auto* lcheck = lie->add_subcommand("check", "Whether the Lie ring is d-maximal");
  lie_input(lcheck);
  lcheck->callback([&] {
    json j;
    if (!forms_text.empty()) {
      const lie::FormFamily ff = read_json_arg(forms_text).get<lie::FormFamily>();
      ff.validate();
      const lie::ClassTwoDMax r = lie::lie_d_maximal_class2(ff, gl.subspace_budget);
      j = {{"d_maximal", r.holds}, {"subspaces_checked", r.subspaces_checked}, {"witness", nullptr}};
      if (r.witness) j["witness"] = *r.witness;
    } else {
      const lie::GeneralDMax r = lie::lie_d_maximal_general(ring_of(), gl.lattice_cap);
      j = {{"d_maximal", r.holds}, {"index", r.index}, {"subrings", r.subrings}};
    }
    emit(gl, j);
  });
  auto* lexp = lie->add_subcommand("exp", "The group exp(L) and its invariants");
  lie_input(lexp);
  lexp->callback([&] { emit(gl, group_info(lazard_exp_spec(ring_of()), {}, gl)); });

  unsigned sp = 3, sdim = 4, sk = 2;
  std::string strategy = "exhaustive";
  std::uint64_t trials = 1000, family_budget = 1'000'000;
  auto* lsearch = lie->add_subcommand("search", "Form families giving d-maximal class-2 rings");
  lsearch->add_option("--p", sp)->required();
  lsearch->add_option("--dim", sdim)->required();
  lsearch->add_option("--k", sk)->required();
  lsearch->add_option("--strategy", strategy)->check(CLI::IsMember({"exhaustive", "random"}));
  lsearch->add_option("--trials", trials);
  lsearch->add_option("--budget-families", family_budget);
  lsearch->callback([&] {
    lie::FormSearchOptions o;
    o.strategy = strategy == "random" ? lie::SearchStrategy::Random : lie::SearchStrategy::Exhaustive;
    o.seed = gl.seed;
    o.trials = trials;
    o.budget = family_budget;
    o.subspace_budget = gl.subspace_budget;
    json hits = json::array();
    for (const auto& h : lie::form_search(sp, sdim, sk, o))
      hits.push_back({{"family", h.family}, {"derived_dim", h.derived_dim}});
    if (gl.json_out) {
      std::cout << hits.dump() << "\n";
    } else {
      std::cout << hits.size() << " families\n";
      for (const auto& h : hits) std::cout << h.dump() << "\n";
    }
  });

  // construct delta2 | maxclass
  auto* cons = app.add_subcommand("construct", "Explicit constructions");
  cons->require_subcommand(1);
  unsigned cp = 3, cq = 13;
  std::uint64_t samples = 1'000'000;
  auto* cd2 = cons->add_subcommand("delta2", "delta2-maximal group of derived length 3");
  cd2->add_option("--p", cp)->required();
  cd2->add_option("--q", cq)->required();
  cd2->add_option("--samples", samples, "Associativity samples");
  cd2->callback([&] {
    const lie::Delta2Report r = lie::delta2_construction(cp, cq, samples, gl.seed);
    json j = r;
    j["passed"] = r.passed();
    emit(gl, j);
    if (!r.passed()) code = kFail;
  });
  auto* cmc = cons->add_subcommand("maxclass", "Quotient of the maximal class pro-p group");
  cmc->add_option("--p", cp)->required();
  cmc->callback([&] {
    const lie::MaxClassQuotient q = lie::maximal_class_quotient(cp);
    const GroupTable& g = q.group;
    const Subgroup c = commutator_subgroup(g, power_subgroup(g, cp), whole_group(g));
    const Word w = power_word(cp);
    const InterchangeResult ir = is_interchangeable(w, g, gl.verbal());
    emit(gl, {{"order", g.order()},
              {"precision", q.precision},
              {"orders_by_precision", q.orders_by_precision},
              {"commutator_of_powers_order", c.order()},
              {"commutator_of_powers_central", c.is_subgroup_of(center(g))},
              {"word", w.to_string()},
              {"interchangeable", ir.holds},
              {"witness", ir.witness ? subgroup_json(g, *ir.witness) : json(nullptr)},
              {"image_of_a", subgroup_json(g, q.image_of_a)}});
  });

  // atlas build | query, poset
  auto* at = app.add_subcommand("atlas", "Corpus atlas as JSON lines");
  at->require_subcommand(1);
  atlas::CorpusConfig cfg;
  std::vector<std::string> builders;
  std::string out_path, in_path;
  std::vector<std::string> where;
  auto* build = at->add_subcommand("build", "Build the deduplicated corpus and its records");
  build->add_option("--max-order", cfg.max_order)->check(CLI::PositiveNumber);
  build->add_option("--builders", builders, "Builder names (default all)")->delimiter(',');
  build->add_option("--depth", cfg.product_depth, "Rounds of direct products");
  build->add_option("--primes", cfg.primes, "Keep only p-groups for these primes")->delimiter(',');
  build->add_option("--word", word_texts, "Words recorded per group (repeatable)")->allow_extra_args(false);
  build->add_option("--out", out_path, "Output file (default stdout)");
  build->callback([&] {
    cfg.builders = builders.empty() ? atlas::all_builders() : builders;
    cfg.words = word_list(word_texts);
    cfg.budgets = gl.budgets();
    cfg.seed = gl.seed;
    cfg.cache_dir = gl.cache();
    atlas::validate(cfg);
    const auto records = atlas::atlas_build(cfg, gl.jobs);
    if (out_path.empty()) {
      std::cout << atlas::to_json_lines(records);
    } else {
      atlas::write_json_lines(out_path, records);
      if (!gl.json_out) std::cerr << records.size() << " records written to " << out_path << "\n";
    }
  });
  auto* query = at->add_subcommand("query", "Records matching every predicate");
  query->add_option("--in", in_path, "Atlas file")->required();
  query->add_option("--where", where, "Predicate such as hdm=true or order<=24 (repeatable)");
  query->callback([&] {
    std::vector<atlas::Predicate> preds;
    for (const auto& w : where) preds.push_back(atlas::parse_predicate(w));
    const auto hits = atlas::atlas_query(atlas::read_json_lines(in_path), preds);
    if (gl.json_out) {
      std::cout << atlas::to_json_lines(hits);
    } else {
      for (const auto& r : hits) std::cout << r.value("rep", "") << "  " << r.value("name", "") << "\n";
      std::cout << hits.size() << " records\n";
    }
  });

  auto* poset = app.add_subcommand("poset", "The w-order on the w-maximal records of an atlas");
  poset->add_option("--in", in_path, "Atlas file")->required();
  add_word(poset);
  poset->callback([&] {
    const auto records = atlas::read_json_lines(in_path);
    const atlas::Poset p = atlas::poset_build(records, word_arg(word_text), gl.budgets());
    const json j = atlas::to_json(p, records);
    if (gl.json_out) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << p.nodes.size() << " nodes, " << p.edges.size() << " edges, " << p.maximal.size()
                << " maximal, " << p.unknown.size() << " unknown, " << (p.acyclic ? "acyclic" : "CYCLIC") << "\n";
      for (const auto& e : j["edges"])
        std::cout << e["lower_name"].get<std::string>() << " <= " << e["upper_name"].get<std::string>()
                  << " (kernel order " << e["kernel_order"] << ")\n";
    }
    if (!p.unknown.empty()) code = kBudget;
  });

  // verify-paper
  atlas::VerifyOptions vo;
  bool list = false;
  auto* verify = app.add_subcommand("verify-paper", "Run the registered checks");
  verify->add_option("--only", vo.only, "Check ids or scopes (repeatable, comma separated)")->delimiter(',');
  verify->add_flag("--budget-small", vo.budget_small, "Skip the heavy checks");
  verify->add_flag("--list", list, "List checks and exit");
  verify->callback([&] {
    if (list) {
      for (const auto& c : atlas::check_registry())
        std::cout << c.id << " [" << c.scope << "]" << (c.heavy ? " heavy" : "") << ": " << c.title << "\n";
      return;
    }
    vo.budgets = gl.budgets();
    vo.cache_dir = gl.cache();
    vo.seed = gl.seed;
    json results = json::array();
    const atlas::VerifyReport rep = atlas::verify_paper(vo, [&](const atlas::CheckResult& r) {
      if (gl.json_out) {
        results.push_back(r);
      } else {
        std::cout << atlas::format_line(r) << std::endl;
      }
    });
    if (gl.json_out) std::cout << json{{"passed", rep.all_passed()}, {"results", results}}.dump() << "\n";
    if (!rep.all_passed()) code = rep.any_budget_abort() ? kBudget : kFail;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  } catch (const Error& e) {
    std::cerr << "verba: " << e.what() << "\n";
    return e.is_budget() ? kBudget : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "verba: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
