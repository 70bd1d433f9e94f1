#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "verba/atlas/atlas.hpp"
#include "verba/atlas/checks.hpp"
#include "verba/error.hpp"
#include "verba/group/structure.hpp"
#include "verba/lattice/lattice.hpp"
#include "verba/maximality/maximality.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace verba;

// Results cross the boundary as JSON text; the Python package decodes them.
namespace {

GroupTable table(const std::string& spec) { return materialize(parse_group_spec(spec)); }

std::string group_info(const std::string& spec, const std::vector<std::string>& words) {
  const GroupSpec s = parse_group_spec(spec);
  atlas::CorpusEntry e{s.name(), s, materialize(s), {}};
  atlas::CorpusConfig cfg;
  for (const auto& w : words) cfg.words.push_back(parse_word(w));
  json r = atlas::atlas_record(e, "", cfg);
  r.erase("rep");
  r.erase("aliases");
  return r.dump();
}

std::string verbal(const std::string& spec, const std::string& word) {
  const GroupTable g = table(spec);
  const Subgroup v = verbal_subgroup(parse_word(word), g);
  json j = subgroup_json(g, v);
  j["index"] = g.order() / v.order();
  return j.dump();
}

std::string maximal(const std::string& spec, const std::string& word) {
  const GroupTable g = table(spec);
  const Word w = parse_word(word);
  const SubgroupLattice lat = all_subgroups(g);
  json j = report_json(g, maximality_report(w, lat));
  j["hereditary"] = is_hereditarily_w_maximal(w, lat).holds;
  return j.dump();
}

std::string interchange(const std::string& spec, const std::string& word) {
  const GroupTable g = table(spec);
  const InterchangeResult r = is_interchangeable(parse_word(word), g);
  return json{{"interchangeable", r.holds},
              {"prime", r.prime},
              {"witness", r.witness ? subgroup_json(g, *r.witness) : json(nullptr)}}
      .dump();
}

std::string classify(const std::string& spec) {
  const GroupTable g = table(spec);
  json j = classify_hdm(g);
  j["d"] = min_generators(g);
  j["hdm"] = is_hereditarily_d_maximal(g).holds;
  return j.dump();
}

std::string precedes_json(const std::string& lower, const std::string& upper, const std::string& word) {
  const GroupTable h = table(lower), g = table(upper);
  const PrecedesResult r = precedes(parse_word(word), h, g);
  return json{{"answer", to_string(r.answer)}, {"kernel", r.kernel ? subgroup_json(g, *r.kernel) : json(nullptr)}}
      .dump();
}

std::string atlas_lines(std::size_t max_order, std::vector<std::string> builders, unsigned depth,
                        std::vector<std::uint64_t> primes, const std::vector<std::string>& words, unsigned jobs) {
  atlas::CorpusConfig cfg;
  cfg.max_order = max_order;
  cfg.builders = builders.empty() ? atlas::all_builders() : std::move(builders);
  cfg.product_depth = depth;
  cfg.primes = std::move(primes);
  for (const auto& w : words) cfg.words.push_back(parse_word(w));
  atlas::validate(cfg);
  return atlas::to_json_lines(atlas::atlas_build(cfg, jobs));
}

std::string verify(const std::vector<std::string>& only, bool budget_small) {
  atlas::VerifyOptions o;
  o.only = only;
  o.budget_small = budget_small;
  json out = json::array();
  py::gil_scoped_release release;
  for (const auto& r : atlas::verify_paper(o).results) out.push_back(r);
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "VerbaError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object kind = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error.ptr(), py::make_tuple(kind, py::str(e.what())).ptr());
    }
  });
  m.def("canonical_word", [](const std::string& w) { return parse_word(w).to_string(); });
  m.def("is_commutator_word", [](const std::string& w) { return is_commutator_word(parse_word(w)); });
  m.def("group_info", &group_info, py::arg("spec"), py::arg("words") = std::vector<std::string>{});
  m.def("verbal", &verbal);
  m.def("maximal", &maximal);
  m.def("interchange", &interchange);
  m.def("classify_hdm", &classify);
  m.def("precedes", &precedes_json, py::arg("lower"), py::arg("upper"), py::arg("word"));
  m.def("atlas_lines", &atlas_lines, py::arg("max_order"), py::arg("builders"), py::arg("depth"),
        py::arg("primes"), py::arg("words"), py::arg("jobs"));
  m.def("verify", &verify, py::arg("only"), py::arg("budget_small"));
}
