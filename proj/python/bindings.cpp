#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sabotage/bisim.hpp"
#include "sabotage/charform.hpp"
#include "sabotage/io.hpp"
#include "sabotage/semantics.hpp"
#include "sabotage/translate.hpp"

namespace py = pybind11;
using namespace sabotage;

namespace {

std::string dump(const PointedModel& m) { return to_json(m).dump(); }

}  // namespace

// Models cross the boundary as JSON text; the Python package converts.
PYBIND11_MODULE(_core, m) {
  m.doc() = "Bisimulation checkers for link- and point-deletion modal logics";

  auto base = py::register_exception<Error>(m, "SabotageError", PyExc_ValueError);
  py::register_exception<SizeGuardExceeded>(m, "SizeGuardExceeded", base.ptr());

  m.def("normalize_model", [](const std::string& text) { return dump(load_model(text)); });

  m.def(
      "check",
      [](const std::string& kind, const std::string& a, const std::string& b, bool cache,
         std::size_t max_calls) {
        return to_json(check(parse_kind(kind), load_model(a), load_model(b), {cache, max_calls})).dump();
      },
      py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("cache") = false, py::arg("max_calls") = 0);

  m.def("oracle", [](const std::string& kind, const std::string& a, const std::string& b) {
    return to_json(oracle_bisimilar(parse_kind(kind), load_model(a), load_model(b))).dump();
  });

  m.def("parse_formula", [](const std::string& text) { return print(parse(text)); });

  m.def("evaluate", [](const std::string& model, const std::string& formula) {
    return eval(load_model(model), parse(formula));
  });

  m.def("evaluate_all", [](const std::string& model, const std::string& formula) {
    PointedModel pm = load_model(model);
    Formula f = parse(formula);
    std::vector<std::pair<std::string, bool>> out;
    for (WorldIndex w = 0; w < pm.model.world_count(); ++w) {
      out.emplace_back(pm.model.world_name(w), eval(pm.model, w, f));
    }
    return out;
  });

  m.def(
      "characteristic_formula",
      [](const std::string& kind, const std::string& model, bool all_worlds) {
        PointedModel pm = load_model(model);
        BisimKind k = parse_kind(kind);
        return print(all_worlds ? build_char(k, pm.model) : build_char(k, pm));
      },
      py::arg("kind"), py::arg("model"), py::arg("all_worlds") = false);

  m.def("char_check", [](const std::string& kind, const std::string& a, const std::string& b) {
    return char_check(parse_kind(kind), load_model(a), load_model(b));
  });

  m.def("translate_f", [](const std::string& model) { return dump(translate_F(load_model(model))); });

  m.def("translate_g", [](const std::string& model, const std::string& mode) {
    return dump(translate_G(load_model(model), parse_edges_to_sink(mode)));
  });

  m.def("random_model",
        [](std::uint64_t seed, std::size_t worlds, std::size_t edges, const std::vector<std::string>& props) {
          return dump(random_model(seed, worlds, edges, props));
        });
}
