// Python bindings: metamodels and models are opaque handles; reports come
// back as plain dicts and strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "migmeta/canonical.hpp"
#include "migmeta/cli.hpp"
#include "migmeta/conformance.hpp"
#include "migmeta/dsl.hpp"
#include "migmeta/embedded.hpp"
#include "migmeta/error.hpp"
#include "migmeta/json_io.hpp"
#include "migmeta/reporting.hpp"
#include "migmeta/tailoring.hpp"

namespace py = pybind11;
using namespace migmeta;

namespace {

template <typename T>
T unwrap(ParseResult<T> result) {
  if (result.ok()) return std::move(*result.value);
  std::string message;
  for (const ParseDiagnostic& d : result.diagnostics) message += format(d) + "\n";
  throw py::value_error(message);
}

Metamodel named(const std::string& version) {
  if (version == "core") return build_canonical();
  if (version == "core-1.0") return build_version_1_0();
  auto m = builtin_version(version);
  if (!m) throw py::value_error("unknown metamodel version '" + version + "'");
  return std::move(*m);
}

py::dict concept_dict(const Concept& c) {
  py::dict d;
  d["id"] = c.id.str();
  d["display_name"] = c.display_name;
  d["kind"] = std::string(to_string(c.kind));
  d["phase"] = c.phase ? py::object(py::str(c.phase->str())) : py::object(py::none());
  d["parent"] = c.parent ? py::object(py::str(c.parent->str())) : py::object(py::none());
  d["definition"] = c.definition;
  d["aliases"] = c.aliases;
  return d;
}

py::dict diagnostic_dict(const Diagnostic& diag) {
  py::dict d;
  d["severity"] = std::string(to_string(diag.severity));
  d["code"] = std::string(to_string(diag.code));
  d["message"] = diag.message;
  d["subject"] = diag.subject;
  return d;
}

std::vector<ConceptId> ids(const std::vector<std::string>& names) {
  return {names.begin(), names.end()};
}

}  // namespace

PYBIND11_MODULE(_migmeta, mod) {
  mod.doc() = "Cloud migration metamodel toolkit";

  py::register_exception<Error>(mod, "MigmetaError", PyExc_RuntimeError);

  py::class_<Metamodel>(mod, "Metamodel")
      .def_property_readonly("version", &Metamodel::version)
      .def("concept_ids",
           [](const Metamodel& m) {
             std::vector<std::string> out;
             for (const Concept& c : m.concepts()) out.push_back(c.id.str());
             return out;
           })
      .def("concept",
           [](const Metamodel& m, const std::string& name) -> py::object {
             const Concept* c = m.resolve(name);
             return c ? py::object(concept_dict(*c)) : py::object(py::none());
           })
      .def("relationships",
           [](const Metamodel& m) {
             std::vector<std::string> out;
             for (const Relationship& r : m.relationships()) out.push_back(describe(r));
             return out;
           })
      .def("ancestors",
           [](const Metamodel& m, const std::string& id) {
             std::vector<std::string> out;
             for (const ConceptId& a : ancestors(m, ConceptId(id))) out.push_back(a.str());
             return out;
           })
      .def("phase_chain",
           [](const Metamodel& m) {
             std::vector<std::string> out;
             for (const ConceptId& p : phase_chain(m)) out.push_back(p.str());
             return out;
           })
      .def("validate",
           [](const Metamodel& m) {
             py::list out;
             for (const Diagnostic& d : validate_metamodel(m)) out.append(diagnostic_dict(d));
             return out;
           })
      .def("structurally_equal",
           [](const Metamodel& a, const Metamodel& b) { return structurally_equal(a, b); })
      .def("to_json", [](const Metamodel& m) { return export_json(m); })
      .def("to_dot", [](const Metamodel& m, bool definitions, bool clusters) {
             return to_dot(m, RenderOptions{RenderFormat::Dot, definitions, clusters});
           }, py::arg("definitions") = false, py::arg("clusters") = true)
      .def("to_checklist", [](const Metamodel& m, bool definitions) {
             return to_checklist(m, RenderOptions{RenderFormat::Checklist, definitions, true});
           }, py::arg("definitions") = false);

  py::class_<InstanceModel>(mod, "InstanceModel")
      .def_property_readonly("name", &InstanceModel::name)
      .def_property_readonly("conforms_to", &InstanceModel::conforms_to)
      .def("activities",
           [](const InstanceModel& model) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const Activity& a : model.activities()) out.emplace_back(a.id.str(), a.instance_of);
             return out;
           })
      .def("edges",
           [](const InstanceModel& model) {
             std::vector<std::string> out;
             for (const Edge& e : model.edges()) out.push_back(describe(e));
             return out;
           })
      .def("to_dsl", [](const InstanceModel& model) { return serialize(model); })
      .def("to_json", [](const InstanceModel& model) { return export_json(model); });

  mod.def("canonical", &build_canonical, "The final published metamodel");
  mod.def("version_1_0", &build_version_1_0);
  mod.def("metamodel", &named, py::arg("version"),
          "A built-in version: core, core-1.0, final, 1.0, 1.1 or 1.1+licensing");
  mod.def("metamodel_from_json", [](const std::string& text) { return import_metamodel_json(text); });

  mod.def("parse_model", [](const std::string& text) { return unwrap(parse_model(text)); });
  mod.def("model_from_json", [](const std::string& text) { return import_model_json(text); });
  mod.def("fixture", [](const std::string& name) {
    auto text = embedded::find_fixture(name);
    if (!text) throw py::key_error(name);
    return unwrap(parse_model(*text));
  });
  mod.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const embedded::File& f : embedded::fixtures()) out.emplace_back(f.name);
    return out;
  });

  mod.def("check", [](const Metamodel& m, const InstanceModel& model, bool strict_edges) {
    const ConformanceReport report = check_conformance(m, model, strict_edges);
    py::list violations;
    for (const Violation& v : report.violations) {
      violations.append(py::make_tuple(std::string(to_string(v.code)), v.subject, v.detail));
    }
    std::vector<std::string> covered;
    for (const ConceptId& c : report.covered_concepts) covered.push_back(c.str());
    py::dict d;
    d["conformant"] = report.conformant();
    d["violations"] = violations;
    d["covered"] = covered;
    return d;
  }, py::arg("metamodel"), py::arg("model"), py::arg("strict_edges") = false);

  mod.def("coverage_csv",
          [](const Metamodel& m, const std::vector<InstanceModel>& models,
             std::optional<std::vector<std::string>> rows) {
            std::optional<std::vector<ConceptId>> filter;
            if (rows) filter = ids(*rows);
            return coverage_to_csv(coverage_matrix(m, models, filter));
          },
          py::arg("metamodel"), py::arg("models"), py::arg("rows") = py::none());

  mod.def("apply_extension", [](const Metamodel& m, const std::string& text) {
    return apply_extension(m, unwrap(parse_extension(text)));
  });
  mod.def("select_subset", [](const Metamodel& m, const std::vector<std::string>& keep) {
    const auto v = ids(keep);
    return select_subset(m, std::set<ConceptId>(v.begin(), v.end()));
  });

  mod.def("diff", [](const InstanceModel& a, const InstanceModel& b, const Metamodel& m) {
    const ModelDiff d = diff_models(a, b, m);
    const auto strs = [](const std::set<ConceptId>& s) {
      std::vector<std::string> out;
      for (const ConceptId& c : s) out.push_back(c.str());
      return out;
    };
    py::dict out;
    out["only_in_a"] = strs(d.only_in_a);
    out["only_in_b"] = strs(d.only_in_b);
    out["shared"] = strs(d.shared);
    return out;
  });

  mod.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = static_cast<int>(cli::run(args, out, err));
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs the command line in-process; returns (exit code, stdout, stderr)");
}
