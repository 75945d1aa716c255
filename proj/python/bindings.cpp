#include <g2kit/catalog.hpp>
#include <g2kit/cli.hpp>
#include <g2kit/io.hpp>
#include <g2kit/two_groupoid.hpp>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace g2kit;

namespace {

std::string report_json(const Report& r) { return report_to_json(r).dump(); }

SamplingOptions sampling(std::size_t samples, std::uint64_t seed, double tol) {
  SamplingOptions s;
  s.samples = samples;
  s.seed = seed;
  s.tol = tol;
  return s;
}

Bundle bundle(const std::string& text) { return parse_bundle_text(text, "<bundle>"); }

std::string converted(const std::string& text, bool from_lie2) {
  const Bundle b = bundle(text);
  if (from_lie2) {
    if (b.kind != "lie2") throw InputError("expected a lie2 bundle, got " + b.kind);
    return bundle_to_json("crossed", crossed_to_json(to_crossed_module(std::get<StrictLie2Data>(b.data)))).dump();
  }
  if (b.kind != "crossed") throw InputError("expected a crossed bundle, got " + b.kind);
  return bundle_to_json("lie2", lie2_to_json(from_crossed_module(std::get<CrossedModuleData>(b.data)))).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Strict Lie 2-algebra actions on Lie algebroids: exact checks and integrated actions";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_RuntimeError);

  // Bundles travel as JSON text; reports come back as JSON text.
  m.def("normalize_bundle", [](const std::string& text) {
    const Bundle b = bundle(text);
    return std::visit(
        [&](const auto& d) -> std::string {
          using T = std::decay_t<decltype(d)>;
          const std::string kind = b.kind == "poisson" ? "algebroid" : b.kind;
          if constexpr (std::is_same_v<T, StrictLie2Data>) return bundle_to_json(kind, lie2_to_json(d)).dump();
          if constexpr (std::is_same_v<T, CrossedModuleData>) return bundle_to_json(kind, crossed_to_json(d)).dump();
          if constexpr (std::is_same_v<T, LieAlgebroidData>) return bundle_to_json(kind, algebroid_to_json(d)).dump();
          if constexpr (std::is_same_v<T, StrictActionData>) return bundle_to_json(kind, action_to_json(d)).dump();
        },
        b.data);
  }, py::arg("text"), "Parse a bundle and re-emit it in canonical form (poisson becomes algebroid).");

  m.def("check_lie2", [](const std::string& t) { return report_json(lie2_bundle_report(bundle(t))); }, py::arg("text"));
  m.def("check_algebroid", [](const std::string& t) { return report_json(algebroid_bundle_report(bundle(t))); }, py::arg("text"));
  m.def("check_action", [](const std::string& t) { return report_json(action_bundle_report(bundle(t))); }, py::arg("text"));
  m.def("derive_brackets", [](const std::string& t) { return report_json(derive_bundle_report(bundle(t))); }, py::arg("text"));
  m.def("to_crossed_module", [](const std::string& t) { return converted(t, true); }, py::arg("text"));
  m.def("from_crossed_module", [](const std::string& t) { return converted(t, false); }, py::arg("text"));

  m.def("action_names", &catalog::action_names);
  m.def("integration_names", &integration_names);
  m.def("catalog_action", [](const std::string& name) { return bundle_to_json("action", action_to_json(catalog::action(name))).dump(); },
        py::arg("name"));

  m.def("integrate", [](const std::string& example, std::size_t samples, std::uint64_t seed, double tol, bool psi_only) {
    return report_json(integrate_report(integration_setup(example), sampling(samples, seed, tol), psi_only));
  }, py::arg("example"), py::arg("samples") = 100, py::arg("seed") = 1, py::arg("tol") = 1e-9, py::arg("psi_only") = false,
        py::call_guard<py::gil_scoped_release>());

  m.def("verify_2groupoid", [](const std::string& example, std::size_t samples, std::uint64_t seed, double tol) {
    return report_json(verify_two_groupoid(integration_setup(example), sampling(samples, seed, tol)));
  }, py::arg("example"), py::arg("samples") = 100, py::arg("seed") = 1, py::arg("tol") = 1e-9,
        py::call_guard<py::gil_scoped_release>());

  m.def("psi", [](const std::string& example, const Vec& w, const Vec& v, const Vec& x, const Vec& a) {
    const IntegrationSetup s = integration_setup(example);
    if (w.size() != static_cast<long>(s.S.L.dim_h) || v.size() != static_cast<long>(s.S.L.dim_g) ||
        x.size() != static_cast<long>(s.S.A.base_dim()) || a.size() != static_cast<long>(s.S.A.rank()))
      throw InputError("psi: argument sizes do not match the example");
    const BundlePoint p = build_psi(s)(LAGroupElement{w, s.cm.exp_g(v)}, BundlePoint{x, a});
    return py::make_tuple(p.x, p.a);
  }, py::arg("example"), py::arg("w"), py::arg("v"), py::arg("x"), py::arg("a"),
        "Psi((w, exp v), a_x) for an integration example; returns (x', a').");

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run a g2kit command; returns (exit code, stdout, stderr).");

  m.attr("SCHEMA") = kSchema;
}
