// Python bindings. Reports cross the boundary as canonical JSON text; the
// package wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "puritylab/checkers.hpp"
#include "puritylab/constructions.hpp"
#include "puritylab/corpus.hpp"
#include "puritylab/error.hpp"
#include "puritylab/harness.hpp"
#include "puritylab/suites.hpp"
#include "puritylab/workspace.hpp"

namespace py = pybind11;
using namespace puritylab;

namespace {

SettingsOverride overrides(std::optional<unsigned> threads, std::optional<std::uint64_t> budget,
                           std::optional<std::size_t> upTo, std::optional<std::uint64_t> seed,
                           std::optional<std::uint64_t> endBudget, std::optional<bool> oracle) {
  return {threads, budget, upTo, seed, endBudget, oracle};
}

RunSettings resolve(RunSettings base, const SettingsOverride& o) {
  o.applyTo(base);
  validateSettings(base);
  return base;
}

std::string report(const SuiteResult& r, bool timing) {
  return timing ? toJson(r, true).dump(2) + "\n" : canonicalReport(r);
}

Vector toVector(const Algebra& r, const std::vector<long long>& coeffs) {
  if (coeffs.size() != r.dim())
    throw Error(ErrorCode::BadDimensions, "expected " + std::to_string(r.dim()) + " coefficients");
  Vector v(coeffs.size());
  const long long q = r.field().order();
  for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = static_cast<Scalar>(((coeffs[i] % q) + q) % q);
  return v;
}

std::vector<long long> fromVector(const Vector& v) { return {v.begin(), v.end()}; }

// pybind11 holders cannot point to const; algebras are immutable anyway.
using PyAlgebra = std::shared_ptr<Algebra>;
PyAlgebra mutableHandle(const AlgebraPtr& r) { return std::const_pointer_cast<Algebra>(r); }

std::string moduleCheck(const std::string& kind, const Module& m, const std::string& n, const std::string& k,
                        const RunSettings& s) {
  const CheckOptions opts = s.options();
  const Bound bn = parseBound(n).resolve(s.upTo), bm = parseBound(k).resolve(s.upTo);
  CheckReport rep;
  if (kind == "flat") rep = checkFlat(m, bn, bm, opts);
  else if (kind == "injective") rep = checkInjective(m, bn, bm, opts);
  else if (kind == "end-local") rep = checkEndLocal(m, opts);
  else if (kind == "fitting") rep = checkFitting(m, opts);
  else if (kind == "free") rep = checkFree(m);
  else throw Error(ErrorCode::ParseError, "unknown module check '" + kind + "'");
  return toJson(rep).dump();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "purity checks over finite local algebras";

  // Kept alive for the interpreter's lifetime.
  static auto* errorType = new py::exception<Error>(mod, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(errorType->ptr())(e.what());
      err.attr("code") = std::string(errorCodeName(e.code()));
      PyErr_SetObject(errorType->ptr(), err.ptr());
    }
  });

  py::class_<Algebra, PyAlgebra>(mod, "Algebra")
      .def_static(
          "named", [](const std::string& spec) { return mutableHandle(parseNamedAlgebra(spec)); }, py::arg("spec"), "squareZero(2,2), chain(2,3), truncated(2,2,2)")
      .def_property_readonly("dim", &Algebra::dim)
      .def_property_readonly("q", [](const Algebra& r) { return r.field().order(); })
      .def_property_readonly("name", &Algebra::name)
      .def_property_readonly("labels", &Algebra::labels)
      .def_property_readonly("radical_dim", [](const Algebra& r) { return r.radical().dim(); })
      .def("parse", [](const Algebra& r, const std::string& text) { return fromVector(r.parseElement(text).coeffs); })
      .def("format", [](const Algebra& r, const std::vector<long long>& a) { return r.format({toVector(r, a)}); })
      .def("multiply",
           [](const Algebra& r, const std::vector<long long>& a, const std::vector<long long>& b) {
             return fromVector(r.multiply({toVector(r, a)}, {toVector(r, b)}).coeffs);
           })
      .def("is_unit", [](const Algebra& r, const std::vector<long long>& a) { return r.isUnit({toVector(r, a)}); })
      .def("__repr__", [](const Algebra& r) { return "<Algebra " + r.name() + ">"; });

  py::class_<Module>(mod, "Module")
      .def_property_readonly("dim", &Module::dim)
      .def_property_readonly("ring", [](const Module& m) { return mutableHandle(m.ringPtr()); })
      .def_property_readonly("gen", [](const Module& m) { return genRel(m).gen; })
      .def_property_readonly("rel", [](const Module& m) { return genRel(m).rel; })
      .def("has_free_summand", &hasFreeSummand)
      .def("is_isomorphic", [](const Module& a, const Module& b) { return isIsomorphic(a, b); })
      .def(
          "check",
          [](const Module& m, const std::string& kind, const std::string& n, const std::string& k,
             std::optional<unsigned> threads, std::optional<std::uint64_t> budget, std::optional<std::size_t> upTo,
             std::optional<std::uint64_t> seed, std::optional<std::uint64_t> endBudget, std::optional<bool> oracle) {
            const RunSettings s = resolve({}, overrides(threads, budget, upTo, seed, endBudget, oracle));
            py::gil_scoped_release release;
            return moduleCheck(kind, m, n, k, s);
          },
          py::arg("kind"), py::arg("n") = "1", py::arg("m") = "1", py::kw_only(), py::arg("threads") = py::none(),
          py::arg("budget") = py::none(), py::arg("up_to") = py::none(), py::arg("seed") = py::none(),
          py::arg("end_budget") = py::none(), py::arg("oracle") = py::none())
      .def("__repr__", [](const Module& m) { return "<Module dim " + std::to_string(m.dim()) + ">"; });

  mod.def(
      "free_module", [](const PyAlgebra& r, std::size_t n) { return freeModule(r, n); }, py::arg("ring"),
      py::arg("rank"));
  mod.def("residue_field", [](const PyAlgebra& r) { return residueField(r); }, py::arg("ring"));
  mod.def(
      "warfield_module",
      [](const PyAlgebra& r, std::size_t p, std::size_t n, std::size_t m) {
        return warfieldModule(r, {p, n, m, radicalGenerators(*r, p + 1)});
      },
      py::arg("ring"), py::arg("p"), py::arg("n"), py::arg("m"));
  mod.def("auslander_bridger_dual", &auslanderBridgerDual, py::arg("module"));
  mod.def("linear_dual", &fqDual, py::arg("module"));
  mod.def("direct_sum", [](const Module& a, const Module& b) { return directSum(a, b).module; });

  mod.def("suite_names", &suiteNames);
  mod.def("suite_summary", &suiteSummary, py::arg("name"));
  mod.def("query_kinds", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, t] : queryKinds())
      out.emplace_back(k, t == TargetKind::Module ? "module" : t == TargetKind::Inclusion ? "inclusion" : "ring");
    return out;
  });

  mod.def(
      "run_suite",
      [](const std::string& name, bool timing, std::optional<unsigned> threads, std::optional<std::uint64_t> budget,
         std::optional<std::size_t> upTo, std::optional<std::uint64_t> seed, std::optional<std::uint64_t> endBudget,
         std::optional<bool> oracle) {
        const RunSettings s = resolve({}, overrides(threads, budget, upTo, seed, endBudget, oracle));
        py::gil_scoped_release release;
        return report(runSuite(name, s), timing);
      },
      py::arg("name"), py::kw_only(), py::arg("timing") = false, py::arg("threads") = py::none(),
      py::arg("budget") = py::none(), py::arg("up_to") = py::none(), py::arg("seed") = py::none(),
      py::arg("end_budget") = py::none(), py::arg("oracle") = py::none());

  mod.def(
      "run_workspace",
      [](const std::string& text, bool timing, std::optional<unsigned> threads, std::optional<std::uint64_t> budget,
         std::optional<std::size_t> upTo, std::optional<std::uint64_t> seed, std::optional<std::uint64_t> endBudget,
         std::optional<bool> oracle) {
        const Workspace ws = parseWorkspace(text);
        const RunSettings s = resolve(ws.settings, overrides(threads, budget, upTo, seed, endBudget, oracle));
        py::gil_scoped_release release;
        return report(runWorkspace(ws, s), timing);
      },
      py::arg("text"), py::kw_only(), py::arg("timing") = false, py::arg("threads") = py::none(),
      py::arg("budget") = py::none(), py::arg("up_to") = py::none(), py::arg("seed") = py::none(),
      py::arg("end_budget") = py::none(), py::arg("oracle") = py::none());

  mod.def(
      "check",
      [](const std::string& text, const std::string& kind, const std::string& target, const std::string& n,
         const std::string& m, std::optional<unsigned> threads, std::optional<std::uint64_t> budget,
         std::optional<std::size_t> upTo, std::optional<std::uint64_t> seed, std::optional<std::uint64_t> endBudget,
         std::optional<bool> oracle) {
        Workspace ws = parseWorkspace(text);
        ws.queries = {singleQuery(ws, kind, target, parseBound(n), parseBound(m))};
        const RunSettings s = resolve(ws.settings, overrides(threads, budget, upTo, seed, endBudget, oracle));
        py::gil_scoped_release release;
        return canonicalReport(runWorkspace(ws, s));
      },
      py::arg("text"), py::arg("kind"), py::arg("target"), py::arg("n") = "1", py::arg("m") = "1", py::kw_only(),
      py::arg("threads") = py::none(), py::arg("budget") = py::none(), py::arg("up_to") = py::none(),
      py::arg("seed") = py::none(), py::arg("end_budget") = py::none(), py::arg("oracle") = py::none());

  mod.def(
      "replay",
      [](const std::string& text, const std::string& reportText) {
        const Workspace ws = parseWorkspace(text);
        const Json doc = Json::parse(reportText, nullptr, false);
        if (doc.is_discarded() || !doc.contains("claims")) throw Error(ErrorCode::ParseError, "report is not a suite document");
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& claim : doc.at("claims"))
          if (!claim.value("witness", Json()).is_null()) out.emplace_back(claim.at("id"), replayClaim(ws, claim));
        return out;
      },
      py::arg("text"), py::arg("report"), "(id, reproduced) for every claim that carries a witness");
}
