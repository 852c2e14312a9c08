// Copyright 2026 The truthful-arch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "truthful_arch/core.h"
#include "truthful_arch/error.h"
#include "truthful_arch/gs_demo.h"
#include "truthful_arch/mechanism.h"
#include "truthful_arch/mechanisms.h"
#include "truthful_arch/rational.h"
#include "truthful_arch/report.h"
#include "truthful_arch/strategic.h"

namespace py = pybind11;

// Rational <-> fractions.Fraction. Loading also takes int, str (decimal or
// "p/q") and float (converted exactly).
namespace pybind11::detail {

template <>
struct type_caster<truthful_arch::Rational> {
  PYBIND11_TYPE_CASTER(truthful_arch::Rational,
                       const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyBool_Check(src.ptr())) return false;
    if (py::isinstance<py::str>(src)) {
      value = truthful_arch::ParseDecimal(src.cast<std::string>());
      return true;
    }
    if (!py::isinstance<py::int_>(src) && !py::isinstance<py::float_>(src) &&
        !py::isinstance(src, Fraction())) {
      return false;
    }
    py::object f = Fraction()(src);
    const auto num = py::str(f.attr("numerator")).cast<std::string>();
    const auto den = py::str(f.attr("denominator")).cast<std::string>();
    value = truthful_arch::Rational(truthful_arch::Integer(num),
                                    truthful_arch::Integer(den));
    return true;
  }

  static handle cast(const truthful_arch::Rational& src, return_value_policy,
                     handle) {
    py::object num = py::int_(py::str(src.numerator().str()));
    py::object den = py::int_(py::str(src.denominator().str()));
    return Fraction()(num, den).release();
  }

 private:
  static py::object Fraction() {
    return py::module_::import("fractions").attr("Fraction");
  }
};

}  // namespace pybind11::detail

namespace truthful_arch {
namespace {

py::object JsonToPython(const nlohmann::json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

nlohmann::json PythonToJson(const py::handle& value) {
  return nlohmann::json::parse(
      py::module_::import("json").attr("dumps")(value).cast<std::string>());
}

MechanismSpec ToSpec(const std::variant<MechanismSpec, std::string>& m,
                     std::optional<int> dictator) {
  if (const auto* spec = std::get_if<MechanismSpec>(&m)) return *spec;
  return ParseMechanism(std::get<std::string>(m), dictator);
}

strategic::ManipulationQuery MakeQuery(
    const std::variant<MechanismSpec, std::string>& mechanism,
    const Scenario& scenario, std::vector<int> manipulators,
    std::optional<std::string> objective, const Rational& grid_step,
    std::optional<int> dictator) {
  strategic::ManipulationQuery q;
  q.mechanism = ToSpec(mechanism, dictator);
  q.scenario = scenario;
  q.manipulators = std::move(manipulators);
  q.objective = objective ? strategic::ParseObjective(*objective)
                          : strategic::DefaultObjective(q.mechanism);
  q.grid_step = grid_step;
  return q;
}

strategic::SearchOptions MakeOptions(unsigned threads, bool weak_coalition,
                                     std::optional<std::uint64_t> budget) {
  strategic::SearchOptions o;
  if (budget) o.max_candidates = *budget;
  o.threads = threads;
  o.coalition_rule = weak_coalition ? strategic::CoalitionRule::kWeakAllStrictOne
                                    : strategic::CoalitionRule::kStrictAll;
  return o;
}

gs::OrdinalProfile ToProfile(std::vector<gs::Ordering> orderings) {
  return gs::OrdinalProfile{std::move(orderings)};
}

template <typename T>
std::string Repr(const char* name, const T& fields) {
  return std::string(name) + "(" + fields + ")";
}

}  // namespace
}  // namespace truthful_arch

PYBIND11_MODULE(_core, m) {
  using namespace truthful_arch;
  m.doc() = "Exact-arithmetic architecture selection mechanisms";

  static py::handle error_type =
      py::exception<Error>(m, "Error", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc =
          py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("parse_decimal", &ParseDecimal, py::arg("text"));
  m.def("format_decimal", &FormatDecimal, py::arg("value"),
        py::arg("decimals") = 2,
        "Round half away from zero and print with fixed decimals.");
  m.def("contribution_to_benefit", &ContributionToBenefit, py::arg("score"));

  // Scenario model.
  py::class_<Alternative>(m, "Alternative")
      .def(py::init([](int id, std::string name, Rational cost) {
             return Alternative{id, std::move(name), cost};
           }),
           py::arg("id"), py::arg("name"), py::arg("cost"))
      .def_readwrite("id", &Alternative::id)
      .def_readwrite("name", &Alternative::name)
      .def_readwrite("cost", &Alternative::cost)
      .def(py::self == py::self)
      .def("__repr__", [](const Alternative& a) {
        return Repr("Alternative", a.name + ", cost=" + ToExactString(a.cost));
      });

  py::class_<Stakeholder>(m, "Stakeholder")
      .def(py::init([](int id, std::string name) {
             return Stakeholder{id, std::move(name)};
           }),
           py::arg("id"), py::arg("name"))
      .def_readwrite("id", &Stakeholder::id)
      .def_readwrite("name", &Stakeholder::name)
      .def(py::self == py::self)
      .def("__repr__",
           [](const Stakeholder& s) { return Repr("Stakeholder", s.name); });

  py::class_<BenefitProfile>(m, "BenefitProfile")
      .def(py::init([](int id, std::vector<Rational> values) {
             return BenefitProfile{id, std::move(values)};
           }),
           py::arg("stakeholder_id"), py::arg("values"))
      .def_readwrite("stakeholder_id", &BenefitProfile::stakeholder_id)
      .def_readwrite("values", &BenefitProfile::values)
      .def(py::self == py::self);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("alternatives", &Scenario::alternatives)
      .def_readwrite("stakeholders", &Scenario::stakeholders)
      .def_readwrite("actual", &Scenario::actual)
      .def_readwrite("reported", &Scenario::reported)
      .def_property_readonly("num_alternatives", &Scenario::num_alternatives)
      .def_property_readonly("num_stakeholders", &Scenario::num_stakeholders)
      .def("costs", &Scenario::costs)
      .def("to_dict",
           [](const Scenario& s) { return JsonToPython(ScenarioToJson(s)); })
      .def(py::self == py::self)
      .def("__repr__", [](const Scenario& s) {
        return Repr("Scenario", "n=" + std::to_string(s.num_stakeholders()) +
                                    ", m=" +
                                    std::to_string(s.num_alternatives()));
      });

  m.def("load_scenario", &LoadScenarioFile, py::arg("path"));
  m.def("parse_scenario", &ParseScenario, py::arg("text"));
  m.def(
      "validate_scenario",
      [](const py::dict& document) {
        return ValidateScenario(PythonToJson(document));
      },
      py::arg("document"), "Build and validate a Scenario from a dict.");
  m.def(
      "validate_scenario",
      [](const Scenario& s) { return Scenario(ValidateScenario(s)); },
      py::arg("scenario"));
  m.def("argmax_set", [](const std::vector<Rational>& v) {
    return ArgmaxSet(v);
  });

  // Mechanisms.
  py::enum_<MechanismKind>(m, "MechanismKind")
      .value("CBAM", MechanismKind::kCbam)
      .value("DICTATORIAL_CBAM", MechanismKind::kDictatorialCbam)
      .value("DICTATOR", MechanismKind::kDictator)
      .value("VCG", MechanismKind::kVcg);

  py::class_<MechanismSpec>(m, "MechanismSpec")
      .def_readonly("kind", &MechanismSpec::kind)
      .def_readonly("dictator", &MechanismSpec::dictator)
      .def_static("cbam", &MechanismSpec::Cbam)
      .def_static("dictatorial_cbam", &MechanismSpec::DictatorialCbam,
                  py::arg("dictator"))
      .def_static("dictator_rule", &MechanismSpec::Dictator,
                  py::arg("dictator"))
      .def_static("vcg", &MechanismSpec::Vcg)
      .def_property_readonly("name", &MechanismName)
      .def(py::self == py::self)
      .def("__repr__", [](const MechanismSpec& s) {
        return Repr("MechanismSpec", MechanismName(s));
      });
  m.def("parse_mechanism", &ParseMechanism, py::arg("id"),
        py::arg("dictator") = py::none());

  py::class_<VcgTrace>(m, "VcgTrace")
      .def_readonly("trb", &VcgTrace::trb)
      .def_readonly("selected", &VcgTrace::selected)
      .def_readonly("t_plus", &VcgTrace::t_plus)
      .def_readonly("t_minus", &VcgTrace::t_minus)
      .def_readonly("payments", &VcgTrace::payments)
      .def_readonly("net_benefits", &VcgTrace::net_benefits);

  py::class_<MechanismOutcome>(m, "MechanismOutcome")
      .def_readonly("selected", &MechanismOutcome::selected)
      .def_readonly("scores", &MechanismOutcome::scores)
      .def_readonly("payments", &MechanismOutcome::payments)
      .def_readonly("net_benefits", &MechanismOutcome::net_benefits)
      .def_readonly("tie", &MechanismOutcome::tie)
      .def_readonly("vcg", &MechanismOutcome::vcg)
      .def(py::self == py::self)
      .def("__repr__", [](const MechanismOutcome& o) {
        return Repr("MechanismOutcome",
                    "selected=" + std::to_string(o.selected));
      });

  m.def(
      "apply_mechanism",
      [](const std::variant<MechanismSpec, std::string>& mechanism,
         const Scenario& scenario, const std::string& basis,
         std::optional<int> dictator) {
        return ApplyMechanism(ToSpec(mechanism, dictator), scenario,
                              ParseNetBenefitBasis(basis));
      },
      py::arg("mechanism"), py::arg("scenario"), py::arg("basis") = "actual",
      py::arg("dictator") = py::none());
  m.def(
      "cbam_desirability",
      [](const Scenario& s) { return mechanisms::CbamDesirability(s); },
      py::arg("scenario"));
  m.def(
      "cbam_select",
      [](const Scenario& s) { return mechanisms::CbamSelect(s); },
      py::arg("scenario"));
  m.def(
      "dictatorial_cbam_select",
      [](const Scenario& s, int d) {
        return mechanisms::DictatorialCbamSelect(s, d);
      },
      py::arg("scenario"), py::arg("dictator"));
  m.def(
      "dictator_select",
      [](const Scenario& s, int d) { return mechanisms::DictatorSelect(s, d); },
      py::arg("scenario"), py::arg("dictator"));
  m.def(
      "vcg_select",
      [](const Scenario& s, const std::string& basis) {
        return mechanisms::VcgSelect(s, ParseNetBenefitBasis(basis));
      },
      py::arg("scenario"), py::arg("basis") = "actual");

  // Strategic search.
  py::class_<strategic::ManipulationReport>(m, "ManipulationReport")
      .def_readonly("found", &strategic::ManipulationReport::found)
      .def_readonly("witness", &strategic::ManipulationReport::witness)
      .def_readonly("truthful_value",
                    &strategic::ManipulationReport::truthful_value)
      .def_readonly("best_value", &strategic::ManipulationReport::best_value)
      .def_readonly("gain", &strategic::ManipulationReport::gain)
      .def_readonly("member_truthful",
                    &strategic::ManipulationReport::member_truthful)
      .def_readonly("member_best", &strategic::ManipulationReport::member_best)
      .def_readonly("truthful_outcome",
                    &strategic::ManipulationReport::truthful_outcome)
      .def_readonly("manipulated_outcome",
                    &strategic::ManipulationReport::manipulated_outcome)
      .def_readonly("search_size", &strategic::ManipulationReport::search_size)
      .def("__repr__", [](const strategic::ManipulationReport& r) {
        return Repr("ManipulationReport",
                    std::string("found=") + (r.found ? "True" : "False") +
                        ", gain=" + ToExactString(r.gain));
      });

  using SearchFn = strategic::ManipulationReport (*)(
      const strategic::ManipulationQuery&, const strategic::SearchOptions&);
  auto bind_search = [&m](const char* name, SearchFn fn) {
    m.def(
        name,
        [fn](const std::variant<MechanismSpec, std::string>& mechanism,
             const Scenario& scenario, std::vector<int> manipulators,
             std::optional<std::string> objective, const Rational& grid_step,
             std::optional<int> dictator, unsigned threads,
             bool weak_coalition, std::optional<std::uint64_t> max_candidates) {
          const auto query = MakeQuery(mechanism, scenario,
                                       std::move(manipulators), objective,
                                       grid_step, dictator);
          const auto options =
              MakeOptions(threads, weak_coalition, max_candidates);
          py::gil_scoped_release release;
          return fn(query, options);
        },
        py::arg("mechanism"), py::arg("scenario"), py::arg("manipulators"),
        py::arg("objective") = py::none(), py::arg("grid_step") = Rational(10),
        py::arg("dictator") = py::none(), py::arg("threads") = 1u,
        py::arg("weak_coalition") = false,
        py::arg("max_candidates") = py::none());
  };
  bind_search("search", &strategic::Search);
  bind_search("search_unilateral", &strategic::SearchUnilateral);
  bind_search("search_coalition", &strategic::SearchCoalition);

  m.def(
      "verify_truthfulness",
      [](const std::variant<MechanismSpec, std::string>& mechanism,
         const Scenario& scenario, const Rational& grid_step,
         std::optional<int> dictator, unsigned threads) {
        const MechanismSpec spec = ToSpec(mechanism, dictator);
        const auto options = MakeOptions(threads, false, std::nullopt);
        py::gil_scoped_release release;
        return strategic::VerifyTruthfulness(spec, scenario, grid_step,
                                             options);
      },
      py::arg("mechanism"), py::arg("scenario"),
      py::arg("grid_step") = Rational(10), py::arg("dictator") = py::none(),
      py::arg("threads") = 1u);

  // Ordinal voting scans.
  py::class_<gs::GsWitness>(m, "GsWitness")
      .def_property_readonly(
          "profile", [](const gs::GsWitness& w) { return w.profile.orderings; })
      .def_readonly("voter", &gs::GsWitness::voter)
      .def_readonly("misreport", &gs::GsWitness::misreport)
      .def_readonly("truthful_winner", &gs::GsWitness::truthful_winner)
      .def_readonly("manipulated_winner", &gs::GsWitness::manipulated_winner);

  py::class_<gs::GsScanResult>(m, "GsScanResult")
      .def_readonly("total_profiles", &gs::GsScanResult::total_profiles)
      .def_readonly("manipulable_profiles",
                    &gs::GsScanResult::manipulable_profiles)
      .def_readonly("example", &gs::GsScanResult::example);

  m.def(
      "gs_scan",
      [](const std::string& rule, int voters, int alternatives, int dictator,
         std::optional<std::uint64_t> budget) {
        const gs::VotingRule r = gs::ParseVotingRule(rule, dictator);
        py::gil_scoped_release release;
        return gs::GsScan(r, voters, alternatives,
                          budget.value_or(DefaultCandidateBudget()));
      },
      py::arg("rule"), py::arg("voters") = 3, py::arg("alternatives") = 3,
      py::arg("dictator") = 0, py::arg("budget") = py::none());
  m.def(
      "evaluate_rule",
      [](const std::string& rule, std::vector<gs::Ordering> orderings,
         int dictator) {
        return gs::EvaluateRule(gs::ParseVotingRule(rule, dictator),
                                ToProfile(std::move(orderings)));
      },
      py::arg("rule"), py::arg("orderings"), py::arg("dictator") = 0);

  // Rendering.
  m.def(
      "select_report",
      [](const Scenario& scenario,
         const std::variant<MechanismSpec, std::string>& mechanism,
         const std::string& format, const std::string& basis,
         std::optional<int> dictator, int decimals) {
        const MechanismSpec spec = ToSpec(mechanism, dictator);
        const NetBenefitBasis b = ParseNetBenefitBasis(basis);
        report::Report r = report::SelectReport(
            scenario, spec, ApplyMechanism(spec, scenario, b), b);
        r.decimals = decimals;
        return report::Render(r, report::ParseFormat(format));
      },
      py::arg("scenario"), py::arg("mechanism"), py::arg("format") = "text",
      py::arg("basis") = "actual", py::arg("dictator") = py::none(),
      py::arg("decimals") = 2);
}
