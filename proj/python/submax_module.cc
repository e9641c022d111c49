// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "submax/cli.h"
#include "submax/eme.h"
#include "submax/errors.h"
#include "submax/instance.h"
#include "submax/report.h"
#include "submax/set_function.h"

namespace py = pybind11;

namespace submax {
namespace {

using nlohmann::json;

Instance Parse(const std::string& text) {
  try {
    return ParseInstance(json::parse(text));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed json: ") + e.what());
  }
}

std::string SolveJson(const std::string& instance_text, double epsilon,
                      double t_s, int enum_cap, int frac_cap) {
  SolveOptions options;
  options.epsilon = epsilon;
  options.t_s = t_s;
  options.enum_cap = enum_cap;
  options.frac_cap = frac_cap;
  const Instance instance = Parse(instance_text);
  py::gil_scoped_release release;
  return CanonicalDump(Solve(instance, options).report);
}

// Solves, runs every checker and returns {"report", "violations", "checks"}.
std::string CheckJson(const std::string& instance_text, double epsilon) {
  SolveOptions options;
  options.epsilon = epsilon;
  const Instance instance = Parse(instance_text);
  py::gil_scoped_release release;
  const SolveOutcome outcome = Solve(instance, options);
  const CheckReport checks = RunChecks(instance, outcome);
  return CanonicalDump({{"report", outcome.report},
                        {"violations", checks.violations()},
                        {"checks", ChecksToJson(checks)}});
}

// F(y) for a tabulated f; coords are (members, probability) pairs.
double EmeValue(std::vector<double> table, const std::vector<int>& sure,
                const std::vector<std::pair<std::vector<int>, double>>& coords) {
  int n = 0;
  while ((std::size_t{1} << n) < table.size()) ++n;
  auto f = MakeTable(std::move(table), false);
  std::vector<std::pair<ElementSet, double>> c;
  for (const auto& [members, p] : coords) {
    c.emplace_back(ElementSet::FromVector(members), p);
  }
  return EvaluateF(*f, EmeVector::FromCoordinates(
                           n, ElementSet::FromVector(sure), c));
}

}  // namespace
}  // namespace submax

PYBIND11_MODULE(_submax, m) {
  using namespace submax;
  m.doc() = "Submodular maximization under matroid and knapsack constraints";

  static py::exception<FracBudgetError> budget_error(m, "FracBudgetError",
                                                     PyExc_RuntimeError);
  static py::exception<ContractViolation> contract_error(
      m, "ContractViolation", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const FracBudgetError& e) {
      PyErr_SetString(budget_error.ptr(), e.what());
    } catch (const ContractViolation& e) {
      PyErr_SetString(contract_error.ptr(), e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("generate",
        [](const std::string& family, int n, std::uint64_t seed) {
          return CanonicalDump(InstanceToJson(GenerateInstance(family, n, seed)));
        },
        py::arg("family"), py::arg("n") = 8, py::arg("seed") = 1);
  m.def("digest",
        [](const std::string& text) { return InstanceDigest(Parse(text)); },
        py::arg("instance"));
  m.def("solve", &SolveJson, py::arg("instance"), py::arg("epsilon") = 0.5,
        py::arg("ts") = kDefaultSwitchTime, py::arg("enum_cap") = kDefaultEnumCap,
        py::arg("frac_cap") = kDefaultFracCap);
  m.def("check", &CheckJson, py::arg("instance"), py::arg("epsilon") = 0.5);
  m.def("eme_value", &EmeValue, py::arg("table"), py::arg("sure"),
        py::arg("coords"));
}
