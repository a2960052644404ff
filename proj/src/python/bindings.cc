// Copyright 2026 The upmax Authors
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

// Python bindings. Literals cross the boundary as signed DIMACS integers and
// assignments as lists of such literals.

#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "upmax/dimacs.h"
#include "upmax/gen.h"
#include "upmax/oracle.h"
#include "upmax/propagate.h"
#include "upmax/solver.h"

namespace py = pybind11;

namespace upmax {
namespace {

std::vector<Literal> ToLiterals(const std::vector<int>& dimacs) {
  std::vector<Literal> out;
  out.reserve(dimacs.size());
  for (int d : dimacs) {
    if (d == 0) throw py::value_error("literal 0 is not allowed");
    out.push_back(Literal::FromDimacs(d));
  }
  return out;
}

Assignment ToAssignment(const Formula& f, const std::vector<int>& dimacs) {
  Assignment a(f.num_variables());
  for (int d : dimacs) {
    const Literal l = Literal::FromDimacs(d);
    if (d == 0 || l.var() > f.num_variables()) {
      throw py::value_error("literal " + std::to_string(d) + " out of range");
    }
    a.Set(l);
  }
  return a;
}

py::list Clauses(const Formula& f) {
  py::list out;
  for (const Clause& c : f.Snapshot()) {
    std::vector<int> lits;
    for (Literal l : c.literals) lits.push_back(l.ToDimacs());
    out.append(py::make_tuple(lits, c.weight));
  }
  return out;
}

py::dict ResultDict(const SolveResult& r) {
  py::dict d;
  d["optimum"] = r.optimum;
  d["assignment"] = r.best.ToDimacs();
  d["status"] = ToString(r.status);
  d["branches"] = r.stats.branches;
  d["nodes"] = r.stats.nodes;
  d["rule_applications"] = std::vector<std::int64_t>(
      r.stats.rule_applications.begin(), r.stats.rule_applications.end());
  d["elapsed_ms"] = r.stats.elapsed_ms;
  return d;
}

}  // namespace
}  // namespace upmax

PYBIND11_MODULE(_upmax, m) {
  using namespace upmax;
  m.doc() = "Branch and bound Max-SAT with inference-rule lower bounds";
  m.attr("TOP") = kTop;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_ValueError);

  py::class_<Formula>(m, "Formula")
      .def(py::init<int>(), py::arg("num_variables") = 0)
      .def(
          "add_clause",
          [](Formula& f, const std::vector<int>& lits, Weight weight) {
            if (weight < 1) throw py::value_error("weight must be positive");
            if (lits.empty()) {
              f.AddEmpty(weight);
              return;
            }
            f.AddClause(ToLiterals(lits), weight);
          },
          py::arg("literals"), py::arg("weight") = 1)
      .def_property_readonly("num_variables", &Formula::num_variables)
      .def_property_readonly("num_clauses", &Formula::num_active_clauses)
      .def_property_readonly("empty_weight", &Formula::empty_weight)
      .def("clauses", &Clauses)
      .def("cost",
           [](const Formula& f, const std::vector<int>& assignment) {
             const Assignment a = ToAssignment(f, assignment);
             if (!a.IsComplete()) throw py::value_error("assignment is incomplete");
             return FormulaCost(f, a);
           })
      .def("__copy__", [](const Formula& f) { return Formula(f); })
      .def("__repr__", [](const Formula& f) {
        return "<Formula variables=" + std::to_string(f.num_variables()) +
               " clauses=" + std::to_string(f.num_active_clauses()) + ">";
      });

  m.def(
      "parse_dimacs",
      [](const std::string& text, bool strict) {
        ParseOptions o;
        o.strict = strict;
        return ParseDimacs(text, o).formula;
      },
      py::arg("text"), py::arg("strict") = true);
  m.def(
      "read_dimacs",
      [](const std::string& path, bool strict) {
        ParseOptions o;
        o.strict = strict;
        return ReadDimacsFile(path, o).formula;
      },
      py::arg("path"), py::arg("strict") = false);
  m.def("write_cnf", &WriteCnf);
  m.def("write_wcnf", &WriteWcnf);

  m.def(
      "solve",
      [](const Formula& f, const std::string& variant, std::optional<Weight> ub,
         std::optional<double> timeout) {
        SolveOptions o;
        o.config = SolverConfig::ForVariant(ParseVariant(variant));
        o.initial_ub = ub;
        if (timeout) o.timeout = std::chrono::duration<double>(*timeout);
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = Solve(f, o);
        }
        return ResultDict(r);
      },
      py::arg("formula"), py::arg("variant") = "z", py::arg("ub") = py::none(),
      py::arg("timeout") = py::none());

  m.def(
      "lower_bound",
      [](const Formula& f, const std::string& variant) {
        auto [r, g] = Underestimation(
            f, kTop, SolverConfig::ForVariant(ParseVariant(variant)));
        return AddWeight(g.empty_weight(), r.count);
      },
      py::arg("formula"), py::arg("variant") = "z");

  m.def(
      "brute_force_optimum",
      [](const Formula& f, int cap) {
        const OptimumResult r = BruteForceOptimum(f, cap);
        return py::make_tuple(r.cost, r.witness.ToDimacs());
      },
      py::arg("formula"), py::arg("cap") = kDefaultOracleCap);
  m.def(
      "equivalent",
      [](const Formula& a, const Formula& b) {
        return CheckEquivalence(a, b).equivalent;
      });

  m.def("random_max_ksat", &RandomMaxKSat, py::arg("n"), py::arg("m"),
        py::arg("k"), py::arg("seed"));
  m.def(
      "max_cut",
      [](int vertices, int edges, std::uint64_t seed) {
        const GraphInstance g = RandomConnectedGraph(vertices, edges, seed);
        return py::make_tuple(EncodeMaxCut(g), g.edges);
      },
      py::arg("vertices"), py::arg("edges"), py::arg("seed"));
  m.def(
      "three_coloring",
      [](int vertices, double density, std::uint64_t seed) {
        const GraphInstance g = RandomKColorableGraph(vertices, density, seed);
        return py::make_tuple(EncodeThreeColoring(g), g.edges);
      },
      py::arg("vertices"), py::arg("density"), py::arg("seed"));
}
