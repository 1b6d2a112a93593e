// Copyright 2026 The qaesolve Authors
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

#include <chrono>
#include <tuple>

#include "qaesolve/errors.hpp"
#include "qaesolve/io.hpp"
#include "qaesolve/linalg.hpp"
#include "qaesolve/qae.hpp"
#include "qaesolve/solver_config.hpp"

namespace py = pybind11;
using namespace qaesolve;

namespace {

using Rows = std::vector<std::vector<double>>;

SymmetricMatrix to_matrix(const Rows& rows) {
  const std::size_t n = rows.size();
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw ArgumentError("matrix must be square");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return {n, std::move(entries)};
}

Rows to_rows(const SymmetricMatrix& a) {
  Rows rows(a.size(), std::vector<double>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) rows[i][j] = a(i, j);
  return rows;
}

SolverConfig make_config(const std::string& method, const std::string& backend,
                         std::size_t subqubo_size, std::uint64_t repeat_limit,
                         std::size_t jobs, std::uint64_t seed) {
  SolverConfig c;
  c.method = parse_method(method);
  c.decomposer.backend = parse_backend(backend);
  c.decomposer.subqubo_size = subqubo_size;
  c.decomposer.repeat_limit = repeat_limit;
  c.decomposer.parallel_subqubos = jobs;
  c.seed = seed;
  return c;
}

QaeOptions make_qae(int k_bits, double lambda_tol, int max_lambda_iters,
                    std::uint64_t seed, std::optional<std::string> method) {
  QaeOptions o;
  o.encoding = EncodingScheme(k_bits);
  o.lambda_tol = lambda_tol;
  o.max_lambda_iters = max_lambda_iters;
  o.solver.seed = seed;
  if (method) o.solver.method = parse_method(*method);
  return o;
}

py::dict eigen_dict(const EigenSolveResult& r) {
  py::dict d;
  d["value"] = r.pair.value;
  d["vector"] = r.pair.vector;
  d["unit_vector"] = r.unit_vector;
  d["lambda_opt"] = r.lambda_opt;
  d["lambda_history"] = r.lambda_history;
  d["qubo_count"] = r.qubo_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "QUBO solvers and a QUBO-based eigensolver";
  m.attr("HARTREE_TO_KCAL_MOL") = kHartreeToKcalMol;

  static py::exception<ConvergenceError> convergence(m, "ConvergenceError",
                                                     PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConvergenceError& e) {
      py::set_error(convergence, e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<QuboProblem>(m, "QuboProblem")
      .def(py::init([](std::size_t n, std::vector<double> diagonal,
                       const std::vector<std::tuple<std::size_t, std::size_t, double>>& couplers,
                       double offset) {
             std::vector<Term> terms;
             for (const auto& [i, j, v] : couplers) terms.push_back({i, j, v});
             return QuboProblem(n, std::move(diagonal), terms, offset);
           }),
           py::arg("num_vars"), py::arg("diagonal"),
           py::arg("couplers") = std::vector<std::tuple<std::size_t, std::size_t, double>>{},
           py::arg("offset") = 0.0)
      .def_property_readonly("num_vars", &QuboProblem::num_vars)
      .def_property_readonly("offset", &QuboProblem::offset)
      .def_property_readonly("diagonal", &QuboProblem::diagonal)
      .def("coupling", &QuboProblem::coupling)
      .def("energy", [](const QuboProblem& q, const Bits& b) { return energy(q, b); })
      .def("__eq__", [](const QuboProblem& a, const QuboProblem& b) { return a == b; });

  py::class_<SolveResult>(m, "SolveResult")
      .def_property_readonly("bits", [](const SolveResult& r) { return r.solution.bits(); })
      .def_readonly("energy", &SolveResult::best_energy)
      .def_readonly("evaluations", &SolveResult::evaluations)
      .def_readonly("restarts", &SolveResult::restarts)
      .def_readonly("iterations", &SolveResult::iterations)
      .def_readonly("seed", &SolveResult::seed)
      .def_readonly("trace", &SolveResult::trace)
      .def_property_readonly("elapsed_s", [](const SolveResult& r) {
        return std::chrono::duration<double>(r.elapsed).count();
      });

  py::class_<EigenPair>(m, "EigenPair")
      .def_readonly("value", &EigenPair::value)
      .def_readonly("vector", &EigenPair::vector);

  m.def("energy", [](const QuboProblem& q, const Bits& b) { return energy(q, b); });

  m.def(
      "solve",
      [](const QuboProblem& q, const std::string& method, const std::string& backend,
         std::size_t subqubo_size, std::uint64_t repeat_limit, std::size_t jobs,
         std::uint64_t seed, std::optional<Bits> initial) {
        const auto c = make_config(method, backend, subqubo_size, repeat_limit, jobs, seed);
        std::optional<BitsView> warm;
        if (initial) warm = BitsView(*initial);
        py::gil_scoped_release release;
        return solve(q, c, seed, warm);
      },
      py::arg("qubo"), py::arg("method") = "decompose", py::arg("backend") = "tabu",
      py::arg("subqubo_size") = 64, py::arg("repeat_limit") = 50, py::arg("jobs") = 1,
      py::arg("seed") = 0, py::arg("initial") = py::none());

  m.def("decode",
        [](const Bits& b, int k_bits, std::size_t n) { return decode(b, k_bits, n); },
        py::arg("bits"), py::arg("k_bits"), py::arg("n"));
  m.def(
      "build_qubo",
      [](const Rows& a, double lambda, int k_bits) {
        return build_qubo(to_matrix(a), lambda, EncodingScheme(k_bits));
      },
      py::arg("matrix"), py::arg("lam"), py::arg("k_bits") = 10);

  m.def(
      "solve_eigenpair",
      [](const Rows& a, int k_bits, double lambda_tol, int max_lambda_iters,
         std::uint64_t seed, std::optional<std::string> method) {
        const auto opts = make_qae(k_bits, lambda_tol, max_lambda_iters, seed, method);
        const auto mat = to_matrix(a);
        EigenSolveResult r;
        {
          py::gil_scoped_release release;
          r = solve_eigenpair(mat, opts);
        }
        return eigen_dict(r);
      },
      py::arg("matrix"), py::arg("k_bits") = 10, py::arg("lambda_tol") = 1e-6,
      py::arg("max_lambda_iters") = 100, py::arg("seed") = 0, py::arg("method") = py::none());

  m.def(
      "solve_spectrum",
      [](const Rows& a, std::size_t states, int k_bits, double lambda_tol,
         int max_lambda_iters, std::uint64_t seed, std::optional<std::string> method) {
        const auto opts = make_qae(k_bits, lambda_tol, max_lambda_iters, seed, method);
        const auto mat = to_matrix(a);
        SpectrumResult r;
        {
          py::gil_scoped_release release;
          r = solve_spectrum(mat, states, opts);
        }
        py::list out;
        for (const auto& s : r.states) out.append(eigen_dict(s));
        return out;
      },
      py::arg("matrix"), py::arg("states"), py::arg("k_bits") = 10,
      py::arg("lambda_tol") = 1e-6, py::arg("max_lambda_iters") = 100, py::arg("seed") = 0,
      py::arg("method") = py::none());

  m.def(
      "deflate",
      [](const Rows& a, double value, const std::vector<double>& v, double sigma) {
        return to_rows(deflate(to_matrix(a), EigenPair{value, v}, sigma));
      },
      py::arg("matrix"), py::arg("value"), py::arg("vector"), py::arg("sigma"));
  m.def("jacobi_eigen", [](const Rows& a) { return jacobi_eigen(to_matrix(a)); });
  m.def("rayleigh_quotient", [](const Rows& a, const std::vector<double>& v) {
    return rayleigh_quotient(to_matrix(a), v);
  });
  m.def("gershgorin_bounds", [](const Rows& a) {
    const auto b = gershgorin_bounds(to_matrix(a));
    return std::make_pair(b.lo, b.hi);
  });
  m.def("residual_norm", [](const std::vector<double>& v, const std::vector<double>& ref) {
    return residual_norm(v, ref);
  });
  m.def(
      "transitions",
      [](const std::vector<double>& values, double scale) { return transitions(values, scale); },
      py::arg("values"), py::arg("unit_scale") = 1.0);

  m.def("parse_qubo", [](const std::string& text) { return parse_qubo(text); });
  m.def("serialize_qubo", &serialize_qubo);
  m.def("parse_matrix", [](const std::string& text) { return to_rows(parse_matrix(text)); });
  m.def("serialize_matrix", [](const Rows& a) { return serialize_matrix(to_matrix(a)); });
}
