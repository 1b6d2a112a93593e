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

#include "qaesolve/report.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "qaesolve/errors.hpp"

namespace qaesolve {

EnergyUnit parse_unit(const std::string& s) {
  if (s == "hartree") return EnergyUnit::hartree;
  if (s == "kcalmol") return EnergyUnit::kcalmol;
  throw ArgumentError("unknown unit '" + s + "' (expected hartree or kcalmol)");
}

std::string to_string(EnergyUnit u) {
  return u == EnergyUnit::hartree ? "hartree" : "kcalmol";
}

double unit_scale(EnergyUnit u) {
  return u == EnergyUnit::hartree ? 1.0 : kHartreeToKcalMol;
}

EigensolveReport run_eigensolve(const SymmetricMatrix& a, std::size_t states,
                                const QaeOptions& opts, EnergyUnit unit) {
  const auto spectrum = solve_spectrum(a, states, opts);
  const auto reference = jacobi_eigen(a);

  EigensolveReport report;
  report.unit = unit;
  report.n = a.size();
  report.k_bits = opts.encoding.k_bits();
  std::vector<double> ref_values;
  for (std::size_t k = 0; k < spectrum.states.size(); ++k) {
    const auto& s = spectrum.states[k];
    StateRow row;
    row.state = k;
    row.energy = s.pair.value;
    row.reference = reference[k].value;
    row.lambda_opt = s.lambda_opt;
    row.residual = residual_norm(s.unit_vector, reference[k].vector);
    row.qubo_count = s.qubo_count;
    report.rows.push_back(row);
    ref_values.push_back(reference[k].value);
  }
  if (states >= 2) {
    report.transitions = transitions(spectrum.values(), unit_scale(unit));
    report.reference_transitions = transitions(ref_values, unit_scale(unit));
  }
  return report;
}

std::string to_csv(const EigensolveReport& r) {
  const std::string u = to_string(r.unit);
  const double scale = unit_scale(r.unit);
  std::string out = "state,E,E_ref,dE_" + u + ",lambda_opt,R,T_" + u +
                    ",T_ref_" + u + ",dT_" + u + ",qubos\n";
  for (const auto& row : r.rows) {
    out += std::to_string(row.state) + "," + format_double(row.energy) + "," +
           format_double(row.reference) + "," +
           format_double((row.energy - row.reference) * scale) + "," +
           format_double(row.lambda_opt) + "," + format_double(row.residual) +
           ",";
    if (row.state > 0 && row.state <= r.transitions.size()) {
      const double t = r.transitions[row.state - 1];
      const double tr = r.reference_transitions[row.state - 1];
      out += format_double(t) + "," + format_double(tr) + "," +
             format_double(t - tr);
    } else {
      out += ",,";
    }
    out += "," + std::to_string(row.qubo_count) + "\n";
  }
  return out;
}

std::string to_text(const EigensolveReport& r) {
  std::ostringstream os;
  os << "# n = " << r.n << ", K = " << r.k_bits
     << ", QUBO size = " << qubo_size(r.n, r.k_bits) << "\n";
  os << "# unit = " << to_string(r.unit)
     << " (1 hartree = " << format_double(kHartreeToKcalMol)
     << " kcal/mol)\n";
  const double scale = unit_scale(r.unit);
  for (const auto& row : r.rows) {
    os << "state " << row.state << ": E = " << format_double(row.energy)
       << "  E_ref = " << format_double(row.reference)
       << "  dE = " << format_double((row.energy - row.reference) * scale)
       << "  lambda_opt = " << format_double(row.lambda_opt)
       << "  R = " << format_double(row.residual) << "\n";
  }
  for (std::size_t k = 0; k < r.transitions.size(); ++k) {
    os << "S0 -> S" << k + 1 << ": T = " << format_double(r.transitions[k])
       << "  T_ref = " << format_double(r.reference_transitions[k])
       << "  dT = "
       << format_double(r.transitions[k] - r.reference_transitions[k])
       << "\n";
  }
  return os.str();
}

double ComparisonReport::delta(const ComparisonRow& row,
                               const ConfigOutcome& c) const {
  return (c.energy - row.reference) * unit_scale(unit);
}

namespace {

ConfigOutcome run_one(const SymmetricMatrix& a, const EigenPair& ref,
                      const QaeOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = solve_eigenpair(a, opts);
  ConfigOutcome out;
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  out.energy = r.pair.value;
  out.residual = residual_norm(r.unit_vector, ref.vector);
  out.qubo_size = qubo_size(a.size(), opts.encoding.k_bits());
  out.seed = opts.solver.seed;
  return out;
}

}  // namespace

ComparisonReport run_comparison(const std::vector<MatrixInput>& inputs,
                                const NamedConfig& a, const NamedConfig& b,
                                EnergyUnit unit, std::size_t jobs) {
  ComparisonReport report;
  report.unit = unit;
  report.name_a = a.name;
  report.name_b = b.name;
  report.rows.resize(inputs.size());
  std::vector<std::exception_ptr> errors(inputs.size());

  auto work = [&](std::size_t i) {
    try {
      const auto& in = inputs[i];
      const auto ref = jacobi_eigen(in.matrix).front();
      auto& row = report.rows[i];
      row.matrix_id = in.id;
      row.n = in.matrix.size();
      row.reference = ref.value;
      row.a = run_one(in.matrix, ref, a.qae);
      row.b = run_one(in.matrix, ref, b.qae);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const std::size_t workers = std::max<std::size_t>(
      1, std::min(jobs, inputs.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) work(i);
      });
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw std::runtime_error(inputs[i].id + ": " + e.what());
    }
  }
  return report;
}

std::string table_csv(const ComparisonReport& r, bool timing) {
  const std::string u = to_string(r.unit);
  std::string out =
      "matrix_id,n,qubo_size_A,qubo_size_B,E_ref,E_A,E_B,dE_A_" + u +
      ",dE_B_" + u + ",R_A,R_B,seed_A,seed_B";
  if (timing) out += ",time_A_s,time_B_s";
  out += "\n";
  for (const auto& row : r.rows) {
    out += row.matrix_id + "," + std::to_string(row.n) + "," +
           std::to_string(row.a.qubo_size) + "," +
           std::to_string(row.b.qubo_size) + "," +
           format_double(row.reference) + "," + format_double(row.a.energy) +
           "," + format_double(row.b.energy) + "," +
           format_double(r.delta(row, row.a)) + "," +
           format_double(r.delta(row, row.b)) + "," +
           format_double(row.a.residual) + "," +
           format_double(row.b.residual) + "," + std::to_string(row.a.seed) +
           "," + std::to_string(row.b.seed);
    if (timing)
      out += "," + format_double(row.a.seconds) + "," +
             format_double(row.b.seconds);
    out += "\n";
  }
  return out;
}

std::string convergence_csv(const ComparisonReport& r) {
  const std::string u = to_string(r.unit);
  std::string out =
      "index,matrix_id,n,abs_dE_A_" + u + ",abs_dE_B_" + u + "\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    out += std::to_string(i) + "," + row.matrix_id + "," +
           std::to_string(row.n) + "," +
           format_double(std::fabs(r.delta(row, row.a))) + "," +
           format_double(std::fabs(r.delta(row, row.b))) + "\n";
  }
  return out;
}

std::string scan_csv(const ComparisonReport& r) {
  std::string out = "index,matrix_id,E_ref,E_A,E_B\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    out += std::to_string(i) + "," + row.matrix_id + "," +
           format_double(row.reference) + "," + format_double(row.a.energy) +
           "," + format_double(row.b.energy) + "\n";
  }
  return out;
}

}  // namespace qaesolve
