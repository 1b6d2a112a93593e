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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qaesolve/io.hpp"
#include "qaesolve/linalg.hpp"
#include "qaesolve/qae.hpp"

namespace qaesolve {

enum class EnergyUnit { hartree, kcalmol };

EnergyUnit parse_unit(const std::string& s);
std::string to_string(EnergyUnit u);
/// 1 for hartree, kHartreeToKcalMol for kcal/mol.
double unit_scale(EnergyUnit u);

/// One eigenstate of an eigensolve run, compared with Jacobi.
struct StateRow {
  std::size_t state = 0;
  double energy = 0.0;
  double reference = 0.0;
  double lambda_opt = 0.0;
  double residual = 0.0;
  std::size_t qubo_count = 0;
};

struct EigensolveReport {
  EnergyUnit unit = EnergyUnit::hartree;
  std::size_t n = 0;
  int k_bits = 10;
  std::vector<StateRow> rows;
  /// Transition energies in `unit`, QAE and reference, index k -> state k+1.
  std::vector<double> transitions;
  std::vector<double> reference_transitions;
};

EigensolveReport run_eigensolve(const SymmetricMatrix& a, std::size_t states,
                                const QaeOptions& opts, EnergyUnit unit);

/// Columns: state,E,E_ref,dE_<unit>,lambda_opt,R,T_<unit>,T_ref_<unit>,
/// dT_<unit>,qubos. Energies E, E_ref, lambda_opt are in matrix units.
std::string to_csv(const EigensolveReport& r);
/// Human-readable summary with the unit conversion constant in the header.
std::string to_text(const EigensolveReport& r);

struct MatrixInput {
  std::string id;
  SymmetricMatrix matrix;
};

struct ConfigOutcome {
  double energy = 0.0;
  double residual = 0.0;
  double seconds = 0.0;
  std::size_t qubo_size = 0;
  std::uint64_t seed = 0;
};

struct ComparisonRow {
  std::string matrix_id;
  std::size_t n = 0;
  double reference = 0.0;
  ConfigOutcome a;
  ConfigOutcome b;
};

struct ComparisonReport {
  EnergyUnit unit = EnergyUnit::hartree;
  std::string name_a;
  std::string name_b;
  std::vector<ComparisonRow> rows;

  /// (E_config - E_ref) * unit scale.
  double delta(const ComparisonRow& row, const ConfigOutcome& c) const;
};

/// Ground state of every input under both configurations. Up to `jobs`
/// matrices run concurrently; rows follow input order.
ComparisonReport run_comparison(const std::vector<MatrixInput>& inputs,
                                const NamedConfig& a, const NamedConfig& b,
                                EnergyUnit unit, std::size_t jobs = 1);

/// Table of ground-state errors and residuals. Columns:
/// matrix_id,n,qubo_size_A,qubo_size_B,E_ref,E_A,E_B,dE_A_<unit>,
/// dE_B_<unit>,R_A,R_B,seed_A,seed_B[,time_A_s,time_B_s]
/// Timing columns are opt-in so the default output is byte-reproducible.
std::string table_csv(const ComparisonReport& r, bool timing = false);
/// index,matrix_id,n,abs_dE_A_<unit>,abs_dE_B_<unit>
std::string convergence_csv(const ComparisonReport& r);
/// index,matrix_id,E_ref,E_A,E_B  (one matrix per scan point)
std::string scan_csv(const ComparisonReport& r);

}  // namespace qaesolve
