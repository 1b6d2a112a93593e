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
#include <optional>
#include <vector>

#include "qaesolve/linalg.hpp"
#include "qaesolve/qubo.hpp"
#include "qaesolve/solver_config.hpp"

namespace qaesolve {

inline constexpr double kHartreeToKcalMol = 627.509474;

/// K-bit two's-complement fixed point on [-1, 1 - 2^-(K-1)]:
///   c_k = 2^(k - (K-1)) for k < K-1,  c_(K-1) = -1.
class EncodingScheme {
 public:
  explicit EncodingScheme(int k_bits = 10);

  int k_bits() const noexcept { return k_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double resolution() const noexcept { return weights_.front(); }
  double min_value() const noexcept { return -1.0; }
  double max_value() const noexcept { return 1.0 - resolution(); }

  /// Element i reads bits [iK, iK + K). Throws ArgumentError on length
  /// mismatch.
  Vector decode(BitsView bits, std::size_t n) const;
  /// Nearest grid point of each element, clamped into range.
  Bits encode(std::span<const double> v) const;

 private:
  int k_;
  std::vector<double> weights_;
};

Vector decode(BitsView bits, int k_bits, std::size_t n);

/// Number of binary variables for an n x n matrix at K bits per element.
constexpr std::size_t qubo_size(std::size_t n, int k_bits) {
  return n * static_cast<std::size_t>(k_bits);
}

/// QUBO whose energy at every bitstring b is
///   F(v) = (v, A v) + lambda (v, v),  v = decode(b).
QuboProblem build_qubo(const SymmetricMatrix& a, double lambda,
                       const EncodingScheme& enc);

/// Decompose with exact subQUBOs, sized for the small dense QUBOs this
/// eigensolver produces.
SolverConfig default_qae_solver();

struct QaeOptions {
  EncodingScheme encoding{10};
  double lambda_tol = 1e-6;
  int max_lambda_iters = 100;
  /// Unset: 0.1 * Gershgorin spread of the matrix being solved.
  std::optional<double> trivial_retreat;
  /// Unset: 0.1 * Gershgorin spread of the matrix being deflated.
  std::optional<double> deflation_margin;
  SolverConfig solver = default_qae_solver();
  /// After each QUBO solve, re-solve each element's bits exactly with the
  /// rest clamped until nothing improves. Skipped when K exceeds kExactCap.
  bool element_polish = true;

  void validate() const;
};

struct EigenSolveResult {
  /// value is the Rayleigh quotient of `vector`, which is kept exactly as
  /// decoded (not normalized).
  EigenPair pair;
  Vector unit_vector;
  double lambda_opt = 0.0;
  std::vector<double> lambda_history;
  std::size_t qubo_count = 0;
};

/// Lowest eigenpair by the lambda fixed-point iteration. `stream` separates
/// the solver seeds of successive states. Throws ConvergenceError (carrying
/// the lambda history) if every QUBO returned the zero vector.
EigenSolveResult solve_eigenpair(const SymmetricMatrix& a,
                                 const QaeOptions& opts,
                                 std::uint64_t stream = 0);

/// A + (sigma - E) v v^T / (v, v). Throws ArgumentError for a zero vector.
SymmetricMatrix deflate(const SymmetricMatrix& a, const EigenPair& pair,
                        double sigma);

struct SpectrumResult {
  /// Ascending by value; values are Rayleigh quotients under the original A.
  std::vector<EigenSolveResult> states;
  std::size_t qubo_count = 0;

  std::vector<double> values() const;
};

/// The m lowest eigenpairs by repeated solve + deflation.
SpectrumResult solve_spectrum(const SymmetricMatrix& a, std::size_t m,
                              const QaeOptions& opts);

/// (E_k - E_0) * unit_scale for k >= 1. Throws ArgumentError unless the input
/// is ascending with at least two values.
std::vector<double> transitions(std::span<const double> values,
                                double unit_scale = 1.0);

}  // namespace qaesolve
