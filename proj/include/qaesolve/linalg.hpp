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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace qaesolve {

using Vector = std::vector<double>;

/// Dense symmetric n x n matrix, row-major.
class SymmetricMatrix {
 public:
  /// Validates finiteness and |A_ij - A_ji| <= 1e-10 max(1, |A_ij|), then
  /// stores the exact symmetrization (A + A^T) / 2. Throws ValidationError.
  SymmetricMatrix(std::size_t n, std::vector<double> entries);
  static SymmetricMatrix identity(std::size_t n);
  static SymmetricMatrix diagonal(std::span<const double> d);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  const std::vector<double>& entries() const noexcept { return a_; }

  Vector multiply(std::span<const double> v) const;
  double trace() const;
  double frobenius_norm() const;
  SymmetricMatrix scaled(double c) const;

  friend bool operator==(const SymmetricMatrix&,
                         const SymmetricMatrix&) = default;

 private:
  SymmetricMatrix() = default;
  std::size_t n_ = 0;
  std::vector<double> a_;
};

struct EigenPair {
  double value = 0.0;
  Vector vector;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);

/// (v, Av) / (v, v). Throws SingularityError for the zero vector.
double rayleigh_quotient(const SymmetricMatrix& a, std::span<const double> v);

inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi diagonalization; sweeps until the off-diagonal Frobenius
/// mass drops below `tol`. Pairs come back ascending with unit eigenvectors.
/// Throws ConvergenceError after `max_sweeps`.
std::vector<EigenPair> jacobi_eigen(const SymmetricMatrix& a, double tol,
                                    int max_sweeps = kJacobiMaxSweeps);
/// Same, with tol = 1e-14 * max(1, ||A||_F).
std::vector<EigenPair> jacobi_eigen(const SymmetricMatrix& a);

struct SpectralBounds {
  double lo;
  double hi;
  double spread() const { return hi - lo; }
};

/// Gershgorin interval containing every eigenvalue.
SpectralBounds gershgorin_bounds(const SymmetricMatrix& a);

/// sum_i |v_i - v_ref_i| after normalizing both to unit 2-norm and choosing
/// the sign of v that minimizes the sum. Throws ArgumentError if v_ref is zero
/// or the lengths differ.
double residual_norm(std::span<const double> v, std::span<const double> v_ref);

}  // namespace qaesolve
