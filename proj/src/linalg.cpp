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

#include "qaesolve/linalg.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numeric>
#include <string>

#include "qaesolve/errors.hpp"

namespace qaesolve {

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), a_(std::move(entries)) {
  if (n_ == 0) throw ValidationError("matrix dimension must be at least 1");
  if (a_.size() != n_ * n_)
    throw ValidationError("expected " + std::to_string(n_ * n_) +
                          " entries, got " + std::to_string(a_.size()));
  for (double v : a_)
    if (!std::isfinite(v)) throw ValidationError("non-finite matrix entry");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double aij = a_[i * n_ + j];
      const double aji = a_[j * n_ + i];
      const double scale = std::max({1.0, std::fabs(aij), std::fabs(aji)});
      if (std::fabs(aij - aji) > 1e-10 * scale)
        throw ValidationError("matrix is not symmetric at (" +
                              std::to_string(i) + ", " + std::to_string(j) +
                              ")");
      const double mean = aij == aji ? aij : 0.5 * (aij + aji);
      a_[i * n_ + j] = mean;
      a_[j * n_ + i] = mean;
    }
  }
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return {n, std::move(e)};
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d) {
  const std::size_t n = d.size();
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = d[i];
  return {n, std::move(e)};
}

Vector SymmetricMatrix::multiply(std::span<const double> v) const {
  if (v.size() != n_)
    throw ArgumentError("vector length " + std::to_string(v.size()) +
                        " does not match matrix size " + std::to_string(n_));
  Vector out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    long double s = 0.0L;
    for (std::size_t j = 0; j < n_; ++j)
      s += static_cast<long double>(a_[i * n_ + j]) * v[j];
    out[i] = static_cast<double>(s);
  }
  return out;
}

double SymmetricMatrix::trace() const {
  long double t = 0.0L;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return static_cast<double>(t);
}

double SymmetricMatrix::frobenius_norm() const {
  long double s = 0.0L;
  for (double v : a_) s += static_cast<long double>(v) * v;
  return static_cast<double>(std::sqrt(s));
}

SymmetricMatrix SymmetricMatrix::scaled(double c) const {
  SymmetricMatrix out = *this;
  for (double& v : out.a_) v *= c;
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("dot: length mismatch");
  long double s = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += static_cast<long double>(a[i]) * b[i];
  return static_cast<double>(s);
}

double norm2(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double rayleigh_quotient(const SymmetricMatrix& a, std::span<const double> v) {
  const Vector av = a.multiply(v);
  const double vv = dot(v, v);
  if (vv == 0.0)
    throw SingularityError("Rayleigh quotient of the zero vector");
  return dot(v, av) / vv;
}

std::vector<EigenPair> jacobi_eigen(const SymmetricMatrix& a) {
  return jacobi_eigen(a, 1e-14 * std::max(1.0, a.frobenius_norm()));
}

std::vector<EigenPair> jacobi_eigen(const SymmetricMatrix& a, double tol,
                                    int max_sweeps) {
  if (!(tol > 0.0)) throw ArgumentError("Jacobi tolerance must be positive");
  const std::size_t n = a.size();
  std::vector<double> m = a.entries();
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto off_norm = [&] {
    long double s = 0.0L;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += static_cast<long double>(m[i * n + j]) * m[i * n + j];
    return static_cast<double>(std::sqrt(s));
  };

  int sweep = 0;
  while (off_norm() >= tol) {
    if (sweep++ >= max_sweeps)
      throw ConvergenceError("Jacobi did not converge in " +
                             std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m[p * n + q];
        if (apq == 0.0) continue;
        const double app = m[p * n + p];
        const double aqq = m[q * n + q];
        // Rotation angle that zeroes (p, q); t is the smaller root.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m[k * n + p];
          const double mkq = m[k * n + q];
          m[k * n + p] = c * mkp - s * mkq;
          m[k * n + q] = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m[p * n + k];
          const double mqk = m[q * n + k];
          m[p * n + k] = c * mpk - s * mqk;
          m[q * n + k] = s * mpk + c * mqk;
        }
        m[p * n + q] = 0.0;
        m[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<EigenPair> pairs(n);
  for (std::size_t j = 0; j < n; ++j) {
    pairs[j].value = m[j * n + j];
    pairs[j].vector.resize(n);
    for (std::size_t k = 0; k < n; ++k) pairs[j].vector[k] = v[k * n + j];
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const EigenPair& x, const EigenPair& y) {
                     return x.value < y.value;
                   });
  return pairs;
}

SpectralBounds gershgorin_bounds(const SymmetricMatrix& a) {
  const std::size_t n = a.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    long double radius = 0.0L;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) radius += std::fabs(a(i, j));
    lo = std::min(lo, static_cast<double>(a(i, i) - radius));
    hi = std::max(hi, static_cast<double>(a(i, i) + radius));
  }
  return {lo, hi};
}

double residual_norm(std::span<const double> v,
                     std::span<const double> v_ref) {
  if (v.size() != v_ref.size())
    throw ArgumentError("residual_norm: length mismatch");
  const double ref_norm = norm2(v_ref);
  if (ref_norm == 0.0)
    throw ArgumentError("residual_norm: reference vector is zero");
  const double v_norm = norm2(v);
  if (v_norm == 0.0)
    throw ArgumentError("residual_norm: vector is zero");
  long double plus = 0.0L;
  long double minus = 0.0L;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double r = v_ref[i] / ref_norm;
    const double x = v[i] / v_norm;
    plus += std::fabs(x - r);
    minus += std::fabs(-x - r);
  }
  return static_cast<double>(std::min(plus, minus));
}

}  // namespace qaesolve
