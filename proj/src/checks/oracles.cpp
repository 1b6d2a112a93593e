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

#include <cmath>

#include "qaesolve/checks.hpp"

namespace qaesolve::checks {

double naive_energy(const QuboProblem& q, BitsView bits) {
  const std::size_t n = q.num_vars();
  long double e = q.offset();
  for (std::size_t i = 0; i < n; ++i) {
    if (!bits[i]) continue;
    e += q.linear(i);
    for (std::size_t j = 0; j < i; ++j)
      if (bits[j]) e += q.coupling(i, j);
  }
  return static_cast<double>(e);
}

NaiveMinimum naive_minimum(const QuboProblem& q) {
  const std::size_t n = q.num_vars();
  NaiveMinimum best{0.0, {}};
  Bits bits(n, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t v = 0; v < n; ++v) bits[v] = (mask >> (n - 1 - v)) & 1U;
    const double e = naive_energy(q, bits);
    const double tol = 1e-12 * std::max(1.0, std::fabs(best.energy));
    if (best.bits.empty() || e < best.energy - tol) best = {e, bits};
  }
  return best;
}

Vector naive_decode(BitsView bits, int k_bits, std::size_t n) {
  const auto k = static_cast<std::size_t>(k_bits);
  Vector v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = bits[i * k + k - 1] ? -1.0 : 0.0;
    for (std::size_t b = 0; b + 1 < k; ++b)
      if (bits[i * k + b])
        s += std::pow(2.0, static_cast<double>(b) - static_cast<double>(k - 1));
    v[i] = s;
  }
  return v;
}

double naive_objective(const SymmetricMatrix& a, double lambda,
                       std::span<const double> v) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j)
      s += static_cast<long double>(a(i, j)) * v[i] * v[j];
    s += static_cast<long double>(lambda) * v[i] * v[i];
  }
  return static_cast<double>(s);
}

QuboProblem random_qubo(std::size_t n, double density, Rng& rng, double lo,
                        double hi) {
  std::vector<double> diag(n);
  for (auto& d : diag) d = rng.uniform(lo, hi);
  std::vector<Term> couplers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (rng.uniform() < density) couplers.push_back({i, j, rng.uniform(lo, hi)});
  return QuboProblem(n, std::move(diag), couplers);
}

SymmetricMatrix random_symmetric(std::size_t n, Rng& rng, double lo,
                                 double hi) {
  std::vector<double> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      e[i * n + j] = e[j * n + i] = rng.uniform(lo, hi);
  return {n, std::move(e)};
}

}  // namespace qaesolve::checks
