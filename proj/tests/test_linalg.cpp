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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qaesolve/checks.hpp"
#include "qaesolve/errors.hpp"
#include "qaesolve/linalg.hpp"

#ifdef QAESOLVE_HAVE_EIGEN
#include <Eigen/Dense>
#endif

using namespace qaesolve;

namespace {

Vector random_unit(std::size_t n, Rng& rng) {
  Vector v(n);
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  const double nv = norm2(v);
  for (auto& x : v) x /= nv;
  return v;
}

}  // namespace

TEST_CASE("SymmetricMatrix validation") {
  CHECK_THROWS_AS(SymmetricMatrix(2, {1.0, 2.0, 3.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(SymmetricMatrix(2, {1.0, 2.0, 2.0}), ValidationError);
  CHECK_THROWS_AS(SymmetricMatrix(0, {}), ValidationError);
  CHECK_THROWS_AS(SymmetricMatrix(1, {INFINITY}), ValidationError);
  const SymmetricMatrix a(2, {1.0, 2.0, 2.0 + 1e-12, 1.0});
  CHECK(a(0, 1) == a(1, 0));
}

TEST_CASE("rayleigh_quotient") {
  const double d[] = {5.0, 7.0};
  const auto a = SymmetricMatrix::diagonal(d);
  CHECK(rayleigh_quotient(a, Vector{1.0, 0.0}) == 5.0);
  CHECK_THROWS_AS(rayleigh_quotient(a, Vector{0.0, 0.0}), SingularityError);

  Rng rng(11);
  const auto b = checks::random_symmetric(5, rng);
  const auto v = random_unit(5, rng);
  for (double c : {-3.0, 0.5, 1e3}) {
    Vector w = v;
    for (auto& x : w) x *= c;
    CHECK(rayleigh_quotient(b, w) ==
          doctest::Approx(rayleigh_quotient(b, v)).epsilon(1e-13));
  }
}

TEST_CASE("Rayleigh quotient is bounded below by the smallest eigenvalue") {
  Rng rng(12);
  const auto a = checks::random_symmetric(6, rng);
  const double lmin = jacobi_eigen(a).front().value;
  double lowest = INFINITY;
  for (int t = 0; t < 10000; ++t)
    lowest = std::min(lowest, rayleigh_quotient(a, random_unit(6, rng)));
  CHECK(lowest >= lmin - 1e-9);
}

TEST_CASE("jacobi_eigen small cases") {
  const double d[] = {3.0, 1.0, 2.0};
  const auto pairs = jacobi_eigen(SymmetricMatrix::diagonal(d));
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].value == 1.0);
  CHECK(pairs[1].value == 2.0);
  CHECK(pairs[2].value == 3.0);
  CHECK(std::fabs(pairs[0].vector[1]) == 1.0);
  CHECK(std::fabs(pairs[1].vector[2]) == 1.0);
  CHECK(std::fabs(pairs[2].vector[0]) == 1.0);

  const auto flip = jacobi_eigen(SymmetricMatrix(2, {0.0, 1.0, 1.0, 0.0}));
  CHECK(flip[0].value == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(flip[1].value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("jacobi_eigen reconstruction, residuals and orthonormality") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(1300 + s);
    const std::size_t n = 2 + rng.below(9);
    const auto a = checks::random_symmetric(n, rng, -2.0, 2.0);
    const auto pairs = jacobi_eigen(a);
    const double fro = a.frobenius_norm();

    double recon = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s2 = 0.0;
        for (const auto& p : pairs) s2 += p.value * p.vector[i] * p.vector[j];
        recon += (s2 - a(i, j)) * (s2 - a(i, j));
      }
    CHECK(std::sqrt(recon) <= 1e-8);

    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& p = pairs[k];
      sum += p.value;
      const auto av = a.multiply(p.vector);
      Vector r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = av[i] - p.value * p.vector[i];
      CHECK(norm2(r) <= 1e-8 * fro);
      for (std::size_t l = 0; l < n; ++l)
        CHECK(std::fabs(dot(p.vector, pairs[l].vector) - (k == l ? 1.0 : 0.0)) <=
              1e-8);
      if (k > 0) CHECK(pairs[k - 1].value <= p.value);
    }
    CHECK(std::fabs(sum - a.trace()) <= 1e-8 * fro);
  }
}

TEST_CASE("jacobi eigenvalues are invariant under symmetric permutation") {
  Rng rng(1400);
  const std::size_t n = 7;
  const auto a = checks::random_symmetric(n, rng);
  std::vector<std::size_t> perm{3, 0, 6, 1, 5, 2, 4};
  std::vector<double> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[perm[i] * n + perm[j]] = a(i, j);
  const auto x = jacobi_eigen(a);
  const auto y = jacobi_eigen(SymmetricMatrix(n, e));
  for (std::size_t k = 0; k < n; ++k)
    CHECK(std::fabs(x[k].value - y[k].value) <= 1e-8);
}

#ifdef QAESOLVE_HAVE_EIGEN
TEST_CASE("jacobi_eigen agrees with Eigen's SelfAdjointEigenSolver") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    Rng rng(1500 + s);
    const std::size_t n = 3 + 5 * s;
    const auto a = checks::random_symmetric(n, rng);
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    const auto pairs = jacobi_eigen(a);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(std::fabs(pairs[k].value - es.eigenvalues()(k)) <= 1e-10);
  }
}
#endif

TEST_CASE("jacobi_eigen errors") {
  const SymmetricMatrix a(2, {0.0, 1.0, 1.0, 0.0});
  CHECK_THROWS_AS(jacobi_eigen(a, 0.0), ArgumentError);
  CHECK_THROWS_AS(jacobi_eigen(a, 1e-12, 0), ConvergenceError);
}

TEST_CASE("gershgorin_bounds") {
  const double d[] = {1.0, 2.0, 3.0};
  const auto b = gershgorin_bounds(SymmetricMatrix::diagonal(d));
  CHECK(b.lo == 1.0);
  CHECK(b.hi == 3.0);
  const auto c = gershgorin_bounds(SymmetricMatrix(2, {0.0, 1.0, 1.0, 0.0}));
  CHECK(c.lo == -1.0);
  CHECK(c.hi == 1.0);

  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(1600 + s);
    const auto a = checks::random_symmetric(1 + rng.below(10), rng);
    const auto g = gershgorin_bounds(a);
    const auto pairs = jacobi_eigen(a);
    CHECK(g.lo <= pairs.front().value);
    CHECK(pairs.back().value <= g.hi);
  }
}

TEST_CASE("residual_norm") {
  const Vector v{0.6, -0.8, 0.0};
  Vector neg = v;
  for (auto& x : neg) x = -x;
  CHECK(residual_norm(v, v) == 0.0);
  CHECK(residual_norm(neg, v) == 0.0);
  CHECK(residual_norm(Vector{3.0, -4.0, 0.0}, v) <= 1e-15);
  CHECK(residual_norm(Vector{1.0, 0.0}, Vector{0.0, 1.0}) == 2.0);
  CHECK_THROWS_AS(residual_norm(v, Vector{0.0, 0.0, 0.0}), ArgumentError);
  CHECK_THROWS_AS(residual_norm(v, Vector{1.0}), ArgumentError);

  Rng rng(1700);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_unit(5, rng);
    const auto b = random_unit(5, rng);
    CHECK(residual_norm(a, b) == doctest::Approx(residual_norm(b, a)));
    CHECK(residual_norm(a, b) > 0.0);
  }
}
