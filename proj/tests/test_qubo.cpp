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
#include <numeric>

#include "doctest.h"
#include "qaesolve/checks.hpp"
#include "qaesolve/errors.hpp"
#include "qaesolve/qubo.hpp"

using namespace qaesolve;

namespace {

// Q_00 = -1, Q_11 = -1, Q_10 = 3
QuboProblem two_var() {
  const Term c[] = {{1, 0, 3.0}};
  return QuboProblem(2, {-1.0, -1.0}, c);
}

Bits random_bits(std::size_t n, Rng& rng) { return rng.bits(n); }

}  // namespace

TEST_CASE("energy of the all-zero assignment is the offset") {
  Rng rng(1);
  const auto q = checks::random_qubo(7, 0.5, rng);
  CHECK(energy(q, Bits(7, 0)) == 0.0);
  CHECK(energy(q.with_offset(2.5), Bits(7, 0)) == 2.5);
}

TEST_CASE("energy by substitution and brute force") {
  const auto q = two_var();
  CHECK(energy(q, Bits{1, 1}) == 1.0);
  CHECK(energy(q, Bits{1, 0}) == -1.0);
  CHECK(energy(q, Bits{0, 1}) == -1.0);

  double best = 1e9;
  std::vector<Bits> argmin;
  for (unsigned m = 0; m < 4; ++m) {
    const Bits b{static_cast<std::uint8_t>(m & 1), static_cast<std::uint8_t>(m >> 1)};
    const double e = checks::naive_energy(q, b);
    if (e < best) {
      best = e;
      argmin = {b};
    } else if (e == best) {
      argmin.push_back(b);
    }
  }
  CHECK(best == -1.0);
  CHECK(argmin.size() == 2);
}

TEST_CASE("energy rejects a length mismatch") {
  CHECK_THROWS_AS(energy(two_var(), Bits{1}), ArgumentError);
  CHECK_THROWS_AS(BinarySolution(two_var(), Bits{1, 0, 1}), ArgumentError);
}

TEST_CASE("construction folds mirrored and duplicate couplers") {
  const Term terms[] = {{0, 1, 1.5}, {1, 0, 0.5}, {2, 1, -1.0}, {2, 1, -1.0},
                        {2, 2, 4.0}};
  const QuboProblem q(3, {0.0, 1.0, 0.0}, terms);
  REQUIRE(q.couplers().size() == 2);
  CHECK(q.couplers()[0].row == 1);
  CHECK(q.couplers()[0].col == 0);
  CHECK(q.couplers()[0].value == 2.0);
  CHECK(q.couplers()[1].value == -2.0);
  CHECK(q.linear(2) == 4.0);
  CHECK(q.coupling(0, 1) == 2.0);
  CHECK(q.coupling(1, 0) == 2.0);
  CHECK(q.coupling(0, 2) == 0.0);
  CHECK(q.degree(1) == 2);
}

TEST_CASE("construction rejects bad input") {
  const Term out_of_range[] = {{0, 5, 1.0}};
  CHECK_THROWS_AS(QuboProblem(2, {0.0, 0.0}, out_of_range), ArgumentError);
  CHECK_THROWS_AS(QuboProblem(0, {}, {}), ArgumentError);
  const Term nan[] = {{0, 1, std::nan("")}};
  CHECK_THROWS_AS(QuboProblem(2, {0.0, 0.0}, nan), ArgumentError);
  CHECK_THROWS_AS(QuboProblem(2, {0.0}, {}), ArgumentError);
}

TEST_CASE("flip_delta examples") {
  const QuboProblem one(1, {-2.0}, {});
  CHECK(flip_delta(one, BinarySolution(one, Bits{0}), 0) == -2.0);

  const auto q = two_var();
  CHECK(flip_delta(q, BinarySolution(q, Bits{1, 0}), 1) == 2.0);
  CHECK_THROWS_AS(flip_delta(q, BinarySolution(q, Bits{1, 0}), 2),
                  ArgumentError);
}

TEST_CASE("flip_delta matches re-evaluation on random problems") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(100 + s);
    const std::size_t n = 1 + rng.below(20);
    const auto q = checks::random_qubo(n, 0.6, rng, -3.0, 3.0);
    const BinarySolution x(q, random_bits(n, rng));
    for (std::size_t i = 0; i < n; ++i) {
      Bits flipped = x.bits();
      flipped[i] ^= 1U;
      CHECK(std::fabs(checks::naive_energy(q, flipped) - x.energy() -
                      flip_delta(q, x, i)) <= 1e-12);
    }
  }
}

TEST_CASE("apply_flip") {
  const auto q = two_var();
  const BinarySolution x(q, Bits{1, 0});
  const auto y = apply_flip(x, q, 1);
  CHECK(y.bits() == Bits{1, 1});
  CHECK(y.energy() == 1.0);
  CHECK(apply_flip(y, q, 1) == x);
  CHECK_THROWS_AS(apply_flip(x, q, 7), ArgumentError);

  Rng rng(12);
  const auto big = checks::random_qubo(12, 0.7, rng);
  BinarySolution z(big, random_bits(12, rng));
  for (int step = 0; step < 100; ++step) {
    z = apply_flip(std::move(z), big, rng.below(12));
    REQUIRE(std::fabs(z.energy() - checks::naive_energy(big, z.bits())) <=
            1e-12);
  }
}

TEST_CASE("FlipState keeps fields consistent") {
  Rng rng(5);
  const auto q = checks::random_qubo(15, 0.5, rng);
  FlipState st(q, random_bits(15, rng));
  for (int step = 0; step < 500; ++step) {
    const auto i = rng.below(15);
    const BinarySolution before(q, st.bits());
    CHECK(std::fabs(static_cast<double>(st.delta(i)) -
                    flip_delta(q, before, i)) <= 1e-12);
    st.flip(i);
  }
  CHECK(std::fabs(static_cast<double>(st.energy()) -
                  energy(q, st.bits())) <= 1e-12);
}

TEST_CASE("energy is covariant under relabeling") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(200 + s);
    const std::size_t n = 2 + rng.below(12);
    // Dyadic coefficients keep every partial sum exact.
    std::vector<double> diag(n);
    for (auto& d : diag) d = static_cast<double>(rng.below(17)) / 8.0 - 1.0;
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (rng.uniform() < 0.5)
          terms.push_back({i, j, static_cast<double>(rng.below(33)) / 16.0 - 1.0});
    const QuboProblem q(n, diag, terms);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<double> pdiag(n);
    for (std::size_t i = 0; i < n; ++i) pdiag[perm[i]] = diag[i];
    std::vector<Term> pterms;
    for (const auto& t : terms) pterms.push_back({perm[t.i], perm[t.j], t.value});
    const QuboProblem p(n, pdiag, pterms);

    const Bits x = rng.bits(n);
    Bits px(n);
    for (std::size_t i = 0; i < n; ++i) px[perm[i]] = x[i];
    CHECK(energy(q, x) == energy(p, px));
  }
}

TEST_CASE("offset does not move the argmin") {
  Rng rng(77);
  const auto q = checks::random_qubo(8, 0.5, rng);
  const auto a = checks::naive_minimum(q);
  const auto b = checks::naive_minimum(q.with_offset(-13.25));
  CHECK(a.bits == b.bits);
  CHECK(b.energy == doctest::Approx(a.energy - 13.25).epsilon(1e-14));
}
