// Copyright 2026 The sicladder Authors
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

#include <doctest.h>

#include <cmath>
#include <array>
#include <numbers>
#include <set>

#include "sicl/error.hpp"
#include "sicl/heisenberg.hpp"
#include "support.hpp"

using namespace sicl;

TEST_CASE("displacement basics") {
  CHECK(max_abs(displacement(3, {0, 0}) - CMatrix::Identity(3, 3)) < 1e-15);
  const CMatrix x = displacement(3, {1, 0});
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) CHECK(std::abs(x(r, s) - (r == (s + 1) % 3 ? 1.0 : 0.0)) < 1e-15);
  const cplx tau = -std::polar(1.0, std::numbers::pi / 5.0);
  CHECK(std::abs(displacement(5, {2, 3})(2, 0) - std::pow(tau, 6.0)) < 1e-14);
}

TEST_CASE("displacement matches tau^{ij} X^i Z^j") {
  for (long long d : {3, 5, 7, 9, 15})
    for (long long i = 0; i < d; ++i)
      for (long long j = 0; j < d; ++j) {
        CAPTURE(d);
        CAPTURE(i);
        CAPTURE(j);
        REQUIRE(max_abs(displacement(d, {i, j}) - test::displacement_oracle(d, i, j)) < 1e-12);
      }
}

TEST_CASE("apply_displacement agrees with the dense operator") {
  const PhaseConstants pc(9);
  const CVector v = test::random_unit(9, 4);
  for (long long i = 0; i < 9; ++i)
    for (long long j = 0; j < 9; ++j) CHECK((apply_displacement(pc, {i, j}, v) - displacement(9, {i, j}) * v).norm() < 1e-13);
}

TEST_CASE("tau has order d and squares to omega") {
  for (long long d : {3, 5, 7, 9, 13, 15}) {
    const PhaseConstants pc(d);
    CHECK(std::abs(pc.tau_pow(d) - 1.0) < 1e-14);
    CHECK(std::abs(pc.tau * pc.tau - pc.omega) < 1e-14);
    CHECK(std::abs(pc.tau_pow(-1) * pc.tau - 1.0) < 1e-14);
  }
}

TEST_CASE("odd dimensions only") {
  CHECK_THROWS_AS(require_odd_dimension(4), Error);
  CHECK_THROWS_AS(require_odd_dimension(1), Error);
  CHECK_NOTHROW(require_odd_dimension(3));
}

TEST_CASE("Weyl relations hold exhaustively") {
  for (long long d : {3, 5, 7, 9, 15}) {
    CAPTURE(d);
    const WeylCheck w = weyl_commutation_check(d, 1e-10);
    CHECK(w.ok);
    CHECK(w.form_sign == 1);
    CHECK(w.max_error < 1e-10);
  }
}

TEST_CASE("Weyl commutator against dense matrices") {
  const long long d = 5;
  const cplx omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
  for (DispIndex p : {DispIndex{1, 2}, DispIndex{3, 0}, DispIndex{4, 4}})
    for (DispIndex q : {DispIndex{0, 1}, DispIndex{2, 3}}) {
      const CMatrix dp = test::displacement_oracle(d, p.i, p.j), dq = test::displacement_oracle(d, q.i, q.j);
      const CMatrix c = dp * dq * dp.adjoint() * dq.adjoint();
      const cplx expect = std::pow(omega, static_cast<double>(mod(p.j * q.i - p.i * q.j, d)));
      CHECK(max_abs(c - expect * CMatrix::Identity(d, d)) < 1e-12);
    }
}

TEST_CASE("CRT permutation") {
  CHECK(max_abs(crt_permutation(1, 5) - CMatrix::Identity(5, 5)) < 1e-15);
  const CMatrix v = crt_permutation(3, 5);
  CHECK(max_abs(v * v.adjoint() - CMatrix::Identity(15, 15)) < 1e-15);
  for (int r = 0; r < 15; ++r) CHECK(v(5 * (r % 3) + r % 5, r) == cplx(1.0));
}

TEST_CASE("CRT split of displacement operators at 15 = 3 * 5") {
  const CMatrix v = crt_permutation(3, 5);
  CHECK(crt_split_index({0, 0}, 3, 5) == std::pair<DispIndex, DispIndex>{{0, 0}, {0, 0}});
  const auto [a, b] = crt_split_index({3, 5}, 3, 5);
  CHECK(a.i == 0);
  CHECK(b.i == 3);
  double worst = 0.0;
  for (long long i = 0; i < 15; ++i)
    for (long long j = 0; j < 15; ++j) {
      const auto [p1, p2] = crt_split_index({i, j}, 3, 5);
      const CrtSplit brute = crt_split_index_bruteforce({i, j}, 3, 5);
      CHECK(brute.first == p1);
      CHECK(brute.second == p2);
      CHECK(std::abs(brute.phase - 1.0) < 1e-12);
      const CMatrix lhs = v * test::displacement_oracle(15, i, j) * v.adjoint();
      const CMatrix rhs = kron(test::displacement_oracle(3, p1.i, p1.j), test::displacement_oracle(5, p2.i, p2.j));
      worst = std::max(worst, max_abs(lhs - rhs));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("CRT split index for 35 and 63") {
  for (auto [n1, n2] : {std::pair{5LL, 7LL}, std::pair{7LL, 9LL}}) {
    const CMatrix v = crt_permutation(n1, n2);
    const long long n = n1 * n2;
    for (DispIndex p : {DispIndex{1, 1}, DispIndex{n - 1, 2}, DispIndex{n1, n2}}) {
      const auto [p1, p2] = crt_split_index(p, n1, n2);
      const CMatrix lhs = v * displacement(n, p) * v.adjoint();
      CHECK(max_abs(lhs - kron(displacement(n1, p1), displacement(n2, p2))) < 1e-10);
    }
  }
}

TEST_CASE("displacement operators are unitary") {
  for (long long d : {3, 5, 7, 9, 13, 15})
    for (long long i = 0; i < d; ++i)
      for (long long j = 0; j < d; ++j) REQUIRE(unitarity_defect(displacement(d, {i, j})) <= 1e-12);
}

TEST_CASE("displacements form a unitary operator basis") {
  for (long long d : {3, 5, 7}) {
    const CMatrix a = test::random_gaussian(d, d, 50 + d);
    CMatrix s = CMatrix::Zero(d, d);
    for (long long i = 0; i < d; ++i)
      for (long long j = 0; j < d; ++j) {
        const CMatrix dp = displacement(d, {i, j});
        s += dp * a * dp.adjoint();
      }
    CHECK(max_abs(s - static_cast<double>(d) * a.trace() * CMatrix::Identity(d, d)) <= 1e-10);
  }
}

TEST_CASE("CRT index split is a bijection at 15") {
  std::set<std::array<long long, 4>> seen;
  for (long long i = 0; i < 15; ++i)
    for (long long j = 0; j < 15; ++j) {
      const auto [a, b] = crt_split_index({i, j}, 3, 5);
      seen.insert({a.i, a.j, b.i, b.j});
    }
  CHECK(seen.size() == 225);
}
