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

#include <complex>
#include <vector>

#include "sicl/kernels/kernels.hpp"
#include "sicl/overlap.hpp"
#include "support.hpp"

using namespace sicl;

namespace {

std::vector<kernels::cplx> random_array(std::size_t n, std::uint64_t seed) {
  const CVector v = test::random_gaussian(static_cast<long long>(n), 1, seed).col(0);
  return {v.data(), v.data() + v.size()};
}

}  // namespace

TEST_CASE("every available kernel matches the scalar kernel") {
  const auto& ref = kernels::scalar_table();
  for (const auto* t : kernels::available_tables()) {
    CAPTURE(t->name);
    for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 8u, 15u, 64u, 225u}) {
      CAPTURE(n);
      const auto a = random_array(n, 2 * n + 1), b = random_array(n, 2 * n + 2);
      const double scale = static_cast<double>(n) + 1.0;
      CHECK(std::abs(t->dot(a.data(), b.data(), n) - ref.dot(a.data(), b.data(), n)) < 1e-13 * scale);
      CHECK(std::abs(t->dotc(a.data(), b.data(), n) - ref.dotc(a.data(), b.data(), n)) < 1e-13 * scale);
      CHECK(std::abs(t->norm2(a.data(), n) - ref.norm2(a.data(), n)) < 1e-13 * scale);
      std::vector<kernels::cplx> o1(n), o2(n);
      t->conj_mul(a.data(), b.data(), o1.data(), n);
      ref.conj_mul(a.data(), b.data(), o2.data(), n);
      for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(o1[k] - o2[k]) < 1e-14);
    }
  }
}

TEST_CASE("scalar kernel agrees with a direct sum") {
  const auto a = random_array(9, 1), b = random_array(9, 2);
  kernels::cplx dot = 0.0, dotc = 0.0;
  double n2 = 0.0;
  for (std::size_t k = 0; k < 9; ++k) {
    dot += a[k] * b[k];
    dotc += std::conj(a[k]) * b[k];
    n2 += std::norm(a[k]);
  }
  const auto& s = kernels::scalar_table();
  CHECK(std::abs(s.dot(a.data(), b.data(), 9) - dot) < 1e-14);
  CHECK(std::abs(s.dotc(a.data(), b.data(), 9) - dotc) < 1e-14);
  CHECK(std::abs(s.norm2(a.data(), 9) - n2) < 1e-14);
}

TEST_CASE("kernel dispatch") {
  const auto tables = kernels::available_tables();
  REQUIRE(!tables.empty());
  CHECK(tables.front()->name == "scalar");
  const std::string_view original = kernels::active().name;
  CHECK(kernels::force("scalar"));
  CHECK(kernels::active().name == "scalar");
  CHECK_FALSE(kernels::force("no-such-kernel"));
  CHECK(kernels::force(original));
}

TEST_CASE("overlap engine is kernel independent") {
  const CVector v = test::random_unit(15, 77);
  const OverlapEngine ref(15, &kernels::scalar_table());
  const auto t0 = ref.table(v);
  for (const auto* t : kernels::available_tables()) {
    CAPTURE(t->name);
    const OverlapEngine e(15, t);
    const auto t1 = e.table(v);
    for (std::size_t k = 0; k < t0.size(); ++k) CHECK(std::abs(t0[k] - t1[k]) < 1e-13);
    CHECK(std::abs(e.defect(v.data()) - ref.defect(v.data())) < 1e-13);
  }
}
