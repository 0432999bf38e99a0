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

#include "sicl/error.hpp"
#include "sicl/frames.hpp"
#include "sicl/heisenberg.hpp"
#include "sicl/ladder.hpp"
#include "sicl/sic.hpp"
#include "support.hpp"

using namespace sicl;

namespace {

CVector basis(long long d, long long k) {
  CVector e = CVector::Zero(d);
  e(k) = 1.0;
  return e;
}

double max_offdiag_overlap_sq(const CMatrix& g) {
  CMatrix n = g;
  for (long long c = 0; c < n.cols(); ++c) n.col(c) /= n.col(c).norm();
  const CMatrix gram = n.adjoint() * n;
  double lo = 1e300, hi = 0.0;
  for (long long a = 0; a < gram.rows(); ++a)
    for (long long b = 0; b < gram.cols(); ++b)
      if (a != b) {
        lo = std::min(lo, std::norm(gram(a, b)));
        hi = std::max(hi, std::norm(gram(a, b)));
      }
  return hi - lo;
}

}  // namespace

TEST_CASE("orthonormal basis is a trivial ETF") {
  FrameSpec f{3, 3, CMatrix::Identity(3, 3), std::nullopt, true};
  const EtfCertificate c = check_tight(f);
  CHECK(c.is_tight);
  CHECK(std::abs(c.tight_constant - 1.0) < 1e-15);
  CHECK(c.is_equiangular);
  CHECK(std::abs(c.common_overlap_sq) < 1e-15);
}

TEST_CASE("Weyl orbits are tight; SIC orbits are also equiangular") {
  const EtfCertificate sic = check_tight(FrameSpec{5, 25, columns_to_matrix(weyl_orbit(test::sic5().vector)), std::nullopt, true});
  CHECK(sic.is_tight);
  CHECK(std::abs(sic.tight_constant - 5.0) < 1e-10);
  CHECK(sic.is_equiangular);
  CHECK(std::abs(sic.common_overlap_sq - 1.0 / 6.0) < 1e-15);
  const EtfCertificate rnd = check_tight(FrameSpec{5, 25, columns_to_matrix(weyl_orbit(test::random_unit(5, 8))), std::nullopt, true});
  CHECK(rnd.is_tight);
  CHECK_FALSE(rnd.is_equiangular);
}

TEST_CASE("covariant generator") {
  SUBCASE("single basis vector in d = 3") {
    const FrameSpec f = covariant_generator({basis(3, 0)}, 3);
    CHECK(f.ambient_dim == 3);
    CHECK(f.n_vectors == 9);
    for (long long c = 0; c < 9; ++c) {
      int nonzero = 0;
      for (long long r = 0; r < 3; ++r) nonzero += std::abs(f.generator(r, c)) > 1e-12;
      CHECK(nonzero == 1);
    }
  }
  SUBCASE("orthonormal blocks give a tight frame") {
    const SymLiftBlocks lift = lift_fiducial(test::sic5());
    REQUIRE(lift.blocks.size() == 3);
    const FrameSpec f = covariant_generator(lift.blocks, 5);
    CHECK(f.ambient_dim == 15);
    CHECK(check_tight(f).is_tight);
    CHECK(test::frame_tightness_oracle(f.generator) < 1e-10);
  }
  SUBCASE("repeated blocks are not tight") {
    const FrameSpec f = covariant_generator({basis(5, 0), basis(5, 0)}, 5);
    CHECK_FALSE(check_tight(f).is_tight);
  }
}

TEST_CASE("Naimark complement") {
  SUBCASE("d = 3 with two basis vectors") {
    const NaimarkComplement n = naimark_complement({basis(3, 0), basis(3, 1)}, 3);
    REQUIRE(n.completion.size() == 1);
    CHECK(std::abs(std::abs(n.completion[0](2)) - 1.0) < 1e-12);
    CHECK(n.frame.ambient_dim == 3);
    CHECK(check_tight(n.frame).is_tight);
    CHECK(n.unitarity_defect < 1e-12);
  }
  SUBCASE("SIC-5 lift gives a (10, 25) ETF") {
    const SymLiftBlocks lift = lift_fiducial(test::sic5());
    const NaimarkComplement n = naimark_complement(lift.blocks, 5);
    CHECK(n.frame.ambient_dim == 10);
    CHECK(n.frame.n_vectors == 25);
    const EtfCertificate c = check_tight(n.frame);
    CHECK(c.is_tight);
    CHECK(c.is_equiangular);
    CHECK(std::abs(c.common_overlap_sq - 15.0 / 240.0) < 1e-15);
    CHECK(max_offdiag_overlap_sq(n.frame.generator) < 1e-10);
    CHECK(n.unitarity_defect < 1e-10);
  }
  SUBCASE("completion freedom is a block unitary") {
    const SymLiftBlocks lift = lift_fiducial(test::sic5());
    const NaimarkComplement a = naimark_complement(lift.blocks, 5);
    const CMatrix w = test::random_unitary(2, 31);
    const CMatrix y = columns_to_matrix(a.completion) * w;
    const NaimarkComplement b = naimark_complement(lift.blocks, 5, std::vector<CVector>{y.col(0), y.col(1)});
    CHECK(check_tight(b.frame).is_tight);
    CHECK(check_tight(b.frame).is_equiangular);
    const CMatrix ga = a.frame.generator.adjoint() * a.frame.generator;
    const CMatrix gb = b.frame.generator.adjoint() * b.frame.generator;
    CHECK(max_abs(ga - gb) < 1e-12);
  }
  SUBCASE("bad completion is rejected") {
    CHECK_THROWS_AS(naimark_complement({basis(3, 0)}, 3, std::vector<CVector>{basis(3, 0), basis(3, 1)}), Error);
    CHECK_THROWS_AS(naimark_complement({basis(3, 0), basis(3, 0)}, 3), Error);
  }
}

TEST_CASE("Grassmannian equidistance") {
  const CMatrix q = orthonormal_span(test::random_gaussian(4, 2, 1));
  const auto [same, d0] = grassmann_equidistance({q, q});
  CHECK(same);
  CHECK(d0 < 1e-12);
  const CMatrix r = orthonormal_span(test::random_gaussian(4, 2, 2));
  const CMatrix s = orthonormal_span(test::random_gaussian(4, 2, 3));
  CHECK_FALSE(grassmann_equidistance({q, r, s}).first);
  const auto [eq, dist] = grassmann_equidistance({q, r});
  CHECK(eq);
  double ss = 0.0;
  for (double c : principal_angles(q, r)) ss += 1.0 - c * c;
  CHECK(std::abs(dist - std::sqrt(ss)) < 1e-12);
}

TEST_CASE("tight frames resolve the identity") {
  const SymLiftBlocks lift = lift_fiducial(test::sic5());
  for (const FrameSpec& f : {covariant_generator(lift.blocks, 5), naimark_complement(lift.blocks, 5).frame}) {
    REQUIRE(check_tight(f).is_tight);
    CHECK(test::frame_tightness_oracle(f.generator) <= 1e-10);
  }
}

TEST_CASE("covariant frames are tight iff the blocks are orthonormal") {
  for (long long d : {3, 5, 7})
    for (std::uint64_t s = 0; s < 10; ++s) {
      const int k = static_cast<int>(1 + s % static_cast<std::uint64_t>(d - 1));
      CMatrix x = test::random_gaussian(d, k, 1000 * d + s);
      if (s % 2 == 0) x = test::random_unitary(d, 1000 * d + s).leftCols(k);
      std::vector<CVector> blocks;
      for (int c = 0; c < k; ++c) blocks.push_back(x.col(c));
      const bool orthonormal = max_abs(x.adjoint() * x - CMatrix::Identity(k, k)) <= 1e-10;
      CHECK(check_tight(covariant_generator(blocks, d)).is_tight == orthonormal);
    }
}

TEST_CASE("Naimark complement overlaps are the negated originals") {
  const SymLiftBlocks lift = lift_fiducial(test::sic5());
  const CMatrix m1 = covariant_generator(lift.blocks, 5).generator;
  const CMatrix m2 = naimark_complement(lift.blocks, 5).frame.generator;
  const CMatrix g1 = m1.adjoint() * m1, g2 = m2.adjoint() * m2;
  double worst = 0.0;
  for (long long a = 0; a < 25; ++a)
    for (long long b = 0; b < 25; ++b)
      if (a != b) worst = std::max(worst, std::abs(g1(a, b) + g2(a, b)));
  CHECK(worst <= 1e-10);
}
