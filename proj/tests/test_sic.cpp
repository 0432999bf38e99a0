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
#include <numbers>

#include "sicl/clifford.hpp"
#include "sicl/error.hpp"
#include "sicl/sic.hpp"
#include "support.hpp"

using namespace sicl;

TEST_CASE("overlap phases") {
  const CVector v = test::random_unit(7, 1);
  CHECK(std::abs(overlap_phases(v).at(0, 0) - 1.0) < 1e-15);
  const OverlapTable t = overlap_phases(test::sic5());
  CHECK(t.defect <= 1e-9);
  CVector e0 = CVector::Zero(3);
  e0(0) = 1.0;
  CHECK(std::abs(std::abs(overlap_phases(e0).at(0, 1)) - 2.0) < 1e-14);
}

TEST_CASE("overlap phases match dense displacement matrices") {
  const CVector v = test::random_unit(9, 2);
  const OverlapTable t = overlap_phases(v);
  for (long long i = 0; i < 9; ++i)
    for (long long j = 0; j < 9; ++j) {
      if (i == 0 && j == 0) continue;
      const cplx direct = std::sqrt(10.0) * v.dot(test::displacement_oracle(9, i, j) * v);
      CHECK(std::abs(t.at(i, j) - direct) < 1e-12);
    }
}

TEST_CASE("SIC defect") {
  CHECK(sic_defect(test::sic5().vector, 5) <= 1e-18);
  CVector e0 = CVector::Zero(3);
  e0(0) = 1.0;
  CHECK(std::abs(sic_defect(e0, 3) - test::defect_oracle(e0)) < 1e-14);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CVector v = test::random_unit(5 + 2 * static_cast<long long>(seed % 3), seed);
    CHECK(std::abs(sic_defect(v, v.size()) - test::defect_oracle(v)) < 1e-13);
  }
  CHECK_THROWS_AS(sic_defect(e0, 5), Error);
}

TEST_CASE("SIC defect is Clifford invariant") {
  for (long long d : {5, 7}) {
    const CVector v = test::random_unit(d, 40 + d);
    for (const auto& F : zauner_type_elements(d)) {
      const CVector w = symplectic_unitary(F).U * v;
      CHECK(std::abs(sic_defect(w, d) - sic_defect(v, d)) < 1e-12);
    }
    const PhaseConstants pc(d);
    CHECK(std::abs(sic_defect(apply_displacement(pc, {1, 2}, v), d) - sic_defect(v, d)) < 1e-12);
  }
}

TEST_CASE("verify_sic") {
  const SicCertificate c = verify_sic(test::sic5(), 1e-8);
  CHECK(c.passes);
  CHECK(c.overlap_sq_deviation < 1e-9);
  CHECK_FALSE(verify_sic(test::random_unit(5, 3)).passes);
  CHECK(verify_sic(test::sic7_real()).passes);
  CHECK(verify_sic(test::sic9()).passes);
}

TEST_CASE("two-design property") {
  const TwoDesignCertificate c5 = two_design_check(test::sic5());
  CHECK(c5.passes);
  CHECK(std::abs(c5.constant - 25.0 / 15.0) < 1e-12);
  const TwoDesignCertificate direct = two_design_check(weyl_orbit(test::sic5().vector));
  CHECK(direct.passes);
  CHECK(std::abs(direct.constant - c5.constant) < 1e-12);
  const TwoDesignCertificate c7 = two_design_check(test::sic7_real());
  CHECK(c7.passes);
  CHECK(std::abs(c7.constant - 49.0 / 28.0) < 1e-12);

  std::vector<CVector> onb;
  for (int k = 0; k < 5; ++k) onb.push_back(CVector::Unit(5, k));
  CHECK_FALSE(two_design_check(onb).passes);
  SicFiducial bad{5, test::random_unit(5, 9), std::nullopt, ""};
  CHECK_THROWS_AS(two_design_check(bad), Error);
  CHECK_FALSE(two_design_check(weyl_orbit(bad.vector)).passes);
}

TEST_CASE("fiducial search in the Zauner eigenspaces") {
  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  SUBCASE("d = 5, eigenspace of dimension 2") {
    const FiducialSearch s = default_fiducial_search(5);
    const auto u = fix_phase_to_table(symplectic_unitary(s.zauner), 3);
    CHECK(eigenspace_basis(u.U, s.eigenvalue).size() == 2);
    CHECK(std::abs(s.eigenvalue - w) < 1e-14);
    const SicFiducial& f = test::sic5();
    CHECK(sic_defect(f.vector, 5) <= 1e-16);
    CHECK((u.U * f.vector - s.eigenvalue * f.vector).norm() < 1e-10);
  }
  SUBCASE("d = 7, diagonal Zauner matrix, a real fiducial") {
    const FiducialSearch s = default_fiducial_search(7);
    CHECK(s.zauner == ModularMatrix2::diagonal(2, 4, 7));
    const auto u = fix_phase_to_table(symplectic_unitary(s.zauner), 3);
    CHECK(eigenspace_basis(u.U, s.eigenvalue).size() == 3);
    const auto all = find_fiducials(s);
    bool any_real = false;
    for (const auto& f : all) any_real = any_real || is_real_up_to_phase(f.vector);
    CHECK(any_real);
    CHECK(is_real_up_to_phase(test::sic7_real().vector));
  }
  SUBCASE("d = 9, eigenvalue 1 space of dimension 4") {
    const FiducialSearch s = default_fiducial_search(9);
    const auto u = fix_phase_to_table(symplectic_unitary(s.zauner), 3);
    CHECK(eigenspace_basis(u.U, 1.0).size() == 4);
    CHECK(sic_defect(test::sic9().vector, 9) <= 1e-16);
  }
}

TEST_CASE("fiducial search is deterministic in the seed") {
  FiducialSearch s = default_fiducial_search(5);
  s.restarts = 5;
  s.seed = 17;
  const SicFiducial a = find_fiducial(s), b = find_fiducial(s);
  CHECK((a.vector - b.vector).norm() == 0.0);
}

TEST_CASE("symmetry recovery") {
  const auto sym = find_symmetry(test::sic5().vector);
  REQUIRE(sym.has_value());
  const auto u = fix_phase_to_table(symplectic_unitary(sym->F), 3);
  CHECK((u.U * test::sic5().vector - sym->eigenvalue * test::sic5().vector).norm() < 1e-8);
  CHECK_FALSE(find_symmetry(test::random_unit(5, 2)).has_value());
}

TEST_CASE("four distinct fiducials in the d = 5 Zauner eigenspace") {
  const FiducialSearch s = default_fiducial_search(5);
  const auto all = find_fiducials(s);
  CHECK(all.size() == 4);
  const CMatrix u = fix_phase_to_table(symplectic_unitary(s.zauner), 3).U;
  for (std::size_t a = 0; a < all.size(); ++a) {
    CHECK(verify_sic(all[a].vector).passes);
    CHECK((u * all[a].vector - s.eigenvalue * all[a].vector).norm() < 1e-8);
    for (std::size_t b = a + 1; b < all.size(); ++b) CHECK(std::abs(all[a].vector.dot(all[b].vector)) < 1.0 - 1e-6);
  }
}

TEST_CASE("overlap phases are Clifford covariant") {
  for (long long d : {5, 7}) {
    const CVector v = test::random_unit(d, 60 + d);
    const OverlapTable t = overlap_phases(v);
    for (const auto& F : zauner_type_elements(d)) {
      const OverlapTable tf = overlap_phases(CVector(symplectic_unitary(F).U * v));
      double worst = 0.0;
      for (long long i = 0; i < d; ++i)
        for (long long j = 0; j < d; ++j) {
          const DispIndex q = F * DispIndex{i, j};
          worst = std::max(worst, std::abs(tf.at(q.i, q.j) - t.at(i, j)));
        }
      CHECK(worst <= 1e-10);
    }
  }
}

TEST_CASE("SIC defect ignores the global phase") {
  const CVector v = test::random_unit(7, 3);
  CHECK(sic_defect(CVector(v * std::polar(1.0, 1.234)), 7) == doctest::Approx(sic_defect(v, 7)).epsilon(1e-14));
}
