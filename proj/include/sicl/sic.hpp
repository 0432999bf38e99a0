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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sicl/linalg.hpp"
#include "sicl/modular.hpp"

namespace sicl {

struct Symmetry {
  ModularMatrix2 F;
  cplx eigenvalue;  // U_F psi = eigenvalue * psi, U_F phase-fixed by table
};

struct SicFiducial {
  long long d = 0;
  CVector vector;
  std::optional<Symmetry> symmetry;
  std::string label;
};

struct OverlapTable {
  long long d = 0;
  /// phases[i*d + j] = sqrt(d+1) <psi|D_{ij}|psi>; phases[0] = 1.
  std::vector<cplx> phases;
  /// max over p != 0 of ||phases[p]| - 1|.
  double defect = 0.0;

  cplx at(long long i, long long j) const { return phases[static_cast<std::size_t>(mod(i, d) * d + mod(j, d))]; }
};

OverlapTable overlap_phases(const CVector& v);
inline OverlapTable overlap_phases(const SicFiducial& f) { return overlap_phases(f.vector); }

/// sum_{p != 0} (|<v|D_p|v>|^2 - 1/(d+1))^2, v taken as is.
double sic_defect(const CVector& v, long long d);

struct SicCertificate {
  bool passes = false;
  double norm_deviation = 0.0;
  double tight_deviation = 0.0;     // ||sum_p D_p P D_p^dag - d 1||_max
  double overlap_sq_deviation = 0.0;  // max |overlap^2 - 1/(d+1)| over orbit pairs
  explicit operator bool() const { return passes; }
};

SicCertificate verify_sic(const CVector& v, double tol = kPhysicsTol);
inline SicCertificate verify_sic(const SicFiducial& f, double tol = kPhysicsTol) { return verify_sic(f.vector, tol); }

struct TwoDesignCertificate {
  bool passes = false;
  double constant = 0.0;  // N / dim_sym for a 2-design
  double max_error = 0.0;
  explicit operator bool() const { return passes; }
};

/// sum_I (|v_I><v_I|)^{(x)2} = c Pi_sym with c = tr / dim_sym, for any list of
/// unit vectors.
TwoDesignCertificate two_design_check(const std::vector<CVector>& vectors, double tol = kStructuralTol);

/// The orbit of a SIC fiducial, summed through the Weyl-Heisenberg structure
/// in O(d^4); the deviation is compared against d^2 / dim_sym. NotASic unless
/// verify_sic passes at 1e-8.
TwoDesignCertificate two_design_check(const SicFiducial& f, double tol = kStructuralTol);

/// All d^2 vectors D_p v, p lexicographic.
std::vector<CVector> weyl_orbit(const CVector& v);

struct FiducialSearch {
  long long d = 0;
  ModularMatrix2 zauner;
  cplx eigenvalue{1.0, 0.0};
  int restarts = 30;
  std::uint64_t seed = 0;
  double target_defect = 1e-16;
};

/// The Zauner matrix and eigenvalue whose eigenspace is searched by default:
/// eigenvalue omega_3 of the standard matrix for d = 5 mod 6, eigenvalue 1
/// of a diagonal Zauner matrix when one exists for d = 1 mod 6, and
/// eigenvalue 1 of the standard matrix for d = 3 mod 6.
FiducialSearch default_fiducial_search(long long d);

/// Distinct fiducials (|<a|b>| < 1 - 1e-8) found by seeded multistart
/// Nelder-Mead over the eigenspace coefficients, in restart order.
std::vector<SicFiducial> find_fiducials(const FiducialSearch& s);

/// The first real fiducial among find_fiducials if any, else the first one.
/// SearchFailed when none reaches the target defect.
SicFiducial find_fiducial(const FiducialSearch& s);
SicFiducial find_fiducial(long long d, const ModularMatrix2& zauner, cplx eigenvalue, int restarts, std::uint64_t seed);

/// Whether every component is real after the largest one is made real positive.
bool is_real_up_to_phase(const CVector& v, double tol = 1e-8);

/// Searches order-3 Zauner-type F (standard matrix first) with U_F v = lambda v.
std::optional<Symmetry> find_symmetry(const CVector& v, double tol = 1e-8);

}  // namespace sicl
