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

#include <array>
#include <utility>
#include <vector>

#include "sicl/heisenberg.hpp"
#include "sicl/linalg.hpp"
#include "sicl/modular.hpp"

namespace sicl {

enum class PhaseConvention {
  Raw,            // closed form, no phase fixing
  Table1,         // U^order = 1 and the full multiplicity row matches
  Table1Column1,  // U^order = 1 and only the eigenvalue-1 multiplicity matches
  RootOfUnity,    // U^order = 1; no table row exists for this order
};

struct SymplecticUnitary {
  ModularMatrix2 F;
  CMatrix U;
  PhaseConvention convention = PhaseConvention::Raw;
};

/// Unitary representative with U D_p U^dag = D_{Fp} up to a global phase.
/// Closed form when the upper-right entry is a unit; otherwise
/// F = (0,-1;1,k) * (k a + c, k b + g; -a, -b) for the first k making
/// k b + g a unit, and both factors use the closed form.
SymplecticUnitary symplectic_unitary(const ModularMatrix2& F);

struct CovarianceResidual {
  double max_error = 0.0;
  cplx phase{1.0, 0.0};  // the single global e^{i chi}
};

CovarianceResidual covariance_residual(const SymplecticUnitary& u);

/// Eigenvalue multiplicities for (1, omega_3, omega_3^2) when order = 3 and
/// (+1, -1) when order = 2, for odd d >= 3.
std::vector<int> table1_multiplicities(long long d, int order);

/// Eigenvalue multiplicities of U over the order-th roots of unity,
/// indexed by the exponent k of exp(2 pi i k / order).
std::vector<int> root_multiplicities(const CMatrix& u, int order, double tol = kDegeneracyTol);

/// Rescales the global phase so that U^order = 1 and, for orders 2 and 3, the
/// multiplicities match the table row. When no root does, falls back to the
/// first root whose eigenvalue-1 multiplicity matches.
SymplecticUnitary fix_phase_to_table(const SymplecticUnitary& u, int order);

/// Orthonormal basis of the eigenspace, first significant component real positive.
std::vector<CVector> eigenspace_basis(const CMatrix& u, cplx eigenvalue, double tol = kDegeneracyTol);

/// Factors of F over Z_{n1} and Z_{n2}: (a, s^{-1} b; s c, g) with
/// s = n2^{-1} mod n1 resp. n1^{-1} mod n2. For n1 n2 = d(d-2) both scalings
/// equal (d-1)/2 in their ring.
std::pair<ModularMatrix2, ModularMatrix2> crt_split_symplectic(const ModularMatrix2& F, long long n1, long long n2);

/// Inverse of crt_split_symplectic.
ModularMatrix2 crt_combine_symplectic(const ModularMatrix2& f1, const ModularMatrix2& f2);

/// max |V U_F V^dag - c U_{F1} (x) U_{F2}| over the best phase c.
double crt_split_certificate(const ModularMatrix2& F, long long n1, long long n2);

/// The element of x (x) y in the CRT tensor basis for a vector on Z_{n1 n2}.
CVector crt_to_tensor(const CVector& v, long long n1, long long n2);
CVector crt_from_tensor(const CVector& v, long long n1, long long n2);

/// Order-3 symplectic matrices of Zauner type (trace = -1) whose unitary is
/// a monomial matrix: diagonal first, then lower triangular (1,0;c,1); falls
/// back to the standard Zauner matrix when none exist.
ModularMatrix2 preferred_zauner(long long d);

/// All Zauner-type elements (order 3, trace -1), lexicographic.
std::vector<ModularMatrix2> zauner_type_elements(long long d);

}  // namespace sicl
