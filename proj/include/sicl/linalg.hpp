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

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace sicl {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Default tolerances. Structural checks (unitarity, orthonormality, exact
/// group identities) use `kStructuralTol`; statements about SIC quality and
/// alignment use `kPhysicsTol`.
inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kPhysicsTol = 1e-8;
/// Eigenvalues closer than this are treated as one degenerate cluster.
inline constexpr double kDegeneracyTol = 1e-8;

struct EigenDecomposition {
  std::vector<cplx> eigenvalues;
  CMatrix eigenvectors;  // columns, orthonormal
  double tolerance = kStructuralTol;
};

enum class TraceOut { A, B };

/// Eigendecomposition of a unitary matrix.
///
/// Eigenvalues are ordered by phase in [0, 2*pi); inside a degenerate cluster
/// the eigenvectors are an orthonormal basis (modified Gram-Schmidt with one
/// reorthogonalization pass) ordered by the index of their first significant
/// component. Every eigenvector has its first component of modulus > tol
/// made real positive.
EigenDecomposition eig_unitary(const CMatrix& a, double tol = kStructuralTol);

/// Same contract for Hermitian input; eigenvalues are real, sorted ascending.
EigenDecomposition eig_hermitian(const CMatrix& a, double tol = kStructuralTol);

std::vector<CVector> gram_schmidt(std::span<const CVector> vectors,
                                  double tol = kStructuralTol);

/// Orthonormal basis of the column span, via SVD. Columns whose singular
/// value falls below `rel_tol * s_max` are dropped.
CMatrix orthonormal_span(const CMatrix& columns, double rel_tol = 1e-8);

CMatrix partial_trace(const CMatrix& m, int dim_a, int dim_b, TraceOut side);

/// Cosines of the principal angles between two subspaces given by
/// orthonormal column bases, sorted descending.
std::vector<double> principal_angles(const CMatrix& u1, const CMatrix& u2,
                                     double tol = kStructuralTol);

/// Scales `v` so its first component with modulus > tol is real positive.
void fix_leading_phase(CVector& v, double tol = kDegeneracyTol);

/// Scales `v` so its largest-modulus component is real positive.
void fix_largest_phase(CVector& v);

double max_abs(const CMatrix& m);
double unitarity_defect(const CMatrix& a);
double orthonormality_defect(const CMatrix& columns);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);
CMatrix columns_to_matrix(std::span<const CVector> cols);

/// max |a - c*b| where c is the unit phase tr(b^H a)/|tr(b^H a)|; zero iff
/// a equals b up to a global phase.
double distance_up_to_phase(const CMatrix& a, const CMatrix& b);

}  // namespace sicl
