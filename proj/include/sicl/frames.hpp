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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sicl/linalg.hpp"

namespace sicl {

struct FrameSpec {
  long long ambient_dim = 0;
  long long n_vectors = 0;
  CMatrix generator;  // ambient_dim x n_vectors, one frame vector per column
  std::optional<std::string> covariance;
  bool normalized = false;
};

struct EtfCertificate {
  bool is_tight = false;
  double tight_constant = 0.0;  // tr(G G^dag) / ambient_dim
  double tight_deviation = 0.0;
  bool is_equiangular = false;
  double common_overlap_sq = 0.0;  // (N - d) / (d (N - 1))
  double max_deviation = 0.0;      // over distinct normalized column pairs
};

/// Tightness: ||G G^dag - alpha 1||_max <= tol. Equiangularity is measured on
/// unit-normalized columns against the Welch value.
EtfCertificate check_tight(const FrameSpec& frame, double tol = kStructuralTol);

/// Columns (D_p x_0; ...; D_p x_{k-1}) for p = (i, j) in lexicographic order.
FrameSpec covariant_generator(const std::vector<CVector>& x_blocks, long long d);

struct NaimarkComplement {
  FrameSpec frame;
  std::vector<CVector> completion;
  /// ||U U^dag - 1||_max for U = [M1; M2] / sqrt(d).
  double unitarity_defect = 0.0;
};

/// Frame generated by an orthonormal completion of x_blocks. Without an
/// explicit completion, the eigenvalue-1 eigenvectors of 1 - sum |x_r><x_r|
/// are used.
NaimarkComplement naimark_complement(const std::vector<CVector>& x_blocks, long long d,
                                     const std::optional<std::vector<CVector>>& completion = std::nullopt);

/// Chordal distance sqrt(sum sin^2) between every pair of subspaces; returns
/// (max - min <= tol, mean distance).
std::pair<bool, double> grassmann_equidistance(const std::vector<CMatrix>& bases, double tol = kPhysicsTol);

}  // namespace sicl
