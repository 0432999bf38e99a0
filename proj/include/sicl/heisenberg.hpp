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

// Weyl-Heisenberg group in odd dimension d.
//
// (D_{i,j})_{r,s} = tau^{ij + 2js} delta_{r, s+i}, tau = -exp(i pi / d), so
// tau^2 = omega. Exponents of tau are reduced modulo 2d.
//
// Tensor products are row-major: in A (x) B the left factor is the slow index.

#include <utility>
#include <vector>

#include "sicl/linalg.hpp"
#include "sicl/modular.hpp"

namespace sicl {

struct PhaseConstants {
  explicit PhaseConstants(long long d);

  long long d;
  cplx omega;
  cplx tau;

  /// tau^n for any integer n, from a table of the 2d roots.
  cplx tau_pow(long long n) const { return tau_powers_[static_cast<std::size_t>(mod(n, 2 * d))]; }
  cplx omega_pow(long long n) const { return tau_pow(2 * n); }

 private:
  std::vector<cplx> tau_powers_;
};

/// Throws BadDimension unless d is odd and >= 3.
void require_odd_dimension(long long d);

CMatrix displacement(long long d, DispIndex p);

/// D_p * v without forming the matrix.
CVector apply_displacement(const PhaseConstants& pc, DispIndex p, const CVector& v);

struct WeylCheck {
  bool ok = false;
  /// s in D_p D_q D_p^dag D_q^dag = omega^{s (p_j q_i - p_i q_j)}; 0 if neither sign fits.
  int form_sign = 0;
  double max_error = 0.0;
  explicit operator bool() const { return ok; }
};

/// ZX = omega XZ, X^d = Z^d = 1 and the group-commutator scalar for every
/// pair of displacements, all within `tol`.
WeylCheck weyl_commutation_check(long long d, double tol = 1e-12);

/// CRT basis permutation V: column r has its 1 in row n2*(r mod n1) + (r mod n2).
CMatrix crt_permutation(long long n1, long long n2);

/// Closed-form split: V D_p V^dag = D_{p'} (x) D_{p''} with
/// p' = (i, j n2^{-1}) mod n1 and p'' = (i, j n1^{-1}) mod n2.
std::pair<DispIndex, DispIndex> crt_split_index(DispIndex p, long long n1, long long n2);

struct CrtSplit {
  DispIndex first;
  DispIndex second;
  cplx phase;  // V D_p V^dag = phase * D_first (x) D_second
};

/// Exhaustive search over all n1^2 * n2^2 candidate pairs. Results are cached
/// per (n1, n2); the cache is safe for concurrent readers.
CrtSplit crt_split_index_bruteforce(DispIndex p, long long n1, long long n2);

}  // namespace sicl
