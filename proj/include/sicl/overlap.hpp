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

// Overlap engine: <psi|D_p|psi> for all or selected p.
//
// <psi|D_{ij}|psi> = tau^{ij} sum_s conj(psi_{s+i}) psi_s omega^{js}; each row i
// is one conj_mul followed by d dot products against a DFT table, both routed
// through the runtime-selected SIMD kernels.

#include <vector>

#include "sicl/heisenberg.hpp"
#include "sicl/kernels/kernels.hpp"

namespace sicl {

class OverlapEngine {
 public:
  explicit OverlapEngine(long long d, const kernels::KernelTable* table = nullptr);

  long long dim() const { return d_; }

  /// out[i*d + j] = <a|D_{ij}|b>. Length d*d.
  void cross_table(const cplx* a, const cplx* b, cplx* out) const;
  void table(const cplx* psi, cplx* out) const { cross_table(psi, psi, out); }
  std::vector<cplx> table(const CVector& psi) const;

  /// sum over p != 0 of (|<psi|D_p|psi>|^2 - 1/(d+1))^2, psi taken as is.
  double defect(const cplx* psi) const;
  /// Same sum restricted to `terms` (p = 0 must not be listed).
  double defect(const cplx* psi, const std::vector<DispIndex>& terms) const;

 private:
  long long d_;
  PhaseConstants pc_;
  const kernels::KernelTable* k_;
  std::vector<cplx> dft_;  // row j holds omega^{js}
};

}  // namespace sicl
