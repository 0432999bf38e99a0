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

#include "sicl/overlap.hpp"

#include <algorithm>

namespace sicl {

OverlapEngine::OverlapEngine(long long d, const kernels::KernelTable* table)
    : d_(d), pc_(d), k_(table ? table : &kernels::active()), dft_(static_cast<std::size_t>(d * d)) {
  for (long long j = 0; j < d; ++j)
    for (long long s = 0; s < d; ++s) dft_[j * d + s] = pc_.omega_pow(j * s);
}

void OverlapEngine::cross_table(const cplx* a, const cplx* b, cplx* out) const {
  const std::size_t n = static_cast<std::size_t>(d_);
  std::vector<cplx> doubled(2 * n);
  std::copy(a, a + n, doubled.begin());
  std::copy(a, a + n, doubled.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<cplx> prod(n);
  for (long long i = 0; i < d_; ++i) {
    k_->conj_mul(doubled.data() + i, b, prod.data(), n);
    for (long long j = 0; j < d_; ++j)
      out[i * d_ + j] = pc_.tau_pow(i * j) * k_->dot(prod.data(), dft_.data() + j * d_, n);
  }
}

std::vector<cplx> OverlapEngine::table(const CVector& psi) const {
  std::vector<cplx> out(static_cast<std::size_t>(d_ * d_));
  table(psi.data(), out.data());
  return out;
}

double OverlapEngine::defect(const cplx* psi) const {
  std::vector<cplx> t(static_cast<std::size_t>(d_ * d_));
  table(psi, t.data());
  const double target = 1.0 / static_cast<double>(d_ + 1);
  double sum = 0.0;
  for (std::size_t p = 1; p < t.size(); ++p) {
    const double e = std::norm(t[p]) - target;
    sum += e * e;
  }
  return sum;
}

double OverlapEngine::defect(const cplx* psi, const std::vector<DispIndex>& terms) const {
  const std::size_t n = static_cast<std::size_t>(d_);
  std::vector<cplx> doubled(2 * n);
  std::copy(psi, psi + n, doubled.begin());
  std::copy(psi, psi + n, doubled.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<cplx> prod(n);
  const double target = 1.0 / static_cast<double>(d_ + 1);
  double sum = 0.0;
  long long row = -1;
  for (const DispIndex& p : terms) {  // terms sorted by i share one conj_mul
    if (p.i != row) {
      row = p.i;
      k_->conj_mul(doubled.data() + row, psi, prod.data(), n);
    }
    const double e = std::norm(k_->dot(prod.data(), dft_.data() + p.j * d_, n)) - target;
    sum += e * e;
  }
  return sum;
}

}  // namespace sicl
