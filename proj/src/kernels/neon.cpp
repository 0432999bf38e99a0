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

#include <arm_neon.h>

#include "sicl/kernels/kernels.hpp"

namespace sicl::kernels {
namespace {

// One complex double per float64x2_t: [re, im].

cplx dot_neon(const cplx* a, const cplx* b, std::size_t n) {
  float64x2_t acc_re = vdupq_n_f64(0.0);  // a * re(b)
  float64x2_t acc_im = vdupq_n_f64(0.0);  // swap(a) * im(b)
  for (std::size_t k = 0; k < n; ++k) {
    float64x2_t va = vld1q_f64(reinterpret_cast<const double*>(a + k));
    float64x2_t vb = vld1q_f64(reinterpret_cast<const double*>(b + k));
    float64x2_t aswap = vextq_f64(va, va, 1);
    acc_re = vfmaq_laneq_f64(acc_re, va, vb, 0);
    acc_im = vfmaq_laneq_f64(acc_im, aswap, vb, 1);
  }
  return {vgetq_lane_f64(acc_re, 0) - vgetq_lane_f64(acc_im, 0),
          vgetq_lane_f64(acc_re, 1) + vgetq_lane_f64(acc_im, 1)};
}

cplx dotc_neon(const cplx* a, const cplx* b, std::size_t n) {
  float64x2_t acc_re = vdupq_n_f64(0.0);  // b * re(a)
  float64x2_t acc_im = vdupq_n_f64(0.0);  // swap(b) * im(a)
  for (std::size_t k = 0; k < n; ++k) {
    float64x2_t va = vld1q_f64(reinterpret_cast<const double*>(a + k));
    float64x2_t vb = vld1q_f64(reinterpret_cast<const double*>(b + k));
    float64x2_t bswap = vextq_f64(vb, vb, 1);
    acc_re = vfmaq_laneq_f64(acc_re, vb, va, 0);
    acc_im = vfmaq_laneq_f64(acc_im, bswap, va, 1);
  }
  return {vgetq_lane_f64(acc_re, 0) + vgetq_lane_f64(acc_im, 0),
          vgetq_lane_f64(acc_re, 1) - vgetq_lane_f64(acc_im, 1)};
}

void conj_mul_neon(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    float64x2_t va = vld1q_f64(reinterpret_cast<const double*>(a + k));
    float64x2_t vb = vld1q_f64(reinterpret_cast<const double*>(b + k));
    float64x2_t bswap = vextq_f64(vb, vb, 1);
    float64x2_t x = vmulq_laneq_f64(vb, va, 0);     // [br*ar, bi*ar]
    float64x2_t y = vmulq_laneq_f64(bswap, va, 1);  // [bi*ai, br*ai]
    double* z = reinterpret_cast<double*>(out + k);
    z[0] = vgetq_lane_f64(x, 0) + vgetq_lane_f64(y, 0);
    z[1] = vgetq_lane_f64(x, 1) - vgetq_lane_f64(y, 1);
  }
}

double norm2_neon(const cplx* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    float64x2_t va = vld1q_f64(reinterpret_cast<const double*>(a + k));
    acc = vfmaq_f64(acc, va, va);
  }
  return vaddvq_f64(acc);
}

constexpr KernelTable kNeon{"neon", dot_neon, dotc_neon, conj_mul_neon, norm2_neon};

}  // namespace

const KernelTable* neon_table() { return &kNeon; }

}  // namespace sicl::kernels
