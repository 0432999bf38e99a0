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

#include <immintrin.h>

#include "sicl/kernels/kernels.hpp"

// Compiled with -mavx2 -mfma. Nothing in here may run before the CPU check in
// avx2_table() passes, and no std:: inline templates are instantiated here so
// the linker cannot pick an AVX2 copy for use elsewhere.

namespace sicl::kernels {
namespace {

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

inline cplx hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

// Lanes hold [re0, im0, re1, im1].
cplx dot_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc_re = _mm256_setzero_pd();  // a * re(b)
  __m256d acc_im = _mm256_setzero_pd();  // swap(a) * im(b)
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    __m256d va = load2(a + k);
    __m256d vb = load2(b + k);
    __m256d bre = _mm256_movedup_pd(vb);
    __m256d bim = _mm256_permute_pd(vb, 0xF);
    __m256d aswap = _mm256_permute_pd(va, 0x5);
    acc_re = _mm256_fmadd_pd(va, bre, acc_re);
    acc_im = _mm256_fmadd_pd(aswap, bim, acc_im);
  }
  cplx s = hsum(_mm256_addsub_pd(acc_re, acc_im));
  double re = s.real(), im = s.imag();
  for (; k < n; ++k) {
    const double* x = reinterpret_cast<const double*>(a + k);
    const double* y = reinterpret_cast<const double*>(b + k);
    re += x[0] * y[0] - x[1] * y[1];
    im += x[0] * y[1] + x[1] * y[0];
  }
  return {re, im};
}

cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
  // conj(a) * b = [ar*br + ai*bi, ar*bi - ai*br]
  __m256d acc_re = _mm256_setzero_pd();  // b * re(a)
  __m256d acc_im = _mm256_setzero_pd();  // swap(b) * im(a)
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    __m256d va = load2(a + k);
    __m256d vb = load2(b + k);
    __m256d are = _mm256_movedup_pd(va);
    __m256d aim = _mm256_permute_pd(va, 0xF);
    __m256d bswap = _mm256_permute_pd(vb, 0x5);
    acc_re = _mm256_fmadd_pd(vb, are, acc_re);
    acc_im = _mm256_fmadd_pd(bswap, aim, acc_im);
  }
  // [br*ar + bi*ai, bi*ar - br*ai]
  __m256d t = _mm256_addsub_pd(acc_re, _mm256_sub_pd(_mm256_setzero_pd(), acc_im));
  cplx s = hsum(t);
  double re = s.real(), im = s.imag();
  for (; k < n; ++k) {
    const double* x = reinterpret_cast<const double*>(a + k);
    const double* y = reinterpret_cast<const double*>(b + k);
    re += x[0] * y[0] + x[1] * y[1];
    im += x[0] * y[1] - x[1] * y[0];
  }
  return {re, im};
}

void conj_mul_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    __m256d va = load2(a + k);
    __m256d vb = load2(b + k);
    __m256d are = _mm256_movedup_pd(va);
    __m256d aim = _mm256_permute_pd(va, 0xF);
    __m256d bswap = _mm256_permute_pd(vb, 0x5);
    __m256d r = _mm256_addsub_pd(_mm256_mul_pd(vb, are), _mm256_sub_pd(zero, _mm256_mul_pd(bswap, aim)));
    _mm256_storeu_pd(reinterpret_cast<double*>(out + k), r);
  }
  for (; k < n; ++k) {
    const double* x = reinterpret_cast<const double*>(a + k);
    const double* y = reinterpret_cast<const double*>(b + k);
    double* z = reinterpret_cast<double*>(out + k);
    const double re = x[0] * y[0] + x[1] * y[1];
    const double im = x[0] * y[1] - x[1] * y[0];
    z[0] = re;
    z[1] = im;
  }
}

double norm2_avx2(const cplx* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    __m256d va = load2(a + k);
    acc = _mm256_fmadd_pd(va, va, acc);
  }
  cplx h = hsum(acc);
  double s = h.real() + h.imag();
  for (; k < n; ++k) {
    const double* x = reinterpret_cast<const double*>(a + k);
    s += x[0] * x[0] + x[1] * x[1];
  }
  return s;
}

constexpr KernelTable kAvx2{"avx2", dot_avx2, dotc_avx2, conj_mul_avx2, norm2_avx2};

}  // namespace

const KernelTable* avx2_table() {
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &kAvx2;
  return nullptr;
}

}  // namespace sicl::kernels
