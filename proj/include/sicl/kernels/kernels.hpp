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

// Data-parallel complex kernels used by the overlap engine.
//
// Every kernel has a portable scalar reference implementation. Vector variants
// (AVX2+FMA on x86-64, NEON on aarch64) are compiled into separate translation
// units and selected once at runtime; tests check each available variant
// against the scalar reference.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace sicl::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  /// sum_k a[k] * b[k]
  cplx (*dot)(const cplx* a, const cplx* b, std::size_t n);
  /// sum_k conj(a[k]) * b[k]
  cplx (*dotc)(const cplx* a, const cplx* b, std::size_t n);
  /// out[k] = conj(a[k]) * b[k]
  void (*conj_mul)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
  /// sum_k |a[k]|^2
  double (*norm2)(const cplx* a, std::size_t n);
};

const KernelTable& scalar_table();

/// Variants compiled for this target whose CPU feature test passes,
/// scalar first.
std::vector<const KernelTable*> available_tables();

/// Fastest available variant; selected once, thread-safe.
const KernelTable& active();

/// Overrides the runtime selection ("scalar", "avx2", "neon"); returns false
/// if the named variant is not available. Intended for tests and benchmarks.
bool force(std::string_view name);

// Per-architecture entry points. They return nullptr when the variant was not
// compiled in or the CPU lacks the required features.
const KernelTable* avx2_table();
const KernelTable* neon_table();

}  // namespace sicl::kernels
