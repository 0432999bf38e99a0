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

#include <atomic>

#include "sicl/kernels/kernels.hpp"

namespace sicl::kernels {

#if !(defined(__x86_64__) || defined(_M_X64))
const KernelTable* avx2_table() { return nullptr; }
#endif
#if !(defined(__aarch64__) || defined(_M_ARM64))
const KernelTable* neon_table() { return nullptr; }
#endif

namespace {

std::atomic<const KernelTable*> g_forced{nullptr};

const KernelTable& detect() {
  static const KernelTable* best = [] {
    auto tables = available_tables();
    return tables.back();
  }();
  return *best;
}

}  // namespace

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> out{&scalar_table()};
  if (auto* t = avx2_table()) out.push_back(t);
  if (auto* t = neon_table()) out.push_back(t);
  return out;
}

const KernelTable& active() {
  if (auto* f = g_forced.load(std::memory_order_acquire)) return *f;
  return detect();
}

bool force(std::string_view name) {
  for (auto* t : available_tables()) {
    if (t->name == name) {
      g_forced.store(t, std::memory_order_release);
      return true;
    }
  }
  return false;
}

}  // namespace sicl::kernels
