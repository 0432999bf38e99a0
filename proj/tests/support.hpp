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

// Shared fixtures and independent oracles for the test suites.

#include <cstdint>

#include "sicl/linalg.hpp"
#include "sicl/modular.hpp"
#include "sicl/sic.hpp"

namespace sicl::test {

CVector random_unit(long long n, std::uint64_t seed);
CMatrix random_gaussian(long long rows, long long cols, std::uint64_t seed);
CMatrix random_unitary(long long n, std::uint64_t seed);

/// tau^{ij} X^i Z^j built from explicit clock and shift matrices.
CMatrix displacement_oracle(long long d, long long i, long long j);

/// sum_{p != 0} (|<v|D_p|v>|^2 - 1/(d+1))^2 via dense displacement matrices.
double defect_oracle(const CVector& v);

/// max |G G^dag - (N/d) 1| for the unit-normalized columns of G.
double frame_tightness_oracle(const CMatrix& g);

/// Search-once fixtures, each carrying its Zauner symmetry.
const SicFiducial& sic5();
const SicFiducial& sic7_real();
const SicFiducial& sic9();

}  // namespace sicl::test
