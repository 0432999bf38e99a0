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

#include <cstdint>
#include <optional>
#include <vector>

#include "sicl/heisenberg.hpp"
#include "sicl/ladder.hpp"

namespace sicl {

struct SearchConfig {
  int restarts = 20;
  int max_iters = 20000;
  int max_evals = 4000;
  double target_defect = 1e-16;
  double simplex_scale = 0.5;
  std::uint64_t seed = 0;
  /// Number of generic overlap terms used while searching; full sum if unset.
  std::optional<int> term_budget;
};

struct SearchResult {
  std::vector<double> params;  // canonicalized
  double defect_partial = 0.0;
  double defect_full = 0.0;
  int iterations = 0;
  std::uint64_t seed_used = 0;
  int restart = 0;  // restart k draws from seed_seq{seed_used, k}
};

/// The first `budget` indices of Z_n^2 (n = d(d-2)), lexicographic, whose
/// CRT parts in Z_{d-2}^2 and Z_d^2 are both nonzero. Alignment fixes every
/// overlap with a zero part.
std::vector<DispIndex> generic_terms(long long d, int budget);

/// Seeded multistart Nelder-Mead over the family parameters. Every restart
/// is polished from its end point; results are canonicalized, deduplicated
/// by |<a|b>| > 1 - 1e-8 on the global vectors and sorted by full defect.
std::vector<SearchResult> minimize(const ProtoFamily& family, const SearchConfig& cfg);

/// Results with defect_full <= threshold.
std::vector<SearchResult> solutions(const std::vector<SearchResult>& results, double threshold);

/// P_5 = -4/5 - 3i/5.
inline constexpr double kP5Re = -0.8;
inline constexpr double kP5Im = -0.6;

struct KnownPhaseCheck {
  bool matches = false;
  int branch = 0;  // e^{i sigma} = omega_3^branch * P_5^{1/3} (principal root)
  double residual = 0.0;
};

KnownPhaseCheck check_known_phase_5(double sigma, double tol = kPhysicsTol);

struct PolynomialCheck {
  bool literal = false;      // constant term -35000 + 4375, no linear term
  bool palindromic = false;  // -35000 t + 4375
  double literal_residual = 0.0;
  double palindromic_residual = 0.0;
  bool any() const { return literal || palindromic; }
};

/// Relative residual |p(t)| / ||coefficients||_2 at t = e^{6 i sigma}.
PolynomialCheck check_known_polynomial_35(double sigma, double tol = 1e-6);

/// Three vectors with equal pairwise Fubini-Study distances, permuted up to
/// phase by `symmetry`. WrongCount unless exactly three.
bool equator_geometry_check(const std::vector<CVector>& solutions, const CMatrix& symmetry, double tol = kPhysicsTol);

}  // namespace sicl
