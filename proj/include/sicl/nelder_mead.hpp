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

#include <functional>
#include <vector>

namespace sicl {

struct NelderMeadOptions {
  int max_evals = 20000;
  int max_iters = 10000;
  double xatol = 1e-13;
  double fatol = 1e-30;
  /// Stops as soon as the best value is <= f_target.
  double f_target = -1.0;
  /// Absolute edge length of the initial simplex along each axis.
  double initial_step = 0.1;
  /// Dimension-dependent coefficients (Gao and Han); classic 1, 2, 1/2, 1/2 otherwise.
  bool adaptive = true;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Stops when the best value reaches f_target, when both the simplex diameter (max-norm from the best vertex) is
/// <= xatol and the spread of values is <= fatol, or a budget is exhausted.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opt);

}  // namespace sicl
