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

// Climb driver: from a SIC fiducial in dimension d, search the proto-SIC
// families in dimension d(d-2) over generators and eigenvalue sectors.

#include <optional>
#include <string>
#include <vector>

#include "sicl/ladder.hpp"
#include "sicl/optimizer.hpp"
#include "sicl/sic.hpp"

namespace sicl {

enum class SectorMode {
  Auto,    // sectors 0, 1, 2 in order, stopping per generator at the first with SICs
  Fixed,   // only ClimbOptions::sector
  All,     // every sector
};

struct ClimbOptions {
  SectorMode sector_mode = SectorMode::Auto;
  int sector = 0;
  /// Every Zauner-type generator in dimension d - 2 instead of the preferred
  /// one and its square.
  bool all_generators = false;
  bool conjugate_pairing = false;
  SearchConfig search;
  double accept_defect = 1e-10;
};

enum class BranchStatus { Solutions, Empty, InconsistentPairing };

std::string to_string(BranchStatus s);

struct BranchOutcome {
  ModularMatrix2 generator;
  int sector = 0;
  BranchStatus status = BranchStatus::Empty;
  std::string detail;
  int parameter_count = 0;
  std::vector<int> block_sizes;
  double best_defect = 0.0;
  std::vector<int> solution_ids;  // indices into ClimbResult::solutions
  double seconds = 0.0;
};

struct ClimbSolution {
  CVector tensor_vector;  // C^{d-2} (x) C^d
  CVector global_vector;  // CRT basis of C^{d(d-2)}
  std::vector<double> params;
  ModularMatrix2 generator;
  int sector = 0;
  double defect_full = 0.0;
  SicCertificate sic;
  AlignmentCertificate alignment;
  std::optional<Symmetry> symmetry;  // of the global vector
  std::optional<KnownPhaseCheck> phase5;
  std::optional<PolynomialCheck> polynomial35;
};

struct ClimbResult {
  long long source_dimension = 0;
  long long target_dimension = 0;
  ModularMatrix2 source_symmetry;
  std::vector<ModularMatrix2> generators;
  std::vector<int> sectors_tried;
  std::vector<BranchOutcome> branches;
  std::vector<ClimbSolution> solutions;  // distinct up to global phase
  double seconds = 0.0;
};

/// NotASic if the source fails verify_sic at 1e-8; NotSymplectic if it has
/// no order-3 symmetry.
ClimbResult climb(const SicFiducial& source, const ClimbOptions& options);

/// JSON report; `solution_files` names the stored vector of each solution.
std::string climb_report_json(const ClimbResult& r, const std::string& source_sha256,
                              const std::vector<std::string>& solution_files, const ClimbOptions& options);

}  // namespace sicl
