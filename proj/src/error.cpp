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

#include "sicl/error.hpp"

namespace sicl {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotUnitary: return "NotUnitary";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotOrthonormal: return "NotOrthonormal";
    case Errc::BadDimension: return "BadDimension";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotSymplectic: return "NotSymplectic";
    case Errc::NoMatchingPhase: return "NoMatchingPhase";
    case Errc::EmptyEigenspace: return "EmptyEigenspace";
    case Errc::BadCompletion: return "BadCompletion";
    case Errc::NotASic: return "NotASic";
    case Errc::SearchFailed: return "SearchFailed";
    case Errc::BadPairing: return "BadPairing";
    case Errc::ParamCountMismatch: return "ParamCountMismatch";
    case Errc::AlignmentRequired: return "AlignmentRequired";
    case Errc::WrongCount: return "WrongCount";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace sicl
