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

// Persistence: fiducial files, climb reports and overlap tables.
//
// Floating-point values are written as decimal strings with 17 significant
// digits ("%.16e"), which round-trips every double; a file produced here is
// reproduced byte for byte by load followed by save.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sicl/linalg.hpp"
#include "sicl/sic.hpp"

namespace sicl::io {

inline constexpr int kSchemaVersion = 1;

std::string format_double(double x);
double parse_double(const std::string& s);

struct FiducialFile {
  int schema_version = kSchemaVersion;
  long long dimension = 0;
  CVector vector;
  std::optional<Symmetry> symmetry;
  std::string provenance;
  double defect = 0.0;
};

FiducialFile make_fiducial_file(const SicFiducial& f, const std::string& provenance);
SicFiducial to_fiducial(const FiducialFile& f);

/// Parse error (Errc::Parse) on malformed JSON, schema mismatch or a vector
/// norm more than 1e-12 away from 1.
FiducialFile parse_fiducial(const std::string& text);
std::string serialize_fiducial(const FiducialFile& f);

FiducialFile load_fiducial(const std::filesystem::path& path);
void save_fiducial(const FiducialFile& f, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

/// Hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

enum class OverlapFormat { Csv, Json };

/// Rows (i, j, re, im, modulus) of sqrt(d+1) <psi|D_p|psi>, lexicographic,
/// with p = 0 reported as 1. With `subgroup` = m only rows with i and j
/// divisible by m are kept.
std::string report_overlaps(const CVector& v, OverlapFormat format, std::optional<long long> subgroup = std::nullopt);

}  // namespace sicl::io
