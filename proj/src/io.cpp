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

#include "sicl/io.hpp"

#include <openssl/evp.h>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "sicl/error.hpp"
#include "sicl/overlap.hpp"

namespace sicl::io {

using json = nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

double parse_double(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || (errno == ERANGE && std::isinf(x)))
    throw Error(Errc::Parse, "not a decimal number: '" + s + "'");
  return x;
}

namespace {

json complex_json(cplx z) { return json::array({format_double(z.real()), format_double(z.imag())}); }

cplx complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw Error(Errc::Parse, "complex entries are [re, im] string pairs");
  return {parse_double(j[0].get<std::string>()), parse_double(j[1].get<std::string>())};
}

}  // namespace

FiducialFile make_fiducial_file(const SicFiducial& f, const std::string& provenance) {
  FiducialFile out;
  out.dimension = f.vector.size();
  out.vector = f.vector;
  out.symmetry = f.symmetry;
  out.provenance = provenance;
  out.defect = sic_defect(f.vector, out.dimension);
  return out;
}

SicFiducial to_fiducial(const FiducialFile& f) {
  SicFiducial out;
  out.d = f.dimension;
  out.vector = f.vector;
  out.symmetry = f.symmetry;
  out.label = f.provenance;
  return out;
}

std::string serialize_fiducial(const FiducialFile& f) {
  json j;
  j["schema_version"] = f.schema_version;
  j["dimension"] = f.dimension;
  json vec = json::array();
  for (Eigen::Index k = 0; k < f.vector.size(); ++k) vec.push_back(complex_json(f.vector(k)));
  j["vector"] = std::move(vec);
  if (f.symmetry) {
    const auto& e = f.symmetry->F.entries();
    j["symmetry"] = {{"matrix", json::array({e[0], e[1], e[2], e[3]})},
                     {"modulus", f.symmetry->F.modulus()},
                     {"eigenvalue", complex_json(f.symmetry->eigenvalue)}};
  }
  j["provenance"] = f.provenance;
  j["defect"] = format_double(f.defect);
  return j.dump(2) + "\n";
}

FiducialFile parse_fiducial(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
  try {
    FiducialFile f;
    f.schema_version = j.at("schema_version").get<int>();
    if (f.schema_version != kSchemaVersion)
      throw Error(Errc::Parse, "unsupported schema_version " + std::to_string(f.schema_version));
    f.dimension = j.at("dimension").get<long long>();
    const json& vec = j.at("vector");
    if (!vec.is_array() || static_cast<long long>(vec.size()) != f.dimension)
      throw Error(Errc::Parse, "vector length does not match dimension");
    f.vector.resize(f.dimension);
    for (long long k = 0; k < f.dimension; ++k) f.vector(k) = complex_from(vec[static_cast<std::size_t>(k)]);
    if (std::abs(f.vector.norm() - 1.0) > 1e-12) throw Error(Errc::Parse, "vector is not normalized");
    if (j.contains("symmetry")) {
      const json& s = j.at("symmetry");
      const json& m = s.at("matrix");
      if (!m.is_array() || m.size() != 4) throw Error(Errc::Parse, "symmetry matrix needs four entries");
      f.symmetry = Symmetry{ModularMatrix2{m[0].get<long long>(), m[1].get<long long>(), m[2].get<long long>(),
                                           m[3].get<long long>(), s.at("modulus").get<long long>()},
                            complex_from(s.at("eigenvalue"))};
    }
    f.provenance = j.value("provenance", std::string{});
    f.defect = parse_double(j.at("defect").get<std::string>());
    return f;
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Parse, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::Parse, "write failed for " + path.string());
}

FiducialFile load_fiducial(const std::filesystem::path& path) { return parse_fiducial(read_file(path)); }

void save_fiducial(const FiducialFile& f, const std::filesystem::path& path) { write_file(path, serialize_fiducial(f)); }

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(Errc::Parse, "sha256 failed");
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[k]);
  return os.str();
}

std::string report_overlaps(const CVector& v, OverlapFormat format, std::optional<long long> subgroup) {
  const long long d = v.size();
  const OverlapTable t = overlap_phases(v);
  std::ostringstream os;
  json rows = json::array();
  if (format == OverlapFormat::Csv) os << "i,j,re,im,modulus\n";
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j) {
      if (subgroup && (i % *subgroup != 0 || j % *subgroup != 0)) continue;
      const cplx z = t.at(i, j);
      if (format == OverlapFormat::Csv) {
        os << i << ',' << j << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << ','
           << format_double(std::abs(z)) << '\n';
      } else {
        rows.push_back({{"i", i}, {"j", j}, {"re", format_double(z.real())}, {"im", format_double(z.imag())},
                        {"modulus", format_double(std::abs(z))}});
      }
    }
  if (format == OverlapFormat::Json) {
    json j;
    j["dimension"] = d;
    if (subgroup) j["subgroup"] = *subgroup;
    j["overlaps"] = std::move(rows);
    os << j.dump(2) << '\n';
  }
  return os.str();
}

}  // namespace sicl::io
