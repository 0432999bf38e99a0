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

// sicladder: command-line front end.
//
// Exit codes: 0 success, 1 usage or I/O error (or a failed verification),
// 2 search exhausted without a result.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sicl/clifford.hpp"
#include "sicl/climb.hpp"
#include "sicl/error.hpp"
#include "sicl/frames.hpp"
#include "sicl/io.hpp"
#include "sicl/ladder.hpp"
#include "sicl/sic.hpp"

namespace fs = std::filesystem;
using namespace sicl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitExhausted = 2;
constexpr double kVerifyTol = 1e-8;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("SICLADDER_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed SICLADDER_SEED\n";
    }
  }
  return 0;
}

std::string sector_name(int s) {
  static const char* names[] = {"1", "omega", "omega^2"};
  return names[s];
}

std::optional<long long> ladder_base(long long n) {
  const long long r = std::llround(std::sqrt(static_cast<double>(n + 1)));
  if (r * r != n + 1) return std::nullopt;
  const long long d = r + 1;
  if (d < 5 || d % 2 == 0) return std::nullopt;
  return d;
}

struct Row {
  std::string name;
  double error;
  bool pass;
  std::string note;
};

void print_rows(const std::vector<Row>& rows) {
  std::cout << std::left << std::setw(28) << "check" << std::setw(26) << "max_error" << "result\n";
  for (const auto& r : rows) {
    std::cout << std::left << std::setw(28) << r.name << std::setw(26) << io::format_double(r.error) << (r.pass ? "PASS" : "FAIL");
    if (!r.note.empty()) std::cout << "  " << r.note;
    std::cout << "\n";
  }
}

int cmd_fiducial_find(long long dim, std::uint64_t seed, int restarts, const std::string& out) {
  FiducialSearch s = default_fiducial_search(dim);
  s.seed = seed;
  s.restarts = restarts;
  SicFiducial f;
  try {
    f = find_fiducial(s);
  } catch (const Error& e) {
    if (e.code() != Errc::SearchFailed) throw;
    std::cerr << e.what() << "\n";
    return kExitExhausted;
  }
  std::ostringstream prov;
  prov << "fiducial-find dim=" << dim << " seed=" << seed << " restarts=" << restarts << " zauner=" << s.zauner
       << " eigenvalue=" << io::format_double(s.eigenvalue.real()) << "," << io::format_double(s.eigenvalue.imag());
  const io::FiducialFile file = io::make_fiducial_file(f, prov.str());
  io::save_fiducial(file, out);
  std::cout << "dimension " << dim << " defect " << io::format_double(file.defect) << " -> " << out << "\n";
  return file.defect <= s.target_defect ? kExitOk : kExitExhausted;
}

int cmd_climb(const std::string& input, const std::string& sector, bool both, bool conj, int restarts, std::uint64_t seed,
              std::optional<int> budget, int max_evals, const std::string& out) {
  const std::string bytes = io::read_file(input);
  const io::FiducialFile file = io::parse_fiducial(bytes);
  ClimbOptions opt;
  if (sector == "auto") {
    opt.sector_mode = SectorMode::Auto;
  } else if (sector == "all") {
    opt.sector_mode = SectorMode::All;
  } else {
    opt.sector_mode = SectorMode::Fixed;
    if (sector == "1") opt.sector = 0;
    else if (sector == "ω" || sector == "omega" || sector == "w") opt.sector = 1;
    else opt.sector = 2;
  }
  opt.all_generators = both;
  opt.conjugate_pairing = conj;
  opt.search.restarts = restarts;
  opt.search.seed = seed;
  opt.search.term_budget = budget;
  opt.search.max_evals = max_evals;

  ClimbResult r;
  try {
    r = climb(io::to_fiducial(file), opt);
  } catch (const Error& e) {
    if (e.code() == Errc::NotASic || e.code() == Errc::NotSymplectic || e.code() == Errc::BadDimension) {
      std::cerr << "input rejected: " << e.what() << "\n";
      return kExitUsage;
    }
    throw;
  }
  fs::create_directories(out);
  io::write_file(fs::path(out) / "source.json", bytes);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < r.solutions.size(); ++k) {
    const auto& s = r.solutions[k];
    SicFiducial f;
    f.d = r.target_dimension;
    f.vector = s.global_vector;
    fix_largest_phase(f.vector);
    f.symmetry = s.symmetry;
    std::ostringstream prov;
    prov << "climb from d=" << r.source_dimension << " source sha256=" << io::sha256_hex(bytes) << " generator=" << s.generator
         << " sector=" << sector_name(s.sector) << " seed=" << seed;
    names.push_back("fiducial-" + std::to_string(k) + ".json");
    io::save_fiducial(io::make_fiducial_file(f, prov.str()), fs::path(out) / names.back());
  }
  io::write_file(fs::path(out) / "report.json", climb_report_json(r, io::sha256_hex(bytes), names, opt));
  for (const auto& b : r.branches) {
    std::cout << "generator " << b.generator << " sector " << sector_name(b.sector) << ": " << to_string(b.status);
    if (b.status != BranchStatus::InconsistentPairing)
      std::cout << " (" << b.parameter_count << " parameters, " << b.solution_ids.size() << " solutions, best defect "
                << io::format_double(b.best_defect) << ")";
    std::cout << "\n";
  }
  std::cout << r.solutions.size() << " distinct SICs in dimension " << r.target_dimension << " -> " << out << "\n";
  return r.solutions.empty() ? kExitExhausted : kExitOk;
}

void add_alignment_rows(const CVector& tensor, long long d, const std::optional<fs::path>& source, std::vector<Row>& rows) {
  if (source && fs::exists(*source)) {
    const io::FiducialFile src = io::load_fiducial(*source);
    if (src.dimension != d) throw Error(Errc::DimensionMismatch, "source dimension does not match");
    const AlignmentCertificate c = verify_alignment(tensor, overlap_phases(src.vector), kVerifyTol);
    std::string note;
    if (c.matrix_M) {
      std::ostringstream os;
      os << "M = " << *c.matrix_M << " det " << c.det_M << (c.unimodular ? "" : " (not +-1)");
      note = os.str();
    } else {
      note = "no invertible M matches";
    }
    rows.push_back({"alignment small factor", c.max_err_eq14, c.max_err_eq14 <= kVerifyTol, ""});
    rows.push_back({"alignment big factor", c.max_err_eq13, c.matrix_M.has_value(), note});
    return;
  }
  const auto small = small_factor_overlaps(tensor, d);
  const auto big = big_factor_overlaps(tensor, d);
  double e14 = 0.0, e13 = 0.0;
  for (std::size_t p = 1; p < small.size(); ++p) e14 = std::max(e14, std::abs(small[p] - 1.0));
  for (std::size_t p = 1; p < big.size(); ++p) e13 = std::max(e13, std::abs(std::abs(big[p]) - 1.0));
  rows.push_back({"alignment small factor", e14, e14 <= kVerifyTol, ""});
  rows.push_back({"alignment big factor |.|", e13, e13 <= kVerifyTol, "no source fiducial; M not searched"});
}

void add_etf_rows(const CVector& tensor, long long d, std::vector<Row>& rows) {
  try {
    const EmbeddedEtf e = embedded_etf(tensor, d);
    const long long want = d * (d - 1) / 2;
    rows.push_back({"etf rank", static_cast<double>(std::llabs(e.rank - want)), e.rank == want,
                    "rank " + std::to_string(e.rank) + " of " + std::to_string(want)});
    rows.push_back({"etf tight", e.certificate.tight_deviation, e.certificate.tight_deviation <= kVerifyTol, ""});
    rows.push_back({"etf equiangular", e.certificate.max_deviation, e.certificate.max_deviation <= kVerifyTol,
                    "overlap^2 " + io::format_double(e.certificate.common_overlap_sq)});
    const auto [equal, dist] = grassmann_equidistance(translated_subspaces(e.span, d), kVerifyTol);
    rows.push_back({"etf translates equidistant", 0.0, equal, "chordal distance " + io::format_double(dist)});
  } catch (const Error& e) {
    rows.push_back({"etf", 1.0, false, e.what()});
  }
}

int cmd_verify(const std::string& input, const std::string& level, const std::optional<std::string>& source_opt) {
  const io::FiducialFile file = io::load_fiducial(input);
  const CVector& v = file.vector;
  const long long n = file.dimension;
  std::vector<Row> rows;
  const bool all = level == "all";
  if (all || level == "sic") {
    const SicCertificate c = verify_sic(v, kVerifyTol);
    rows.push_back({"norm", c.norm_deviation, c.norm_deviation <= kVerifyTol, ""});
    rows.push_back({"sic tight", c.tight_deviation, c.tight_deviation <= kVerifyTol, ""});
    rows.push_back({"sic equiangular", c.overlap_sq_deviation, c.overlap_sq_deviation <= kVerifyTol,
                    "overlap^2 target " + io::format_double(1.0 / static_cast<double>(n + 1))});
  }
  if (all || level == "design") {
    try {
      const TwoDesignCertificate c = two_design_check(io::to_fiducial(file), kVerifyTol);
      rows.push_back({"2-design", c.max_error, c.passes, "constant " + io::format_double(c.constant)});
    } catch (const Error& e) {
      rows.push_back({"2-design", 1.0, false, e.what()});
    }
  }
  const auto base = ladder_base(n);
  if (all || level == "alignment" || level == "etf") {
    if (!base) {
      if (!all) rows.push_back({level, 1.0, false, "dimension is not of the form d(d-2)"});
    } else {
      const long long d = *base;
      const CVector tensor = crt_to_tensor(v, d - 2, d);
      std::optional<fs::path> source;
      if (source_opt) source = *source_opt;
      else source = fs::path(input).parent_path() / "source.json";
      if (all || level == "alignment") add_alignment_rows(tensor, d, source, rows);
      if (all || level == "etf") add_etf_rows(tensor, d, rows);
    }
  }
  print_rows(rows);
  bool ok = !rows.empty();
  for (const auto& r : rows) ok = ok && r.pass;
  return ok ? kExitOk : kExitUsage;
}

int cmd_report_overlaps(const std::string& input, const std::string& format, std::optional<long long> subgroup,
                        const std::optional<std::string>& out) {
  const io::FiducialFile file = io::load_fiducial(input);
  const std::string text = io::report_overlaps(file.vector, format == "json" ? io::OverlapFormat::Json : io::OverlapFormat::Csv, subgroup);
  if (out) {
    io::write_file(*out, text);
  } else {
    std::cout << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aligned SIC search along the dimension ladder d -> d(d-2)"};
  app.require_subcommand(1);
  const std::uint64_t env_seed = default_seed();

  auto* find = app.add_subcommand("fiducial-find", "search a Zauner eigenspace for a SIC fiducial");
  long long dim = 0;
  std::uint64_t find_seed = env_seed;
  int find_restarts = 30;
  std::string find_out;
  find->add_option("--dim", dim, "odd dimension, 3 to 15")->required()->check([](const std::string& s) -> std::string {
    try {
      const long long d = std::stoll(s);
      if (d >= 3 && d <= 15 && d % 2 == 1) return "";
    } catch (const std::exception&) {
    }
    return "dimension must be odd and between 3 and 15";
  });
  find->add_option("--seed", find_seed, "PRNG seed (default: $SICLADDER_SEED or 0)");
  find->add_option("--restarts", find_restarts, "multistart count")->check(CLI::PositiveNumber);
  find->add_option("--out", find_out, "output fiducial file")->required();

  auto* cl = app.add_subcommand("climb", "search the proto-SIC families in dimension d(d-2)");
  std::string cl_input, cl_sector = "auto", cl_out;
  bool cl_both = false, cl_conj = false;
  int cl_restarts = 20, cl_evals = 4000;
  std::uint64_t cl_seed = env_seed;
  std::optional<int> cl_budget;
  cl->add_option("--input", cl_input, "source fiducial file")->required()->check(CLI::ExistingFile);
  cl->add_option("--sector", cl_sector, "target eigenvalue of the paired symmetry")
      ->check(CLI::IsMember({"auto", "1", "ω", "ω²", "omega", "omega2", "w", "w2", "all"}));
  cl->add_flag("--try-both-generators", cl_both, "try every order-3 Zauner-type generator in dimension d-2");
  cl->add_flag("--conjugate-pairing", cl_conj, "tie the omega and omega^2 blocks by complex conjugation");
  cl->add_option("--restarts", cl_restarts, "multistart count per branch")->check(CLI::PositiveNumber);
  cl->add_option("--seed", cl_seed, "PRNG seed (default: $SICLADDER_SEED or 0)");
  cl->add_option("--term-budget", cl_budget, "overlap terms used during the search")->check(CLI::PositiveNumber);
  cl->add_option("--max-evals", cl_evals, "objective evaluations per Nelder-Mead run")->check(CLI::PositiveNumber);
  cl->add_option("--out", cl_out, "output directory")->required();

  auto* ver = app.add_subcommand("verify", "print a certificate table for a fiducial file");
  std::string ver_input, ver_level = "sic";
  std::optional<std::string> ver_source;
  ver->add_option("--input", ver_input, "fiducial file")->required()->check(CLI::ExistingFile);
  ver->add_option("--level", ver_level, "checks to run")->check(CLI::IsMember({"sic", "alignment", "etf", "design", "all"}));
  ver->add_option("--source", ver_source, "source fiducial for the alignment search (default: source.json beside input)");

  auto* rep = app.add_subcommand("report-overlaps", "print the overlap-phase table");
  std::string rep_input, rep_format = "csv";
  std::optional<long long> rep_subgroup;
  std::optional<std::string> rep_out;
  rep->add_option("--input", rep_input, "fiducial file")->required()->check(CLI::ExistingFile);
  rep->add_option("--format", rep_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  rep->add_option("--subgroup", rep_subgroup, "keep rows with i and j divisible by this factor")->check(CLI::PositiveNumber);
  rep->add_option("--out", rep_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*find) return cmd_fiducial_find(dim, find_seed, find_restarts, find_out);
    if (*cl) return cmd_climb(cl_input, cl_sector, cl_both, cl_conj, cl_restarts, cl_seed, cl_budget, cl_evals, cl_out);
    if (*ver) return cmd_verify(ver_input, ver_level, ver_source);
    if (*rep) return cmd_report_overlaps(rep_input, rep_format, rep_subgroup, rep_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
