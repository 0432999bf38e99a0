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

#include "sicl/climb.hpp"

#include <chrono>
#include <numbers>

#include <json.hpp>

#include "sicl/clifford.hpp"
#include "sicl/error.hpp"
#include "sicl/io.hpp"

namespace sicl {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::optional<Symmetry> global_symmetry(const CVector& v, const ModularMatrix2& f_small, const ModularMatrix2& f_big) {
  try {
    const ModularMatrix2 g = crt_combine_symplectic(f_small, f_big);
    const CMatrix u = fix_phase_to_table(symplectic_unitary(g), 3).U;
    const CVector w = u * v;
    const cplx lambda = v.dot(w);
    if ((w - lambda * v).cwiseAbs().maxCoeff() > kPhysicsTol) return std::nullopt;
    for (int k = 0; k < 3; ++k) {
      const cplx root = std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0);
      if (std::abs(lambda - root) < kPhysicsTol) return Symmetry{g, root};
    }
  } catch (const Error&) {
  }
  return std::nullopt;
}

json matrix_json(const ModularMatrix2& m) {
  const auto& e = m.entries();
  return json{{"matrix", json::array({e[0], e[1], e[2], e[3]})}, {"modulus", m.modulus()}};
}

}  // namespace

std::string to_string(BranchStatus s) {
  switch (s) {
    case BranchStatus::Solutions: return "solutions";
    case BranchStatus::Empty: return "empty branch";
    case BranchStatus::InconsistentPairing: return "inconsistent pairing";
  }
  return "?";
}

ClimbResult climb(const SicFiducial& source_in, const ClimbOptions& options) {
  const auto t0 = Clock::now();
  SicFiducial source = source_in;
  const long long d = source.vector.size();
  require_odd_dimension(d);
  if (d < 5) throw Error(Errc::BadDimension, "the ladder starts at d = 5");
  if (!verify_sic(source.vector, kPhysicsTol)) throw Error(Errc::NotASic, "input is not a SIC fiducial");
  if (!source.symmetry) source.symmetry = find_symmetry(source.vector);
  if (!source.symmetry || source.symmetry->F.order() != 3)
    throw Error(Errc::NotSymplectic, "input fiducial has no order-3 symmetry");

  ClimbResult r;
  r.source_dimension = d;
  r.target_dimension = d * (d - 2);
  r.source_symmetry = source.symmetry->F;
  const long long s = d - 2;
  if (options.all_generators) {
    r.generators = zauner_type_elements(s);
  } else {
    const ModularMatrix2 g = preferred_zauner(s);
    r.generators = {g};
    if (!(g * g == g)) r.generators.push_back(g * g);
  }
  switch (options.sector_mode) {
    case SectorMode::Fixed: r.sectors_tried = {static_cast<int>(mod(options.sector, 3))}; break;
    default: r.sectors_tried = {0, 1, 2}; break;
  }

  const GeneralizedParity p_theta = generalized_parity(source);
  const OverlapTable table = overlap_phases(source.vector);
  const ModularMatrix2 f_big = HMatrix::of(d).conjugate(source.symmetry->F);

  for (const ModularMatrix2& gen : r.generators) {
    const PairedBases bases = paired_bases(source, gen, p_theta);
    for (int sector : r.sectors_tried) {
      const auto tb = Clock::now();
      BranchOutcome b;
      b.generator = gen;
      b.sector = sector;
      ProtoFamily fam;
      try {
        fam = make_family(bases, sector, options.conjugate_pairing);
      } catch (const Error& e) {
        if (e.code() != Errc::BadPairing) throw;
        b.status = BranchStatus::InconsistentPairing;
        b.detail = e.what();
        b.seconds = seconds_since(tb);
        r.branches.push_back(b);
        continue;
      }
      b.parameter_count = fam.param_count();
      for (const auto& blk : fam.blocks) b.block_sizes.push_back(static_cast<int>(blk.f_index.size()));
      const auto results = minimize(fam, options.search);
      b.best_defect = results.empty() ? 1.0 : results.front().defect_full;
      for (const auto& res : solutions(results, options.accept_defect)) {
        ClimbSolution sol;
        sol.tensor_vector = build_proto(fam, res.params);
        sol.global_vector = crt_from_tensor(sol.tensor_vector, s, d);
        int id = -1;
        for (std::size_t k = 0; k < r.solutions.size(); ++k)
          if (std::abs(std::abs(r.solutions[k].global_vector.dot(sol.global_vector)) - 1.0) < 1e-8) id = static_cast<int>(k);
        if (id < 0) {
          sol.params = res.params;
          sol.generator = gen;
          sol.sector = sector;
          sol.defect_full = res.defect_full;
          sol.sic = verify_sic(sol.global_vector, kPhysicsTol);
          sol.alignment = verify_alignment(sol.tensor_vector, table, kPhysicsTol);
          sol.symmetry = global_symmetry(sol.global_vector, gen, f_big);
          if (d == 5 && fam.param_count() == 1) sol.phase5 = check_known_phase_5(res.params[0]);
          if (d == 7 && fam.param_count() == 1) sol.polynomial35 = check_known_polynomial_35(res.params[0]);
          id = static_cast<int>(r.solutions.size());
          r.solutions.push_back(std::move(sol));
        }
        b.solution_ids.push_back(id);
      }
      b.status = b.solution_ids.empty() ? BranchStatus::Empty : BranchStatus::Solutions;
      b.seconds = seconds_since(tb);
      r.branches.push_back(b);
      if (options.sector_mode == SectorMode::Auto && b.status == BranchStatus::Solutions) break;
    }
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::string climb_report_json(const ClimbResult& r, const std::string& source_sha256,
                              const std::vector<std::string>& solution_files, const ClimbOptions& options) {
  json j;
  j["schema_version"] = io::kSchemaVersion;
  j["source"] = {{"sha256", source_sha256}, {"dimension", r.source_dimension}, {"symmetry", matrix_json(r.source_symmetry)}};
  j["target_dimension"] = r.target_dimension;
  const char* mode = options.sector_mode == SectorMode::Auto ? "auto" : options.sector_mode == SectorMode::All ? "all" : "fixed";
  j["settings"] = {{"sector_mode", mode},
                   {"all_generators", options.all_generators},
                   {"conjugate_pairing", options.conjugate_pairing},
                   {"restarts", options.search.restarts},
                   {"seed", options.search.seed},
                   {"max_evals", options.search.max_evals},
                   {"term_budget", options.search.term_budget ? json(*options.search.term_budget) : json(nullptr)},
                   {"accept_defect", io::format_double(options.accept_defect)}};
  j["sectors_tried"] = r.sectors_tried;
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back(matrix_json(g));
  j["generators"] = gens;

  json branches = json::array();
  for (const auto& b : r.branches) {
    json jb = {{"generator", matrix_json(b.generator)}, {"sector", b.sector}, {"status", to_string(b.status)}};
    if (b.status == BranchStatus::InconsistentPairing) {
      jb["detail"] = b.detail;
    } else {
      jb["parameter_count"] = b.parameter_count;
      jb["block_sizes"] = b.block_sizes;
      jb["best_defect"] = io::format_double(b.best_defect);
      jb["solutions"] = b.solution_ids;
    }
    jb["seconds"] = b.seconds;
    branches.push_back(jb);
  }
  j["branches"] = branches;

  json sols = json::array();
  for (std::size_t k = 0; k < r.solutions.size(); ++k) {
    const auto& s = r.solutions[k];
    json params = json::array();
    for (double x : s.params) params.push_back(io::format_double(x));
    json js = {{"id", k},
               {"file", k < solution_files.size() ? json(solution_files[k]) : json(nullptr)},
               {"generator", matrix_json(s.generator)},
               {"sector", s.sector},
               {"params", params},
               {"defect_full", io::format_double(s.defect_full)},
               {"sic", {{"passes", s.sic.passes},
                        {"tight_deviation", io::format_double(s.sic.tight_deviation)},
                        {"overlap_sq_deviation", io::format_double(s.sic.overlap_sq_deviation)}}}};
    json ja = {{"passes", s.alignment.passes},
               {"max_err_eq13", io::format_double(s.alignment.max_err_eq13)},
               {"max_err_eq14", io::format_double(s.alignment.max_err_eq14)}};
    if (s.alignment.matrix_M) {
      ja["M"] = matrix_json(*s.alignment.matrix_M);
      ja["det_M"] = s.alignment.det_M;
      ja["unimodular"] = s.alignment.unimodular;
    }
    js["alignment"] = ja;
    if (s.phase5)
      js["phase_check"] = {{"matches_P5", s.phase5->matches}, {"branch", s.phase5->branch},
                           {"residual", io::format_double(s.phase5->residual)}};
    if (s.polynomial35)
      js["polynomial_check"] = {{"literal", s.polynomial35->literal},
                                {"palindromic", s.polynomial35->palindromic},
                                {"literal_residual", io::format_double(s.polynomial35->literal_residual)},
                                {"palindromic_residual", io::format_double(s.polynomial35->palindromic_residual)}};
    sols.push_back(js);
  }
  j["solutions"] = sols;
  j["timing"] = {{"total_seconds", r.seconds}};
  return j.dump(2) + "\n";
}

}  // namespace sicl
