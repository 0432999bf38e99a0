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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <json.hpp>

#include "sicl/clifford.hpp"
#include "sicl/climb.hpp"
#include "sicl/error.hpp"
#include "sicl/heisenberg.hpp"
#include "sicl/nelder_mead.hpp"
#include "sicl/optimizer.hpp"
#include "sicl/overlap.hpp"
#include "support.hpp"

using namespace sicl;

namespace {

ProtoFamily family(const SicFiducial& f, const ModularMatrix2& gen, int sector, bool conj) {
  return make_family(paired_bases(f, gen, generalized_parity(f)), sector, conj);
}

const ClimbResult& climb5() {
  static const ClimbResult r = climb(test::sic5(), ClimbOptions{});
  return r;
}

}  // namespace

TEST_CASE("Nelder-Mead minimizes standard test functions") {
  const Objective rosen = [](const std::vector<double>& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions opt;
  opt.xatol = 1e-10;
  opt.fatol = 1e-20;
  const NelderMeadResult r = nelder_mead(rosen, {-1.2, 1.0}, opt);
  CHECK(std::abs(r.x[0] - 1.0) < 1e-6);
  CHECK(std::abs(r.x[1] - 1.0) < 1e-6);
  CHECK(r.evaluations <= opt.max_evals);

  const Objective quad = [](const std::vector<double>& x) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += static_cast<double>(k + 1) * (x[k] - 0.5) * (x[k] - 0.5);
    return s;
  };
  const NelderMeadResult q = nelder_mead(quad, std::vector<double>(6, 0.0), opt);
  for (double v : q.x) CHECK(std::abs(v - 0.5) < 1e-6);
}

TEST_CASE("Nelder-Mead honours its budgets and target") {
  int calls = 0;
  const Objective f = [&](const std::vector<double>& x) {
    ++calls;
    return x[0] * x[0] + x[1] * x[1];
  };
  NelderMeadOptions opt;
  opt.max_evals = 50;
  const NelderMeadResult r = nelder_mead(f, {3.0, 4.0}, opt);
  CHECK(r.evaluations <= 50 + 4);
  CHECK(calls == r.evaluations);
  opt.max_evals = 10000;
  opt.f_target = 1e-3;
  CHECK(nelder_mead(f, {3.0, 4.0}, opt).f <= 1e-3);
}

TEST_CASE("generic terms avoid both factor subgroups") {
  const auto t = generic_terms(5, 40);
  CHECK(t.size() == 40);
  std::set<std::pair<long long, long long>> seen;
  for (const auto& p : t) {
    const auto [a, b] = crt_split_index(p, 3, 5);
    CHECK(!(a.i == 0 && a.j == 0));
    CHECK(!(b.i == 0 && b.j == 0));
    seen.insert({p.i, p.j});
  }
  CHECK(seen.size() == t.size());
}

TEST_CASE("known phase at d = 5") {
  CHECK_FALSE(check_known_phase_5(0.0).matches);
  const double base = std::arg(std::pow(cplx(-0.8, -0.6), 1.0 / 3.0));
  std::set<int> branches;
  for (int n = 0; n < 3; ++n) {
    const auto c = check_known_phase_5(base + 2.0 * std::numbers::pi * n / 3.0);
    CHECK(c.matches);
    branches.insert(c.branch);
  }
  CHECK(branches == std::set<int>{0, 1, 2});
}

TEST_CASE("known polynomial at d = 7") {
  const PolynomialCheck zero = check_known_polynomial_35(0.0);
  CHECK_FALSE(zero.any());
  CHECK(zero.palindromic_residual > 0.5);
}

TEST_CASE("d = 5 family: three solutions whose cubes give the known phase up to conjugation") {
  // A fiducial and its complex conjugate give conjugate phases; exactly one of
  // the pair reproduces the stated value.
  const SicFiducial& f = test::sic5();
  const CVector cv = f.vector.conjugate();
  const auto sym = find_symmetry(cv);
  REQUIRE(sym.has_value());
  const SicFiducial g{5, cv, sym, "conjugate"};
  int matching_sources = 0;
  for (const SicFiducial* src : {&f, &g}) {
    const ClimbResult r = climb(*src, ClimbOptions{});
    REQUIRE(r.solutions.size() == 3);
    std::set<int> branches;
    int matches = 0, conj_matches = 0;
    for (const auto& s : r.solutions) {
      CHECK(s.defect_full <= 1e-16);
      CHECK(verify_sic(s.global_vector, 1e-8).passes);
      matches += check_known_phase_5(s.params[0]).matches;
      conj_matches += check_known_phase_5(-s.params[0]).matches;
      branches.insert(check_known_phase_5(s.params[0]).branch);
    }
    CHECK(matches + conj_matches == 3);
    CHECK((matches == 0 || matches == 3));
    if (matches == 3) {
      ++matching_sources;
      CHECK(branches.size() == 3);
    }
  }
  CHECK(matching_sources == 1);
}

TEST_CASE("d = 5 family: three distinct solutions modulo 2 pi") {
  const ProtoFamily fam = family(test::sic5(), ModularMatrix2(1, 0, 2, 1, 3), 1, false);
  SearchConfig cfg;
  cfg.restarts = 20;
  const auto sols = solutions(minimize(fam, cfg), 1e-10);
  CHECK(sols.size() == 3);
  for (const auto& s : sols) CHECK(std::abs(std::pow(std::polar(1.0, s.params[0]), 3.0).imag()) > 0.1);
}

TEST_CASE("minimize is deterministic in the seed") {
  const ProtoFamily fam = family(test::sic5(), ModularMatrix2(1, 0, 2, 1, 3), 1, false);
  SearchConfig cfg;
  cfg.restarts = 4;
  cfg.seed = 99;
  const auto a = minimize(fam, cfg), b = minimize(fam, cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].params == b[k].params);
}

TEST_CASE("empty branch at d = 5") {
  const ProtoFamily fam = family(test::sic5(), ModularMatrix2(1, 0, 1, 1, 3), 2, false);
  SearchConfig cfg;
  cfg.restarts = 20;
  const auto res = minimize(fam, cfg);
  REQUIRE(!res.empty());
  CHECK(res.front().defect_full > 1e-10);
  CHECK(solutions(res, 1e-10).empty());
}

TEST_CASE("d = 7 family with conjugate pairing") {
  const ProtoFamily fam = family(test::sic7_real(), preferred_zauner(5), 0, true);
  SearchConfig cfg;
  cfg.restarts = 20;
  const auto sols = solutions(minimize(fam, cfg), 1e-12);
  REQUIRE(sols.size() >= 3);
  for (const auto& s : sols) {
    CHECK(s.defect_full <= 1e-12);
    const auto p = check_known_polynomial_35(s.params[0]);
    CHECK(p.any());
    CHECK(check_known_polynomial_35(-s.params[0]).any());
  }
}

TEST_CASE("equator geometry of the three d = 15 fiducials") {
  const ClimbResult& r = climb5();
  REQUIRE(r.solutions.size() == 3);
  std::vector<CVector> t;
  for (const auto& s : r.solutions) t.push_back(s.tensor_vector);
  const CMatrix ug = fix_phase_to_table(symplectic_unitary(r.solutions[0].generator), 3).U;
  CHECK(equator_geometry_check(t, kron(ug, CMatrix::Identity(5, 5))));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) CHECK(std::abs(std::abs(t[a].dot(t[b])) - 0.5) < 1e-8);

  std::vector<CVector> ent;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    CVector v = CVector::Zero(15);
    for (int k = 0; k < 3; ++k) v(k * 5 + k) = 1.0 / std::sqrt(3.0);
    ent.push_back(kron(test::random_unitary(3, seed), test::random_unitary(5, seed + 10)) * v);
  }
  CHECK_FALSE(equator_geometry_check(ent, kron(ug, CMatrix::Identity(5, 5))));
  CHECK_THROWS_AS(equator_geometry_check({t[0], t[1]}, CMatrix::Identity(15, 15)), Error);
}

TEST_CASE("climb from d = 5") {
  const ClimbResult& r = climb5();
  CHECK(r.target_dimension == 15);
  for (const auto& s : r.solutions) {
    CHECK(s.sic.passes);
    CHECK(s.alignment.passes);
    REQUIRE(s.phase5.has_value());
    CHECK(s.symmetry.has_value());
    CHECK(verify_sic(s.global_vector, 1e-8).passes);
    CHECK((crt_to_tensor(s.global_vector, 3, 5) - s.tensor_vector).norm() < 1e-12);
  }
  bool saw_empty = false, saw_bad = false;
  for (const auto& b : r.branches) {
    saw_empty = saw_empty || b.status == BranchStatus::Empty;
    saw_bad = saw_bad || b.status == BranchStatus::InconsistentPairing;
    if (b.status == BranchStatus::Solutions) CHECK(b.solution_ids.size() == 3);
  }
  CHECK(saw_empty);
  CHECK(saw_bad);
}

TEST_CASE("climb over all generators: four succeed, four are empty") {
  ClimbOptions opt;
  opt.all_generators = true;
  opt.sector_mode = SectorMode::All;
  const ClimbResult r = climb(test::sic5(), opt);
  CHECK(r.generators.size() == 8);
  int with = 0, empty = 0;
  for (const auto& g : r.generators) {
    bool any = false, tried = false;
    for (const auto& b : r.branches) {
      if (!(b.generator == g) || b.status == BranchStatus::InconsistentPairing) continue;
      tried = true;
      any = any || b.status == BranchStatus::Solutions;
    }
    if (any) ++with;
    else if (tried) ++empty;
  }
  CHECK(with == 4);
  CHECK(empty == 4);
}

TEST_CASE("climb report lists every branch") {
  const ClimbResult& r = climb5();
  const auto js = nlohmann::json::parse(climb_report_json(r, "abc", {"a.json", "b.json", "c.json"}, ClimbOptions{}));
  CHECK(js["source"]["sha256"] == "abc");
  CHECK(js["target_dimension"] == 15);
  CHECK(js["branches"].size() == r.branches.size());
  int empty = 0;
  for (const auto& b : js["branches"])
    if (b["status"] == "empty branch") {
      ++empty;
      CHECK(b["solutions"].empty());
    }
  CHECK(empty >= 1);
  CHECK(js["solutions"].size() == 3);
  CHECK(js["solutions"][0]["alignment"].contains("M"));
}

TEST_CASE("climb rejects a non-SIC input") {
  SicFiducial bad{5, test::random_unit(5, 1), Symmetry{zauner_matrix_standard(5), 1.0}, ""};
  CHECK_THROWS_AS(climb(bad, ClimbOptions{}), Error);
}

TEST_CASE("reported solutions are local minima") {
  const ProtoFamily fam = family(test::sic7_real(), preferred_zauner(5), 0, false);
  SearchConfig cfg;
  cfg.restarts = 10;
  const auto sols = solutions(minimize(fam, cfg), 1e-10);
  REQUIRE(!sols.empty());
  const OverlapEngine engine(35);
  for (const auto& s : sols)
    for (std::size_t k = 0; k < s.params.size(); ++k)
      for (double h : {-1e-6, 1e-6}) {
        auto x = s.params;
        x[k] += h;
        CHECK(s.defect_full <= engine.defect(proto_global(fam, x).data()));
      }
}

TEST_CASE("partial objective is sound") {
  const ProtoFamily fam = family(test::sic5(), ModularMatrix2(1, 0, 2, 1, 3), 1, false);
  SearchConfig cfg;
  cfg.restarts = 20;
  cfg.term_budget = 30;
  int checked = 0;
  for (const auto& r : minimize(fam, cfg))
    if (r.defect_partial <= 1e-18) {
      ++checked;
      CHECK(r.defect_full <= 1e-10);
    }
  CHECK(checked >= 3);
}
