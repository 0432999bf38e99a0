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

#include "sicl/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "sicl/error.hpp"
#include "sicl/nelder_mead.hpp"
#include "sicl/overlap.hpp"
#include "sicl/parallel.hpp"

namespace sicl {

std::vector<DispIndex> generic_terms(long long d, int budget) {
  const long long n = d * (d - 2);
  std::vector<DispIndex> out;
  for (long long i = 0; i < n && static_cast<int>(out.size()) < budget; ++i)
    for (long long j = 0; j < n && static_cast<int>(out.size()) < budget; ++j) {
      const auto [a, b] = crt_split_index({i, j}, d - 2, d);
      if ((a.i != 0 || a.j != 0) && (b.i != 0 || b.j != 0)) out.push_back({i, j});
    }
  return out;
}

std::vector<SearchResult> minimize(const ProtoFamily& family, const SearchConfig& cfg) {
  const long long n = family.d * (family.d - 2);
  const OverlapEngine engine(n);
  const std::vector<DispIndex> terms = cfg.term_budget ? generic_terms(family.d, *cfg.term_budget) : std::vector<DispIndex>{};
  auto partial = [&](const CVector& v) { return cfg.term_budget ? engine.defect(v.data(), terms) : engine.defect(v.data()); };
  const Objective f = [&](const std::vector<double>& x) { return partial(proto_global(family, x)); };

  NelderMeadOptions opt;
  opt.max_evals = cfg.max_evals;
  opt.max_iters = cfg.max_iters;
  opt.initial_step = cfg.simplex_scale;
  opt.xatol = 1e-12;
  opt.fatol = 1e-32;
  opt.f_target = 1e-28;

  struct Raw {
    std::vector<double> x;
    double f = 0.0;
    int iterations = 0;
  };
  std::vector<Raw> raw(static_cast<std::size_t>(std::max(0, cfg.restarts)));
  parallel_for(raw.size(), [&](std::size_t idx) {
    std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(idx)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x0(family.kinds.size());
    for (std::size_t k = 0; k < x0.size(); ++k) {
      const double u = unit(rng);
      switch (family.kinds[k]) {
        case ParamKind::Phase: x0[k] = 2.0 * std::numbers::pi * u; break;
        case ParamKind::HalfAngle: x0[k] = std::numbers::pi * u; break;
        case ParamKind::Free: x0[k] = std::numbers::pi * (2.0 * u - 1.0); break;
      }
    }
    NelderMeadResult r = nelder_mead(f, x0, opt);
    int iters = r.iterations;
    // Only promising end points are polished; the rest are local minima.
    for (int polish = 0; polish < 3 && r.f > opt.f_target && r.f < 1e-6; ++polish) {
      NelderMeadOptions o2 = opt;
      o2.initial_step = polish == 0 ? cfg.simplex_scale * 0.1 : 1e-3;
      const NelderMeadResult r2 = nelder_mead(f, r.x, o2);
      iters += r2.iterations;
      if (!(r2.f < r.f)) break;
      r = r2;
    }
    raw[idx] = {r.x, r.f, iters};
  });

  std::vector<SearchResult> out;
  std::vector<CVector> seen;
  for (std::size_t idx = 0; idx < raw.size(); ++idx) {
    SearchResult res;
    res.params = canonicalize_params(family, raw[idx].x);
    const CVector v = proto_global(family, res.params);
    res.defect_partial = partial(v);
    res.defect_full = engine.defect(v.data());
    res.iterations = raw[idx].iterations;
    res.seed_used = cfg.seed;
    res.restart = static_cast<int>(idx);
    bool dup = false;
    for (std::size_t k = 0; k < seen.size() && !dup; ++k) {
      if (std::abs(std::abs(seen[k].dot(v)) - 1.0) < 1e-8) {
        dup = true;
        if (res.defect_full < out[k].defect_full) out[k] = res;
      }
    }
    if (dup) continue;
    seen.push_back(v);
    out.push_back(std::move(res));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.defect_full < b.defect_full; });
  return out;
}

std::vector<SearchResult> solutions(const std::vector<SearchResult>& results, double threshold) {
  std::vector<SearchResult> out;
  for (const auto& r : results)
    if (r.defect_full <= threshold) out.push_back(r);
  return out;
}

KnownPhaseCheck check_known_phase_5(double sigma, double tol) {
  const cplx p5(kP5Re, kP5Im);
  const cplx z = std::polar(1.0, sigma);
  KnownPhaseCheck c;
  c.residual = std::abs(z * z * z - p5);
  c.matches = c.residual <= tol;
  const cplx ratio = z / std::pow(p5, 1.0 / 3.0);
  double best = 1e300;
  for (int k = 0; k < 3; ++k) {
    const double e = std::abs(ratio - std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0));
    if (e < best) {
      best = e;
      c.branch = k;
    }
  }
  return c;
}

PolynomialCheck check_known_polynomial_35(double sigma, double tol) {
  // Descending powers t^8 .. t^0.
  constexpr std::array<double, 9> palindromic{4375, -35000, 19222300, 70190980, 102366979, 70190980, 19222300, -35000, 4375};
  constexpr std::array<double, 9> literal{4375, -35000, 19222300, 70190980, 102366979, 70190980, 19222300, 0, -35000 + 4375};
  const cplx t = std::polar(1.0, 6.0 * sigma);
  auto residual = [&](const std::array<double, 9>& c) {
    cplx acc = 0.0;
    double norm = 0.0;
    for (double x : c) {
      acc = acc * t + x;
      norm += x * x;
    }
    return std::abs(acc) / std::sqrt(norm);
  };
  PolynomialCheck out;
  out.literal_residual = residual(literal);
  out.palindromic_residual = residual(palindromic);
  out.literal = out.literal_residual <= tol;
  out.palindromic = out.palindromic_residual <= tol;
  return out;
}

bool equator_geometry_check(const std::vector<CVector>& solutions, const CMatrix& symmetry, double tol) {
  if (solutions.size() != 3) throw Error(Errc::WrongCount, "equator check needs exactly three vectors");
  auto fs = [](const CVector& a, const CVector& b) { return std::acos(std::min(1.0, std::abs(a.dot(b)) / (a.norm() * b.norm()))); };
  const double d01 = fs(solutions[0], solutions[1]);
  const double d02 = fs(solutions[0], solutions[2]);
  const double d12 = fs(solutions[1], solutions[2]);
  const bool equal = std::max({d01, d02, d12}) - std::min({d01, d02, d12}) <= tol;
  bool permuted = true;
  for (const auto& s : solutions) {
    const CVector image = symmetry * s;
    bool hit = false;
    for (const auto& t : solutions)
      if (std::abs(std::abs(t.dot(image)) / (t.norm() * image.norm()) - 1.0) <= tol) hit = true;
    permuted = permuted && hit;
  }
  return equal && permuted;
}

}  // namespace sicl
