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

#include "sicl/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sicl {

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opt) {
  const std::size_t n = x0.size();
  NelderMeadResult res;
  if (n == 0) {
    res.x = std::move(x0);
    res.f = f(res.x);
    res.evaluations = 1;
    return res;
  }
  const double dn = static_cast<double>(n);
  const double rho = 1.0;
  const double chi = opt.adaptive ? 1.0 + 2.0 / dn : 2.0;
  const double psi = opt.adaptive ? 0.75 - 1.0 / (2.0 * dn) : 0.5;
  const double sigma = opt.adaptive ? 1.0 - 1.0 / dn : 0.5;

  std::vector<std::vector<double>> sim(n + 1, x0);
  for (std::size_t k = 0; k < n; ++k) sim[k + 1][k] += opt.initial_step;
  std::vector<double> fv(n + 1);
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  for (std::size_t k = 0; k <= n; ++k) fv[k] = eval(sim[k]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> s2(n + 1);
    std::vector<double> f2(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      s2[k] = std::move(sim[order[k]]);
      f2[k] = fv[order[k]];
    }
    sim = std::move(s2);
    fv = std::move(f2);
  };
  auto affine = [&](const std::vector<double>& c, const std::vector<double>& w, double t) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = c[k] + t * (c[k] - w[k]);
    return out;
  };

  sort_simplex();
  int iters = 0;
  while (evals < opt.max_evals && iters < opt.max_iters) {
    double xspread = 0.0, fspread = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      fspread = std::max(fspread, std::abs(fv[k] - fv[0]));
      for (std::size_t m = 0; m < n; ++m) xspread = std::max(xspread, std::abs(sim[k][m] - sim[0][m]));
    }
    if (xspread <= opt.xatol && fspread <= opt.fatol) break;
    if (fv[0] <= opt.f_target) break;
    ++iters;

    std::vector<double> c(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m) c[m] += sim[k][m] / dn;

    const std::vector<double> xr = affine(c, sim[n], rho);
    const double fr = eval(xr);
    bool shrink = false;
    if (fr < fv[0]) {
      const std::vector<double> xe = affine(c, sim[n], rho * chi);
      const double fe = eval(xe);
      if (fe < fr) {
        sim[n] = xe;
        fv[n] = fe;
      } else {
        sim[n] = xr;
        fv[n] = fr;
      }
    } else if (fr < fv[n - 1]) {
      sim[n] = xr;
      fv[n] = fr;
    } else if (fr < fv[n]) {
      const std::vector<double> xc = affine(c, sim[n], psi * rho);
      const double fc = eval(xc);
      if (fc <= fr) {
        sim[n] = xc;
        fv[n] = fc;
      } else {
        shrink = true;
      }
    } else {
      const std::vector<double> xcc = affine(c, sim[n], -psi);
      const double fcc = eval(xcc);
      if (fcc < fv[n]) {
        sim[n] = xcc;
        fv[n] = fcc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t m = 0; m < n; ++m) sim[k][m] = sim[0][m] + sigma * (sim[k][m] - sim[0][m]);
        fv[k] = eval(sim[k]);
      }
    }
    sort_simplex();
  }
  res.x = sim[0];
  res.f = fv[0];
  res.iterations = iters;
  res.evaluations = evals;
  return res;
}

}  // namespace sicl
