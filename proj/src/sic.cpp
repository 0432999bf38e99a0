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

#include "sicl/sic.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "sicl/clifford.hpp"
#include "sicl/error.hpp"
#include "sicl/heisenberg.hpp"
#include "sicl/nelder_mead.hpp"
#include "sicl/overlap.hpp"
#include "sicl/parallel.hpp"

namespace sicl {

OverlapTable overlap_phases(const CVector& v) {
  const long long d = v.size();
  OverlapTable t;
  t.d = d;
  t.phases = OverlapEngine(d).table(v);
  const double s = std::sqrt(static_cast<double>(d + 1));
  for (auto& x : t.phases) x *= s;
  t.phases[0] = 1.0;
  for (std::size_t p = 1; p < t.phases.size(); ++p) t.defect = std::max(t.defect, std::abs(std::abs(t.phases[p]) - 1.0));
  return t;
}

double sic_defect(const CVector& v, long long d) {
  if (v.size() != d) throw Error(Errc::DimensionMismatch, "sic_defect: vector length");
  return OverlapEngine(d).defect(v.data());
}

std::vector<CVector> weyl_orbit(const CVector& v) {
  const long long d = v.size();
  PhaseConstants pc(d);
  std::vector<CVector> out;
  out.reserve(static_cast<std::size_t>(d * d));
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j) out.push_back(apply_displacement(pc, {i, j}, v));
  return out;
}

SicCertificate verify_sic(const CVector& v, double tol) {
  const long long d = v.size();
  require_odd_dimension(d);
  SicCertificate c;
  c.norm_deviation = std::abs(v.norm() - 1.0);
  const CMatrix g = columns_to_matrix(weyl_orbit(v));
  c.tight_deviation = max_abs(g * g.adjoint() - static_cast<double>(d) * CMatrix::Identity(d, d));
  // |<D_p v|D_q v>| = |<v|D_{q-p}|v>|, so the distinct orbit pairs see every p != 0.
  const std::vector<cplx> t = OverlapEngine(d).table(v);
  const double target = 1.0 / static_cast<double>(d + 1);
  for (std::size_t p = 1; p < t.size(); ++p) c.overlap_sq_deviation = std::max(c.overlap_sq_deviation, std::abs(std::norm(t[p]) - target));
  c.passes = c.norm_deviation <= tol && c.tight_deviation <= tol && c.overlap_sq_deviation <= tol;
  return c;
}

TwoDesignCertificate two_design_check(const std::vector<CVector>& vectors, double tol) {
  TwoDesignCertificate c;
  if (vectors.empty()) return c;
  const long long d = vectors.front().size();
  CMatrix g(d * d, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) g.col(static_cast<Eigen::Index>(k)) = kron(vectors[k], vectors[k]);
  const CMatrix s = g * g.adjoint();
  CMatrix sym = CMatrix::Zero(d * d, d * d);
  for (long long a = 0; a < d; ++a)
    for (long long b = 0; b < d; ++b) {
      sym(a * d + b, a * d + b) += 0.5;
      sym(a * d + b, b * d + a) += 0.5;
    }
  const double dim_sym = static_cast<double>(d * (d + 1) / 2);
  c.constant = s.trace().real() / dim_sym;
  c.max_error = max_abs(s - c.constant * sym);
  c.passes = c.max_error <= tol;
  return c;
}

TwoDesignCertificate two_design_check(const SicFiducial& f, double tol) {
  if (!verify_sic(f.vector, kPhysicsTol)) throw Error(Errc::NotASic, "two_design_check needs a SIC fiducial");
  // Summing the orbit over j dephases onto r1 + r2 = s1 + s2 (mod d), which
  // multiplies by d; the sum over i shifts both factors. Entries off that set
  // vanish exactly, as do those of Pi_sym.
  const long long d = f.d > 0 ? f.d : f.vector.size();
  const CVector& v = f.vector;
  TwoDesignCertificate c;
  const double dim_sym = static_cast<double>(d * (d + 1) / 2);
  c.constant = static_cast<double>(d * d) / dim_sym;
  double trace = 0.0, err = 0.0;
  for (long long r1 = 0; r1 < d; ++r1)
    for (long long r2 = 0; r2 < d; ++r2)
      for (long long s1 = 0; s1 < d; ++s1) {
        const long long s2 = mod(r1 + r2 - s1, d);
        cplx acc = 0.0;
        for (long long i = 0; i < d; ++i)
          acc += v(mod(r1 - i, d)) * v(mod(r2 - i, d)) * std::conj(v(mod(s1 - i, d)) * v(mod(s2 - i, d)));
        acc *= static_cast<double>(d);
        if (r1 == s1 && r2 == s2) trace += acc.real();
        const double pi_sym = 0.5 * ((r1 == s1 && r2 == s2) + (r1 == s2 && r2 == s1));
        err = std::max(err, std::abs(acc - c.constant * pi_sym));
      }
  c.constant = trace / dim_sym;
  c.max_error = err;
  c.passes = err <= tol;
  return c;
}

bool is_real_up_to_phase(const CVector& v, double tol) {
  CVector w = v;
  fix_largest_phase(w);
  return w.imag().cwiseAbs().maxCoeff() <= tol;
}

FiducialSearch default_fiducial_search(long long d) {
  require_odd_dimension(d);
  FiducialSearch s;
  s.d = d;
  s.zauner = zauner_matrix_standard(d);
  s.eigenvalue = 1.0;
  if (d % 6 == 5) {
    s.eigenvalue = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  } else if (d % 6 == 1) {
    for (const auto& m : zauner_type_elements(d))
      if (m.is_diagonal()) {
        s.zauner = m;
        break;
      }
  }
  return s;
}

namespace {

struct RestartOutcome {
  CVector v;
  double defect = 1.0;
};

}  // namespace

std::vector<SicFiducial> find_fiducials(const FiducialSearch& s) {
  const long long d = s.d;
  require_odd_dimension(d);
  const SymplecticUnitary u = fix_phase_to_table(symplectic_unitary(s.zauner), 3);
  const CMatrix q = columns_to_matrix(eigenspace_basis(u.U, s.eigenvalue));
  const Eigen::Index n = q.cols();
  const OverlapEngine engine(d);

  auto to_vector = [&](const std::vector<double>& x) {
    CVector c(n);
    for (Eigen::Index k = 0; k < n; ++k) c(k) = cplx(x[2 * k], x[2 * k + 1]);
    CVector v = q * c;
    const double nv = v.norm();
    return nv > 0 ? CVector(v / nv) : v;
  };
  const Objective f = [&](const std::vector<double>& x) {
    const CVector v = to_vector(x);
    return engine.defect(v.data());
  };

  NelderMeadOptions opt;
  opt.max_evals = 30000;
  opt.initial_step = 0.25;
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(std::max(0, s.restarts)));
  parallel_for(outcomes.size(), [&](std::size_t idx) {
    std::seed_seq seq{s.seed, static_cast<std::uint64_t>(idx)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    std::vector<double> x0(2 * n);
    for (auto& x : x0) x = normal(rng);
    NelderMeadResult r = nelder_mead(f, x0, opt);
    // Polish: a fresh simplex around the best point.
    for (int polish = 0; polish < 2 && r.f > 1e-20 && r.f < 1e-4; ++polish) {
      NelderMeadOptions o2 = opt;
      o2.initial_step = 1e-3;
      r = nelder_mead(f, r.x, o2);
    }
    outcomes[idx].v = to_vector(r.x);
    outcomes[idx].defect = r.f;
  });

  std::vector<SicFiducial> out;
  for (const auto& o : outcomes) {
    if (!(o.defect <= s.target_defect)) continue;
    CVector v = o.v;
    fix_largest_phase(v);
    bool dup = false;
    for (const auto& e : out)
      if (std::abs(std::abs(e.vector.dot(v)) - 1.0) < 1e-8) dup = true;
    if (dup) continue;
    SicFiducial fid;
    fid.d = d;
    fid.vector = v;
    fid.symmetry = Symmetry{s.zauner, s.eigenvalue};
    fid.label = "d" + std::to_string(d) + "-" + std::to_string(out.size());
    out.push_back(std::move(fid));
  }
  return out;
}

SicFiducial find_fiducial(const FiducialSearch& s) {
  auto all = find_fiducials(s);
  if (all.empty()) throw Error(Errc::SearchFailed, "no fiducial reached the target defect in dimension " + std::to_string(s.d));
  for (auto& f : all)
    if (is_real_up_to_phase(f.vector)) return f;
  return all.front();
}

SicFiducial find_fiducial(long long d, const ModularMatrix2& zauner, cplx eigenvalue, int restarts, std::uint64_t seed) {
  FiducialSearch s;
  s.d = d;
  s.zauner = zauner;
  s.eigenvalue = eigenvalue;
  s.restarts = restarts;
  s.seed = seed;
  return find_fiducial(s);
}

std::optional<Symmetry> find_symmetry(const CVector& v, double tol) {
  const long long d = v.size();
  std::vector<ModularMatrix2> candidates{zauner_matrix_standard(d)};
  for (const auto& m : zauner_type_elements(d))
    if (!(m == candidates.front())) candidates.push_back(m);
  for (const auto& F : candidates) {
    const SymplecticUnitary u = fix_phase_to_table(symplectic_unitary(F), 3);
    const CVector w = u.U * v;
    const cplx lambda = v.dot(w);
    if ((w - lambda * v).cwiseAbs().maxCoeff() > tol) continue;
    for (int k = 0; k < 3; ++k) {
      const cplx root = std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0);
      if (std::abs(lambda - root) < tol) return Symmetry{F, root};
    }
  }
  return std::nullopt;
}

}  // namespace sicl
