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

#include "sicl/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "sicl/clifford.hpp"
#include "sicl/error.hpp"
#include "sicl/heisenberg.hpp"
#include "sicl/overlap.hpp"

namespace sicl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx omega3(int k) { return std::polar(1.0, kTwoPi * k / 3.0); }

int cube_root_label(cplx lambda) {
  const int k = static_cast<int>(mod(std::lround(std::arg(lambda) / (kTwoPi / 3.0)), 3));
  if (std::abs(lambda - omega3(k)) > 1e-6) throw Error(Errc::NoMatchingPhase, "eigenvalue is not a cube root of unity");
  return k;
}

// Eigenvectors of u restricted to the column span of q (u must preserve it).
std::vector<LabeledVector> restricted_eigenvectors(const CMatrix& u, const CMatrix& q) {
  const CMatrix r = q.adjoint() * u * q;
  if (unitarity_defect(r) > 1e-8) throw Error(Errc::NotUnitary, "operator does not preserve the subspace");
  const EigenDecomposition ed = eig_unitary(r, 1e-8);
  std::vector<LabeledVector> out;
  for (std::size_t n = 0; n < ed.eigenvalues.size(); ++n) {
    CVector v = q * ed.eigenvectors.col(static_cast<Eigen::Index>(n));
    fix_leading_phase(v);
    out.push_back({cube_root_label(ed.eigenvalues[n]), v});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  return out;
}

CMatrix su2(double theta, double s0, double s1) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  CMatrix u(2, 2);
  u << c * std::polar(1.0, s0), s * std::polar(1.0, s1), -s * std::polar(1.0, -s1), c * std::polar(1.0, -s0);
  return u;
}

// Traceless Hermitian basis of n x n matrices (generalized Gell-Mann).
std::vector<CMatrix> gell_mann(int n) {
  std::vector<CMatrix> out;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      CMatrix s = CMatrix::Zero(n, n), a = CMatrix::Zero(n, n);
      s(j, k) = s(k, j) = 1.0;
      a(j, k) = cplx(0, -1);
      a(k, j) = cplx(0, 1);
      out.push_back(s);
      out.push_back(a);
    }
  for (int l = 1; l < n; ++l) {
    CMatrix h = CMatrix::Zero(n, n);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int m = 0; m < l; ++m) h(m, m) = norm;
    h(l, l) = -l * norm;
    out.push_back(h);
  }
  return out;
}

CMatrix exp_i_hermitian(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  CVector ph(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) ph(k) = std::polar(1.0, es.eigenvalues()(k));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

double wrap_phase(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0) y += kTwoPi;
  return y;
}

}  // namespace

HMatrix HMatrix::of(long long d) { return {d, h_matrix(d)}; }

ModularMatrix2 HMatrix::conjugate(const ModularMatrix2& F) const { return *matrix.inverse() * F * matrix; }

CMatrix symmetric_reindex(long long d) {
  require_odd_dimension(d);
  const long long k = (d + 1) / 2, h = (d - 1) / 2;
  const double r2 = 1.0 / std::sqrt(2.0);
  CMatrix w = CMatrix::Zero(d * d, d * d);
  for (long long x = 0; x < d; ++x) {
    for (long long i = 0; i < d; ++i) {
      const long long row = x * d + i;
      if (x < k) {
        const long long a = mod(x * h + i, d), b = mod(x * (h + 1) + i, d);
        if (a == b) {
          w(row, a * d + a) = 1.0;
        } else {
          w(row, a * d + b) = r2;
          w(row, b * d + a) = r2;
        }
      } else {
        const long long xx = x - k + 1;
        const long long a = mod(xx * h + i, d), b = mod(xx * (h + 1) + i, d);
        w(row, a * d + b) = r2;
        w(row, b * d + a) = -r2;
      }
    }
  }
  return w;
}

SymLiftBlocks lift_fiducial(const SicFiducial& f) {
  const long long d = f.vector.size();
  if (!verify_sic(f.vector, kPhysicsTol)) throw Error(Errc::NotASic, "lift_fiducial needs a SIC fiducial");
  const long long k = (d + 1) / 2;
  const CVector u = symmetric_reindex(d) * kron(f.vector, f.vector) * std::sqrt(static_cast<double>(k));
  SymLiftBlocks out;
  out.d = d;
  for (long long r = 0; r < k; ++r) out.blocks.push_back(u.segment(r * d, d));
  out.orthonormality_defect = orthonormality_defect(columns_to_matrix(out.blocks));
  return out;
}

CMatrix parity_from_lift(const SymLiftBlocks& lift) {
  const CMatrix x = columns_to_matrix(lift.blocks);
  return 2.0 * x * x.adjoint() - CMatrix::Identity(lift.d, lift.d);
}

CMatrix parity_from_phases(const OverlapTable& table) {
  const long long d = table.d;
  const HMatrix h = HMatrix::of(d);
  PhaseConstants pc(d);
  CMatrix p = CMatrix::Zero(d, d);
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j) {
      const DispIndex q = h.matrix * DispIndex{i, j};
      const cplx t = table.at(q.i, q.j);
      const cplx c = t * t;
      // D_{-p} column s -> row s - i.
      for (long long s = 0; s < d; ++s) p(mod(s - i, d), s) += c * pc.tau_pow(i * j - 2 * j * s);
    }
  return p / static_cast<double>(d);
}

GeneralizedParity generalized_parity(const SicFiducial& f) {
  const SymLiftBlocks lift = lift_fiducial(f);
  GeneralizedParity g;
  g.d = lift.d;
  g.matrix = parity_from_lift(lift);
  g.source = f.label;
  g.dual_construction_gap = max_abs(g.matrix - parity_from_phases(overlap_phases(f.vector)));
  return g;
}

PairedBases paired_bases(const SicFiducial& f, const ModularMatrix2& zauner_small, const GeneralizedParity& p_theta) {
  const long long d = f.vector.size();
  const long long s = d - 2;
  if (s < 3) throw Error(Errc::BadDimension, "the ladder starts at d = 5");
  if (zauner_small.modulus() != s) throw Error(Errc::DimensionMismatch, "small generator has the wrong modulus");
  if (!f.symmetry) throw Error(Errc::NotSymplectic, "fiducial carries no symmetry");
  PairedBases out;
  out.d = d;
  out.F = f.symmetry->F;
  out.F_prime = HMatrix::of(d).conjugate(out.F);
  out.F_small = zauner_small;
  if (out.F.order() != 3 || zauner_small.order() != 3)
    throw Error(Errc::NotSymplectic, "symmetries must have order 3");

  const CMatrix u_big = fix_phase_to_table(symplectic_unitary(out.F_prime), 3).U;
  out.commutator = max_abs(u_big * p_theta.matrix - p_theta.matrix * u_big);
  const EigenDecomposition pe = eig_hermitian(0.5 * (p_theta.matrix + p_theta.matrix.adjoint()));
  std::vector<CVector> minus;
  for (std::size_t n = 0; n < pe.eigenvalues.size(); ++n)
    if (pe.eigenvalues[n].real() < 0) minus.push_back(pe.eigenvectors.col(static_cast<Eigen::Index>(n)));
  if (static_cast<long long>(minus.size()) != (d - 1) / 2)
    throw Error(Errc::DimensionMismatch, "P_theta -1 eigenspace has the wrong dimension");
  out.e_basis = restricted_eigenvectors(u_big, columns_to_matrix(minus));

  const CMatrix u_par = fix_phase_to_table(symplectic_unitary(parity_matrix(s)), 2).U;
  const CMatrix plus = columns_to_matrix(eigenspace_basis(u_par, 1.0));
  if (plus.cols() != (d - 1) / 2) throw Error(Errc::DimensionMismatch, "parity +1 eigenspace has the wrong dimension");
  const CMatrix u_small = fix_phase_to_table(symplectic_unitary(zauner_small), 3).U;
  out.f_basis = restricted_eigenvectors(u_small, plus);
  return out;
}

std::vector<std::array<int, 3>> ProtoFamily::pairing() const {
  std::vector<std::array<int, 3>> out;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int fi : blocks[b].f_index)
      for (int ei : blocks[b].e_index) out.push_back({fi, ei, static_cast<int>(b)});
  return out;
}

ProtoFamily make_family(const PairedBases& bases, int sector, bool conjugate_pairing) {
  ProtoFamily fam;
  fam.d = bases.d;
  fam.e_basis = bases.e_basis;
  fam.f_basis = bases.f_basis;
  fam.sector = static_cast<int>(mod(sector, 3));
  fam.conjugate_pairing = conjugate_pairing;
  int block_of_label[3] = {-1, -1, -1};
  for (int l = 0; l < 3; ++l) {
    ProtoBlock b;
    b.f_label = l;
    b.e_label = static_cast<int>(mod(fam.sector - l, 3));
    for (std::size_t k = 0; k < fam.f_basis.size(); ++k)
      if (fam.f_basis[k].label == b.f_label) b.f_index.push_back(static_cast<int>(k));
    for (std::size_t k = 0; k < fam.e_basis.size(); ++k)
      if (fam.e_basis[k].label == b.e_label) b.e_index.push_back(static_cast<int>(k));
    if (b.f_index.size() != b.e_index.size())
      throw Error(Errc::BadPairing, "sector " + std::to_string(fam.sector) + ": f-label " + std::to_string(l) +
                                        " has " + std::to_string(b.f_index.size()) + " vectors, e-label " +
                                        std::to_string(b.e_label) + " has " + std::to_string(b.e_index.size()));
    if (b.f_index.empty()) continue;
    block_of_label[l] = static_cast<int>(fam.blocks.size());
    fam.blocks.push_back(b);
  }
  if (fam.blocks.empty()) throw Error(Errc::BadPairing, "empty family");
  fam.blocks.front().special = true;
  if (conjugate_pairing && block_of_label[1] >= 0 && block_of_label[2] >= 0) {
    if (fam.blocks[block_of_label[1]].f_index.size() != fam.blocks[block_of_label[2]].f_index.size())
      throw Error(Errc::BadPairing, "conjugate blocks differ in size");
    fam.blocks[block_of_label[2]].conjugate_of = block_of_label[1];
  }
  for (auto& b : fam.blocks) {
    b.param_offset = fam.param_count();
    if (b.conjugate_of >= 0) continue;
    const int n = static_cast<int>(b.f_index.size());
    if (!b.special) fam.kinds.push_back(n <= 2 ? ParamKind::Phase : ParamKind::Free);
    if (n == 2) {
      fam.kinds.push_back(ParamKind::HalfAngle);
      fam.kinds.push_back(ParamKind::Phase);
      fam.kinds.push_back(ParamKind::Phase);
    } else if (n >= 3) {
      for (int k = 0; k < n * n - 1; ++k) fam.kinds.push_back(ParamKind::Free);
    }
    b.param_count = fam.param_count() - b.param_offset;
  }
  fam.params.assign(fam.kinds.size(), 0.0);
  return fam;
}

std::vector<CMatrix> block_unitaries(const ProtoFamily& family, const std::vector<double>& params) {
  if (static_cast<int>(params.size()) != family.param_count())
    throw Error(Errc::ParamCountMismatch, "expected " + std::to_string(family.param_count()) + " parameters, got " +
                                              std::to_string(params.size()));
  std::vector<CMatrix> out;
  for (const auto& b : family.blocks) {
    if (b.conjugate_of >= 0) {
      out.push_back(out[static_cast<std::size_t>(b.conjugate_of)].conjugate());
      continue;
    }
    const int n = static_cast<int>(b.f_index.size());
    const double* x = params.data() + b.param_offset;
    cplx global = 1.0;
    if (!b.special) global = n <= 2 ? std::polar(1.0, *x++) : cplx(1.0);
    CMatrix u;
    if (n == 1) {
      u = CMatrix::Constant(1, 1, global);
    } else if (n == 2) {
      u = global * su2(x[0], x[1], x[2]);
    } else {
      const auto basis = gell_mann(n);
      CMatrix h = CMatrix::Zero(n, n);
      if (!b.special) h += *x++ * CMatrix::Identity(n, n);
      for (std::size_t k = 0; k < basis.size(); ++k) h += x[k] * basis[k];
      u = exp_i_hermitian(h);
    }
    out.push_back(u);
  }
  return out;
}

CVector build_proto(const ProtoFamily& family, const std::vector<double>& params) {
  const long long d = family.d, s = d - 2;
  const std::vector<CMatrix> us = block_unitaries(family, params);
  CVector psi = CVector::Zero(s * d);
  for (std::size_t b = 0; b < family.blocks.size(); ++b) {
    const auto& blk = family.blocks[b];
    for (std::size_t a = 0; a < blk.f_index.size(); ++a)
      for (std::size_t c = 0; c < blk.e_index.size(); ++c)
        psi += us[b](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(c)) *
               kron(family.f_basis[static_cast<std::size_t>(blk.f_index[a])].v,
                    family.e_basis[static_cast<std::size_t>(blk.e_index[c])].v);
  }
  return psi * std::sqrt(2.0 / static_cast<double>(d - 1));
}

CVector proto_global(const ProtoFamily& family, const std::vector<double>& params) {
  return crt_from_tensor(build_proto(family, params), family.d - 2, family.d);
}

std::vector<double> canonicalize_params(const ProtoFamily& family, std::vector<double> params) {
  if (static_cast<int>(params.size()) != family.param_count())
    throw Error(Errc::ParamCountMismatch, "canonicalize_params: parameter count");
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (family.kinds[k] != ParamKind::HalfAngle) continue;
    // (theta, s0, s1): theta + 2pi negates the block, theta -> 2pi - theta negates c.
    double& th = params[k];
    double& s0 = params[k + 1];
    double& s1 = params[k + 2];
    const double turns = std::floor(th / kTwoPi);
    th -= turns * kTwoPi;
    if (std::fmod(std::abs(turns), 2.0) == 1.0) {
      s0 += std::numbers::pi;
      s1 += std::numbers::pi;
    }
    if (th > std::numbers::pi) {
      th = kTwoPi - th;
      s0 += std::numbers::pi;
    }
  }
  for (std::size_t k = 0; k < params.size(); ++k)
    if (family.kinds[k] == ParamKind::Phase) params[k] = wrap_phase(params[k]);
  return params;
}

std::vector<cplx> big_factor_overlaps(const CVector& psi, long long d) {
  const long long s = d - 2;
  if (psi.size() != s * d) throw Error(Errc::DimensionMismatch, "proto vector length");
  const OverlapEngine engine(d);
  std::vector<cplx> acc(static_cast<std::size_t>(d * d), 0.0), t(static_cast<std::size_t>(d * d));
  for (long long a = 0; a < s; ++a) {
    engine.table(psi.data() + a * d, t.data());
    for (std::size_t p = 0; p < t.size(); ++p) acc[p] += t[p];
  }
  for (auto& x : acc) x *= static_cast<double>(d - 1);
  return acc;
}

std::vector<cplx> small_factor_overlaps(const CVector& psi, long long d) {
  const long long s = d - 2;
  if (psi.size() != s * d) throw Error(Errc::DimensionMismatch, "proto vector length");
  const OverlapEngine engine(s);
  std::vector<cplx> acc(static_cast<std::size_t>(s * s), 0.0), t(static_cast<std::size_t>(s * s));
  CVector col(s);
  for (long long b = 0; b < d; ++b) {
    for (long long a = 0; a < s; ++a) col(a) = psi(a * d + b);
    engine.table(col.data(), t.data());
    for (std::size_t p = 0; p < t.size(); ++p) acc[p] += t[p];
  }
  for (auto& x : acc) x *= static_cast<double>(d - 1);
  return acc;
}

AlignmentCertificate verify_alignment(const CVector& psi, const OverlapTable& theta_table, double tol) {
  const long long d = theta_table.d;
  AlignmentCertificate cert;
  const std::vector<cplx> small = small_factor_overlaps(psi, d);
  for (std::size_t p = 1; p < small.size(); ++p) cert.max_err_eq14 = std::max(cert.max_err_eq14, std::abs(small[p] - 1.0));
  const std::vector<cplx> big = big_factor_overlaps(psi, d);
  std::vector<cplx> tsq(theta_table.phases.size());
  for (std::size_t p = 0; p < tsq.size(); ++p) tsq[p] = theta_table.phases[p] * theta_table.phases[p];

  // Full error of M, abandoned once it exceeds `bound`.
  auto error_of = [&](const ModularMatrix2& m, double bound, int max_mismatch) {
    double err = 0.0;
    int mismatches = 0;
    for (long long i = 0; i < d; ++i)
      for (long long j = 0; j < d; ++j) {
        if (i == 0 && j == 0) continue;
        const DispIndex q = m * DispIndex{i, j};
        const double e = std::abs(big[static_cast<std::size_t>(i * d + j)] + tsq[static_cast<std::size_t>(q.i * d + q.j)]);
        err = std::max(err, e);
        if (e > tol && ++mismatches >= max_mismatch) return std::numeric_limits<double>::infinity();
        if (err > bound) return std::numeric_limits<double>::infinity();
      }
    return err;
  };

  for (int pass = 0; pass < 2 && !cert.matrix_M; ++pass) {
    for (long long a = 0; a < d && !cert.matrix_M; ++a)
      for (long long b = 0; b < d && !cert.matrix_M; ++b)
        for (long long c = 0; c < d && !cert.matrix_M; ++c)
          for (long long g = 0; g < d && !cert.matrix_M; ++g) {
            const ModularMatrix2 m{a, b, c, g, d};
            const long long det = m.det();
            const bool unimodular = det == 1 || det == d - 1;
            if (pass == 0 ? !unimodular : (unimodular || gcd(det, d) != 1)) continue;
            const double e = error_of(m, std::numeric_limits<double>::infinity(), 3);
            if (e <= tol) {
              cert.matrix_M = m;
              cert.det_M = det;
              cert.unimodular = unimodular;
              cert.max_err_eq13 = e;
            }
          }
  }
  if (!cert.matrix_M) {
    double best = std::numeric_limits<double>::infinity();
    for (long long a = 0; a < d; ++a)
      for (long long b = 0; b < d; ++b)
        for (long long c = 0; c < d; ++c)
          for (long long g = 0; g < d; ++g) {
            const ModularMatrix2 m{a, b, c, g, d};
            if (gcd(m.det(), d) != 1) continue;
            best = std::min(best, error_of(m, best, std::numeric_limits<int>::max()));
          }
    cert.max_err_eq13 = best;
  }
  cert.passes = cert.matrix_M.has_value() && cert.max_err_eq14 <= tol;
  return cert;
}

EmbeddedEtf embedded_etf(const CVector& psi, long long d) {
  const long long s = d - 2;
  const std::vector<cplx> small = small_factor_overlaps(psi, d);
  const std::vector<cplx> big = big_factor_overlaps(psi, d);
  for (std::size_t p = 1; p < small.size(); ++p)
    if (std::abs(small[p] - 1.0) > kPhysicsTol) throw Error(Errc::AlignmentRequired, "small-factor overlaps are not aligned");
  for (std::size_t p = 1; p < big.size(); ++p)
    if (std::abs(std::abs(big[p]) - 1.0) > kPhysicsTol) throw Error(Errc::AlignmentRequired, "big-factor overlaps are not aligned");

  PhaseConstants pc(d);
  CMatrix g(s * d, d * d);
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j)
      for (long long a = 0; a < s; ++a)
        g.block(a * d, i * d + j, d, 1) = apply_displacement(pc, {i, j}, psi.segment(a * d, d));
  EmbeddedEtf out;
  out.span = orthonormal_span(g);
  out.rank = static_cast<int>(out.span.cols());
  out.frame.ambient_dim = out.rank;
  out.frame.n_vectors = d * d;
  out.frame.generator = out.span.adjoint() * g;
  out.frame.covariance = "1 (x) D_p";
  out.frame.normalized = true;
  out.certificate = check_tight(out.frame, kPhysicsTol);
  return out;
}

std::vector<CMatrix> translated_subspaces(const CMatrix& span, long long d) {
  const long long s = d - 2;
  if (span.rows() != s * d) throw Error(Errc::DimensionMismatch, "span rows");
  PhaseConstants pc(s);
  std::vector<CMatrix> out;
  for (long long i = 0; i < s; ++i)
    for (long long j = 0; j < s; ++j) {
      CMatrix m(span.rows(), span.cols());
      for (long long s_ = 0; s_ < s; ++s_) {
        const long long r = mod(s_ + i, s);
        m.block(r * d, 0, d, span.cols()) = pc.tau_pow(i * j + 2 * j * s_) * span.block(s_ * d, 0, d, span.cols());
      }
      out.push_back(m);
    }
  return out;
}

}  // namespace sicl
