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

#include "sicl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sicl/error.hpp"

namespace sicl {
namespace {

double phase_in_0_2pi(cplx z) {
  double a = std::arg(z);
  if (a < -1e-12) a += 2.0 * std::numbers::pi;
  if (a < 0.0) a = 0.0;
  return a;
}

int first_significant(const CVector& v, double tol) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (std::abs(v(k)) > tol) return static_cast<int>(k);
  return static_cast<int>(v.size());
}

// Orthonormalizes `block` in place against `prior` columns and itself.
void mgs_block(std::vector<CVector>& block, const std::vector<CVector>& prior,
               double tol) {
  std::vector<CVector> done;
  for (auto& v : block) {
    CVector w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : prior) w -= q.dot(w) * q;
      for (const auto& q : done) w -= q.dot(w) * q;
    }
    double n = w.norm();
    if (n < tol) throw Error(Errc::RankDeficient, "residual norm below tolerance");
    done.push_back(w / n);
  }
  block = std::move(done);
}

struct Cluster {
  cplx value;
  std::vector<CVector> vectors;
};

EigenDecomposition assemble(std::vector<Cluster> clusters, double tol,
                            bool unit_circle) {
  std::stable_sort(clusters.begin(), clusters.end(), [&](const Cluster& x, const Cluster& y) {
    return unit_circle ? phase_in_0_2pi(x.value) < phase_in_0_2pi(y.value)
                       : x.value.real() < y.value.real();
  });
  EigenDecomposition out;
  out.tolerance = tol;
  std::vector<CVector> all;
  for (auto& c : clusters) {
    mgs_block(c.vectors, all, 1e-6);
    for (auto& v : c.vectors) fix_leading_phase(v, kDegeneracyTol);
    std::stable_sort(c.vectors.begin(), c.vectors.end(), [](const CVector& x, const CVector& y) {
      int fx = first_significant(x, kDegeneracyTol), fy = first_significant(y, kDegeneracyTol);
      if (fx != fy) return fx < fy;
      return phase_in_0_2pi(x(fx)) < phase_in_0_2pi(y(fy));
    });
    for (auto& v : c.vectors) {
      out.eigenvalues.push_back(c.value);
      all.push_back(v);
    }
  }
  out.eigenvectors = columns_to_matrix(all);
  return out;
}

template <class Values>
std::vector<Cluster> cluster_values(const Values& values, const CMatrix& vecs) {
  std::vector<Cluster> clusters;
  std::vector<int> counts;
  for (Eigen::Index k = 0; k < vecs.cols(); ++k) {
    cplx lam = values(k);
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) {
      return std::abs(c.value - lam) < kDegeneracyTol;
    });
    if (it == clusters.end()) {
      clusters.push_back({lam, {vecs.col(k)}});
      counts.push_back(1);
    } else {
      auto idx = static_cast<std::size_t>(it - clusters.begin());
      // running mean keeps the representative centred in the cluster
      it->value = (it->value * double(counts[idx]) + lam) / double(counts[idx] + 1);
      ++counts[idx];
      it->vectors.push_back(vecs.col(k));
    }
  }
  return clusters;
}

}  // namespace

EigenDecomposition eig_unitary(const CMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "eig_unitary: matrix not square");
  if (unitarity_defect(a) > tol) throw Error(Errc::NotUnitary, "eig_unitary: ||A A^H - 1||_max > tol");
  Eigen::ComplexEigenSolver<CMatrix> solver(a, true);
  auto clusters = cluster_values(solver.eigenvalues(), solver.eigenvectors());
  for (auto& c : clusters) c.value /= std::abs(c.value);
  return assemble(std::move(clusters), tol, true);
}

EigenDecomposition eig_hermitian(const CMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "eig_hermitian: matrix not square");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a);
  Eigen::VectorXcd vals = solver.eigenvalues().cast<cplx>();
  auto clusters = cluster_values(vals, solver.eigenvectors());
  return assemble(std::move(clusters), tol, false);
}

std::vector<CVector> gram_schmidt(std::span<const CVector> vectors, double tol) {
  std::vector<CVector> out(vectors.begin(), vectors.end());
  mgs_block(out, {}, tol);
  return out;
}

CMatrix orthonormal_span(const CMatrix& columns, double rel_tol) {
  Eigen::JacobiSVD<CMatrix> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return CMatrix(columns.rows(), 0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > rel_tol * s(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

CMatrix partial_trace(const CMatrix& m, int dim_a, int dim_b, TraceOut side) {
  const Eigen::Index n = Eigen::Index(dim_a) * dim_b;
  if (dim_a <= 0 || dim_b <= 0 || m.rows() != n || m.cols() != n)
    throw Error(Errc::DimensionMismatch, "partial_trace: expected (dimA*dimB) square matrix");
  if (side == TraceOut::B) {
    CMatrix r = CMatrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        for (int k = 0; k < dim_b; ++k) r(i, j) += m(i * dim_b + k, j * dim_b + k);
    return r;
  }
  CMatrix r = CMatrix::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_b; ++i)
    for (int j = 0; j < dim_b; ++j)
      for (int k = 0; k < dim_a; ++k) r(i, j) += m(k * dim_b + i, k * dim_b + j);
  return r;
}

std::vector<double> principal_angles(const CMatrix& u1, const CMatrix& u2, double tol) {
  if (u1.rows() != u2.rows()) throw Error(Errc::DimensionMismatch, "principal_angles: ambient dimensions differ");
  if (orthonormality_defect(u1) > tol || orthonormality_defect(u2) > tol)
    throw Error(Errc::NotOrthonormal, "principal_angles: basis columns not orthonormal");
  CMatrix overlap = u1.adjoint() * u2;
  Eigen::JacobiSVD<CMatrix> svd(overlap);
  std::vector<double> cosines(svd.singularValues().data(),
                              svd.singularValues().data() + svd.singularValues().size());
  for (auto& c : cosines) c = std::clamp(c, 0.0, 1.0);
  std::sort(cosines.begin(), cosines.end(), std::greater<>());
  return cosines;
}

void fix_leading_phase(CVector& v, double tol) {
  int k = first_significant(v, tol);
  if (k < v.size()) v *= std::abs(v(k)) / v(k);
}

void fix_largest_phase(CVector& v) {
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  if (std::abs(v(k)) > 0.0) v *= std::abs(v(k)) / v(k);
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double unitarity_defect(const CMatrix& a) {
  return max_abs(a * a.adjoint() - CMatrix::Identity(a.rows(), a.rows()));
}

double orthonormality_defect(const CMatrix& columns) {
  return max_abs(columns.adjoint() * columns - CMatrix::Identity(columns.cols(), columns.cols()));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector r(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) r.segment(i * b.size(), b.size()) = a(i) * b;
  return r;
}

CMatrix columns_to_matrix(std::span<const CVector> cols) {
  if (cols.empty()) return CMatrix(0, 0);
  CMatrix m(cols.front().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = cols[k];
  return m;
}

double distance_up_to_phase(const CMatrix& a, const CMatrix& b) {
  cplx t = (b.adjoint() * a).trace();
  cplx c = std::abs(t) > 0.0 ? t / std::abs(t) : cplx(1.0);
  return max_abs(a - c * b);
}

}  // namespace sicl
