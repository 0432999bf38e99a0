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

#include "sicl/frames.hpp"

#include <algorithm>
#include <cmath>

#include "sicl/error.hpp"
#include "sicl/heisenberg.hpp"

namespace sicl {

EtfCertificate check_tight(const FrameSpec& frame, double tol) {
  EtfCertificate c;
  const CMatrix& g = frame.generator;
  const double d = static_cast<double>(g.rows());
  const double n = static_cast<double>(g.cols());
  const CMatrix s = g * g.adjoint();
  c.tight_constant = s.trace().real() / d;
  c.tight_deviation = max_abs(s - c.tight_constant * CMatrix::Identity(g.rows(), g.rows()));
  c.is_tight = c.tight_deviation <= tol;

  c.common_overlap_sq = n > 1 ? (n - d) / (d * (n - 1.0)) : 0.0;
  CMatrix u = g;
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    const double nk = u.col(k).norm();
    if (nk > 0) u.col(k) /= nk;
  }
  const CMatrix gram = u.adjoint() * u;
  double dev = 0.0;
  for (Eigen::Index a = 0; a < gram.rows(); ++a)
    for (Eigen::Index b = a + 1; b < gram.cols(); ++b)
      dev = std::max(dev, std::abs(std::norm(gram(a, b)) - c.common_overlap_sq));
  c.max_deviation = dev;
  c.is_equiangular = dev <= tol;
  return c;
}

FrameSpec covariant_generator(const std::vector<CVector>& x_blocks, long long d) {
  if (x_blocks.empty()) throw Error(Errc::DimensionMismatch, "covariant_generator: no blocks");
  for (const auto& x : x_blocks)
    if (x.size() != d) throw Error(Errc::DimensionMismatch, "covariant_generator: block length");
  PhaseConstants pc(d);
  const long long k = static_cast<long long>(x_blocks.size());
  FrameSpec f;
  f.ambient_dim = d * k;
  f.n_vectors = d * d;
  f.generator.resize(d * k, d * d);
  f.covariance = "weyl-heisenberg";
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j)
      for (long long r = 0; r < k; ++r)
        f.generator.block(r * d, i * d + j, d, 1) = apply_displacement(pc, {i, j}, x_blocks[r]);
  return f;
}

NaimarkComplement naimark_complement(const std::vector<CVector>& x_blocks, long long d,
                                     const std::optional<std::vector<CVector>>& completion) {
  const CMatrix x = columns_to_matrix(x_blocks);
  if (x.rows() != d) throw Error(Errc::DimensionMismatch, "naimark_complement: block length");
  if (orthonormality_defect(x) > kStructuralTol) throw Error(Errc::NotOrthonormal, "x-blocks are not orthonormal");
  NaimarkComplement out;
  if (completion) {
    out.completion = *completion;
    const CMatrix y = columns_to_matrix(out.completion);
    if (y.rows() != d || x.cols() + y.cols() != d)
      throw Error(Errc::BadCompletion, "completion does not fill the space");
    CMatrix both(d, d);
    both << x, y;
    if (orthonormality_defect(both) > kStructuralTol)
      throw Error(Errc::BadCompletion, "completion is not orthonormal to the blocks");
  } else {
    const CMatrix q = CMatrix::Identity(d, d) - x * x.adjoint();
    const EigenDecomposition ed = eig_hermitian(q);
    for (std::size_t n = 0; n < ed.eigenvalues.size(); ++n)
      if (std::abs(ed.eigenvalues[n] - 1.0) < kDegeneracyTol)
        out.completion.push_back(ed.eigenvectors.col(static_cast<Eigen::Index>(n)));
    if (static_cast<long long>(out.completion.size()) + x.cols() != d)
      throw Error(Errc::BadCompletion, "projector rank does not match");
  }
  const FrameSpec m1 = covariant_generator(x_blocks, d);
  if (out.completion.empty()) {
    out.frame = FrameSpec{0, d * d, CMatrix(0, d * d), m1.covariance, false};
  } else {
    out.frame = covariant_generator(out.completion, d);
  }
  CMatrix u(d * d, d * d);
  u << m1.generator, out.frame.generator;
  u /= std::sqrt(static_cast<double>(d));
  out.unitarity_defect = unitarity_defect(u);
  return out;
}

std::pair<bool, double> grassmann_equidistance(const std::vector<CMatrix>& bases, double tol) {
  for (const auto& b : bases) {
    if (orthonormality_defect(b) > kStructuralTol) throw Error(Errc::NotOrthonormal, "subspace basis");
    if (b.cols() != bases.front().cols() || b.rows() != bases.front().rows())
      throw Error(Errc::DimensionMismatch, "subspaces differ in dimension");
  }
  if (bases.size() < 2) return {true, 0.0};
  double lo = 1e300, hi = -1.0, sum = 0.0;
  std::size_t count = 0;
  for (std::size_t a = 0; a < bases.size(); ++a) {
    for (std::size_t b = a + 1; b < bases.size(); ++b) {
      double s2 = 0.0;
      for (double c : principal_angles(bases[a], bases[b])) s2 += 1.0 - c * c;
      const double dist = std::sqrt(std::max(0.0, s2));
      lo = std::min(lo, dist);
      hi = std::max(hi, dist);
      sum += dist;
      ++count;
    }
  }
  return {hi - lo <= tol, sum / static_cast<double>(count)};
}

}  // namespace sicl
