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

#include "support.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "sicl/heisenberg.hpp"

namespace sicl::test {

CMatrix random_gaussian(long long rows, long long cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix m(rows, cols);
  for (long long c = 0; c < cols; ++c)
    for (long long r = 0; r < rows; ++r) m(r, c) = cplx(n(rng), n(rng));
  return m;
}

CVector random_unit(long long n, std::uint64_t seed) {
  CVector v = random_gaussian(n, 1, seed).col(0);
  return v / v.norm();
}

CMatrix random_unitary(long long n, std::uint64_t seed) {
  const CMatrix g = random_gaussian(n, n, seed);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long long k = 0; k < n; ++k) q.col(k) *= std::polar(1.0, std::arg(r(k, k)));
  return q;
}

CMatrix displacement_oracle(long long d, long long i, long long j) {
  const double pi = std::numbers::pi;
  CMatrix x = CMatrix::Zero(d, d), z = CMatrix::Zero(d, d);
  for (long long s = 0; s < d; ++s) {
    x((s + 1) % d, s) = 1.0;
    z(s, s) = std::polar(1.0, 2.0 * pi * static_cast<double>(s) / static_cast<double>(d));
  }
  CMatrix xi = CMatrix::Identity(d, d), zj = CMatrix::Identity(d, d);
  for (long long k = 0; k < mod(i, d); ++k) xi = x * xi;
  for (long long k = 0; k < mod(j, d); ++k) zj = z * zj;
  const cplx tau = -std::polar(1.0, pi / static_cast<double>(d));
  return std::pow(tau, static_cast<double>(mod(i, d) * mod(j, d))) * xi * zj;
}

double defect_oracle(const CVector& v) {
  const long long d = v.size();
  double s = 0.0;
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j) {
      if (i == 0 && j == 0) continue;
      const double o = std::norm(v.dot(displacement_oracle(d, i, j) * v));
      s += (o - 1.0 / static_cast<double>(d + 1)) * (o - 1.0 / static_cast<double>(d + 1));
    }
  return s;
}

double frame_tightness_oracle(const CMatrix& g) {
  CMatrix n = g;
  for (long long c = 0; c < n.cols(); ++c) n.col(c) /= n.col(c).norm();
  const double alpha = static_cast<double>(n.cols()) / static_cast<double>(n.rows());
  return (n * n.adjoint() - alpha * CMatrix::Identity(n.rows(), n.rows())).cwiseAbs().maxCoeff();
}

namespace {

SicFiducial with_real_preference(long long d) {
  FiducialSearch s = default_fiducial_search(d);
  return find_fiducial(s);
}

}  // namespace

const SicFiducial& sic5() {
  static const SicFiducial f = with_real_preference(5);
  return f;
}

const SicFiducial& sic7_real() {
  static const SicFiducial f = with_real_preference(7);
  return f;
}

const SicFiducial& sic9() {
  static const SicFiducial f = with_real_preference(9);
  return f;
}

}  // namespace sicl::test
