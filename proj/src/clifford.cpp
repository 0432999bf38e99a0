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

#include "sicl/clifford.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "sicl/error.hpp"

namespace sicl {

namespace {

CMatrix closed_form(const ModularMatrix2& F, const PhaseConstants& pc) {
  const long long d = pc.d;
  const long long bi = *inverse_mod(F.b(), d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  CMatrix u(d, d);
  for (long long r = 0; r < d; ++r)
    for (long long s = 0; s < d; ++s)
      u(r, s) = norm * pc.tau_pow(mod(bi * mod(F.g() * r * r - 2 * r * s + F.a() * s * s, d), d));
  return u;
}

}  // namespace

SymplecticUnitary symplectic_unitary(const ModularMatrix2& F) {
  const long long d = F.modulus();
  require_odd_dimension(d);
  if (!F.is_symplectic()) throw Error(Errc::NotSymplectic, "determinant is not 1: " + F.to_string());
  PhaseConstants pc(d);
  if (gcd(F.b(), d) == 1) return {F, closed_form(F, pc), PhaseConvention::Raw};
  for (long long k = 0; k < d; ++k) {
    if (gcd(mod(k * F.b() + F.g(), d), d) != 1) continue;
    const ModularMatrix2 a{0, -1, 1, k, d};
    const ModularMatrix2 b{k * F.a() + F.c(), k * F.b() + F.g(), -F.a(), -F.b(), d};
    return {F, closed_form(a, pc) * closed_form(b, pc), PhaseConvention::Raw};
  }
  throw Error(Errc::NotSymplectic, "no two-factor decomposition for " + F.to_string());
}

CovarianceResidual covariance_residual(const SymplecticUnitary& u) {
  const long long d = u.F.modulus();
  CovarianceResidual out;
  bool have_phase = false;
  for (long long i = 0; i < d; ++i) {
    for (long long j = 0; j < d; ++j) {
      const CMatrix lhs = u.U * displacement(d, {i, j}) * u.U.adjoint();
      const CMatrix rhs = displacement(d, u.F * DispIndex{i, j});
      if (!have_phase) {
        Eigen::Index r = 0, c = 0;
        rhs.cwiseAbs().maxCoeff(&r, &c);
        out.phase = lhs(r, c) / rhs(r, c);
        out.phase /= std::abs(out.phase);
        have_phase = true;
      }
      out.max_error = std::max(out.max_error, max_abs(lhs - out.phase * rhs));
    }
  }
  return out;
}

std::vector<int> table1_multiplicities(long long d, int order) {
  require_odd_dimension(d);
  const int k = static_cast<int>(d / 6);
  if (order == 2) return {static_cast<int>(d / 2) + 1, static_cast<int>(d / 2)};
  if (order != 3) throw Error(Errc::NoMatchingPhase, "no table row for order " + std::to_string(order));
  switch (d % 6) {
    case 1: return {2 * k + 1, 2 * k, 2 * k};
    case 3: return {2 * k + 2, 2 * k + 1, 2 * k};
    default: return {2 * k + 1, 2 * k + 2, 2 * k + 2};
  }
}

std::vector<int> root_multiplicities(const CMatrix& u, int order, double tol) {
  Eigen::ComplexEigenSolver<CMatrix> es(u, false);
  std::vector<int> counts(order, 0);
  for (Eigen::Index n = 0; n < es.eigenvalues().size(); ++n)
    for (int k = 0; k < order; ++k)
      if (std::abs(es.eigenvalues()(n) - std::polar(1.0, 2.0 * std::numbers::pi * k / order)) < tol) ++counts[k];
  return counts;
}

SymplecticUnitary fix_phase_to_table(const SymplecticUnitary& u, int order) {
  if (order < 1) throw Error(Errc::NoMatchingPhase, "order must be positive");
  const Eigen::Index d = u.U.rows();
  CMatrix p = CMatrix::Identity(d, d);
  for (int n = 0; n < order; ++n) p = p * u.U;
  const cplx c = p(0, 0);
  if (std::abs(std::abs(c) - 1.0) > kStructuralTol || max_abs(p - c * CMatrix::Identity(d, d)) > 1e-9)
    throw Error(Errc::NoMatchingPhase, "U^" + std::to_string(order) + " is not a scalar for " + u.F.to_string());
  const cplx base = std::pow(c, -1.0 / order);
  auto candidate = [&](int m) {
    return CMatrix(u.U * (base * std::polar(1.0, 2.0 * std::numbers::pi * m / order)));
  };
  if (order != 2 && order != 3) return {u.F, candidate(0), PhaseConvention::RootOfUnity};

  const std::vector<int> row = table1_multiplicities(d, order);
  for (int m = 0; m < order; ++m) {
    CMatrix v = candidate(m);
    if (root_multiplicities(v, order) == row) return {u.F, v, PhaseConvention::Table1};
  }
  for (int m = 0; m < order; ++m) {
    CMatrix v = candidate(m);
    if (root_multiplicities(v, order)[0] == row[0]) return {u.F, v, PhaseConvention::Table1Column1};
  }
  throw Error(Errc::NoMatchingPhase, "no root of unity reproduces the table for " + u.F.to_string());
}

std::vector<CVector> eigenspace_basis(const CMatrix& u, cplx eigenvalue, double tol) {
  const EigenDecomposition ed = eig_unitary(u);
  std::vector<CVector> out;
  for (std::size_t n = 0; n < ed.eigenvalues.size(); ++n)
    if (std::abs(ed.eigenvalues[n] - eigenvalue) < tol) out.push_back(ed.eigenvectors.col(static_cast<Eigen::Index>(n)));
  if (out.empty()) throw Error(Errc::EmptyEigenspace, "eigenvalue not present");
  return out;
}

std::pair<ModularMatrix2, ModularMatrix2> crt_split_symplectic(const ModularMatrix2& F, long long n1, long long n2) {
  if (gcd(n1, n2) != 1) throw Error(Errc::NotCoprime, "CRT factors must be coprime");
  if (F.modulus() != n1 * n2) throw Error(Errc::DimensionMismatch, "modulus is not n1*n2");
  if (!F.is_symplectic()) throw Error(Errc::NotSymplectic, F.to_string());
  auto factor = [&](long long n, long long other) {
    if (n == 1) return ModularMatrix2::identity(1);
    const long long s = *inverse_mod(other, n);
    const long long si = *inverse_mod(s, n);
    return ModularMatrix2{F.a(), si * F.b(), s * F.c(), F.g(), n};
  };
  return {factor(n1, n2), factor(n2, n1)};
}

ModularMatrix2 crt_combine_symplectic(const ModularMatrix2& f1, const ModularMatrix2& f2) {
  const long long n1 = f1.modulus(), n2 = f2.modulus();
  if (gcd(n1, n2) != 1) throw Error(Errc::NotCoprime, "CRT factors must be coprime");
  const long long n = n1 * n2;
  // x = x1 mod n1, x = x2 mod n2.
  auto crt = [&](long long x1, long long x2) {
    const long long e1 = n1 == 1 ? 0 : n2 * *inverse_mod(n2, n1);
    const long long e2 = n2 == 1 ? 0 : n1 * *inverse_mod(n1, n2);
    return mod(x1 * e1 + x2 * e2, n);
  };
  auto scale = [](const ModularMatrix2& f, long long other) {
    const long long m = f.modulus();
    if (m == 1) return std::array<long long, 4>{0, 0, 0, 0};
    const long long s = *inverse_mod(other, m);
    const long long si = *inverse_mod(s, m);
    return std::array<long long, 4>{f.a(), mod(s * f.b(), m), mod(si * f.c(), m), f.g()};
  };
  const auto a = scale(f1, n2), b = scale(f2, n1);
  return {crt(a[0], b[0]), crt(a[1], b[1]), crt(a[2], b[2]), crt(a[3], b[3]), n};
}

double crt_split_certificate(const ModularMatrix2& F, long long n1, long long n2) {
  const auto [f1, f2] = crt_split_symplectic(F, n1, n2);
  const CMatrix v = crt_permutation(n1, n2);
  const CMatrix lhs = v * symplectic_unitary(F).U * v.adjoint();
  const CMatrix rhs = kron(symplectic_unitary(f1).U, symplectic_unitary(f2).U);
  return distance_up_to_phase(lhs, rhs);
}

CVector crt_to_tensor(const CVector& v, long long n1, long long n2) {
  if (v.size() != n1 * n2) throw Error(Errc::DimensionMismatch, "crt_to_tensor: length");
  CVector out(v.size());
  for (long long r = 0; r < n1 * n2; ++r) out(n2 * (r % n1) + (r % n2)) = v(r);
  return out;
}

CVector crt_from_tensor(const CVector& v, long long n1, long long n2) {
  if (v.size() != n1 * n2) throw Error(Errc::DimensionMismatch, "crt_from_tensor: length");
  CVector out(v.size());
  for (long long r = 0; r < n1 * n2; ++r) out(r) = v(n2 * (r % n1) + (r % n2));
  return out;
}

std::vector<ModularMatrix2> zauner_type_elements(long long d) {
  std::vector<ModularMatrix2> out;
  for (const auto& m : symplectic_elements_of_order(d, 3))
    if (m.trace() == mod(-1, d)) out.push_back(m);
  return out;
}

ModularMatrix2 preferred_zauner(long long d) {
  const auto all = zauner_type_elements(d);
  for (const auto& m : all)
    if (m.is_diagonal()) return m;
  for (const auto& m : all)
    if (m.a() == 1 && m.b() == 0 && m.g() == 1) return m;
  return zauner_matrix_standard(d);
}

}  // namespace sicl
