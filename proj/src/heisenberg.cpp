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

#include "sicl/heisenberg.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>

#include "sicl/error.hpp"

namespace sicl {

PhaseConstants::PhaseConstants(long long d_) : d(d_) {
  require_odd_dimension(d);
  omega = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(d));
  tau = -std::polar(1.0, std::numbers::pi / static_cast<double>(d));
  tau_powers_.resize(static_cast<std::size_t>(2 * d));
  // tau^n = exp(i pi n (d + 1) / d)
  for (long long n = 0; n < 2 * d; ++n)
    tau_powers_[static_cast<std::size_t>(n)] =
        std::polar(1.0, std::numbers::pi * static_cast<double>(mod(n * (d + 1), 2 * d)) / static_cast<double>(d));
}

void require_odd_dimension(long long d) {
  if (d < 3 || d % 2 == 0) throw Error(Errc::BadDimension, "dimension must be odd and >= 3, got " + std::to_string(d));
}

CMatrix displacement(long long d, DispIndex p) {
  PhaseConstants pc(d);
  CMatrix m = CMatrix::Zero(d, d);
  for (long long s = 0; s < d; ++s) m(mod(s + p.i, d), s) = pc.tau_pow(p.i * p.j + 2 * p.j * s);
  return m;
}

CVector apply_displacement(const PhaseConstants& pc, DispIndex p, const CVector& v) {
  const long long d = pc.d;
  if (v.size() != d) throw Error(Errc::DimensionMismatch, "apply_displacement: vector length");
  CVector out(d);
  for (long long s = 0; s < d; ++s) out(mod(s + p.i, d)) = pc.tau_pow(p.i * p.j + 2 * p.j * s) * v(s);
  return out;
}

namespace {

// Monomial form of D_p: column s maps to row perm[s] with factor val[s].
struct Monomial {
  std::vector<long long> perm;
  std::vector<cplx> val;
};

Monomial monomial(const PhaseConstants& pc, DispIndex p) {
  Monomial m{std::vector<long long>(pc.d), std::vector<cplx>(pc.d)};
  for (long long s = 0; s < pc.d; ++s) {
    m.perm[s] = mod(s + p.i, pc.d);
    m.val[s] = pc.tau_pow(p.i * p.j + 2 * p.j * s);
  }
  return m;
}

Monomial compose(const Monomial& a, const Monomial& b) {  // a * b
  Monomial m{std::vector<long long>(a.perm.size()), std::vector<cplx>(a.perm.size())};
  for (std::size_t s = 0; s < a.perm.size(); ++s) {
    m.perm[s] = a.perm[b.perm[s]];
    m.val[s] = a.val[b.perm[s]] * b.val[s];
  }
  return m;
}

Monomial adjoint(const Monomial& a) {
  Monomial m{std::vector<long long>(a.perm.size()), std::vector<cplx>(a.perm.size())};
  for (std::size_t s = 0; s < a.perm.size(); ++s) {
    m.perm[a.perm[s]] = static_cast<long long>(s);
    m.val[a.perm[s]] = std::conj(a.val[s]);
  }
  return m;
}

// Distance of a monomial from c * identity.
double scalar_distance(const Monomial& m, cplx c) {
  double err = 0.0;
  for (std::size_t s = 0; s < m.perm.size(); ++s) {
    if (m.perm[s] != static_cast<long long>(s)) return 2.0;
    err = std::max(err, std::abs(m.val[s] - c));
  }
  return err;
}

}  // namespace

WeylCheck weyl_commutation_check(long long d, double tol) {
  PhaseConstants pc(d);
  WeylCheck out;
  const CMatrix x = displacement(d, {1, 0});
  const CMatrix z = displacement(d, {0, 1});
  double err = max_abs(z * x - pc.omega * x * z);
  CMatrix xd = CMatrix::Identity(d, d), zd = CMatrix::Identity(d, d);
  for (long long k = 0; k < d; ++k) {
    xd = xd * x;
    zd = zd * z;
  }
  err = std::max(err, max_abs(xd - CMatrix::Identity(d, d)));
  err = std::max(err, max_abs(zd - CMatrix::Identity(d, d)));

  std::vector<Monomial> ms;
  std::vector<Monomial> adj;
  ms.reserve(d * d);
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j) {
      ms.push_back(monomial(pc, {i, j}));
      adj.push_back(adjoint(ms.back()));
    }
  double err_plus = 0.0, err_minus = 0.0;
  for (long long a = 0; a < d * d; ++a) {
    for (long long b = 0; b < d * d; ++b) {
      const long long pi = a / d, pj = a % d, qi = b / d, qj = b % d;
      const Monomial c = compose(compose(ms[a], ms[b]), compose(adj[a], adj[b]));
      const long long form = pj * qi - pi * qj;
      err_plus = std::max(err_plus, scalar_distance(c, pc.omega_pow(form)));
      err_minus = std::max(err_minus, scalar_distance(c, pc.omega_pow(-form)));
    }
  }
  if (err_plus <= tol) {
    out.form_sign = 1;
  } else if (err_minus <= tol) {
    out.form_sign = -1;
  }
  out.max_error = std::max(err, std::min(err_plus, err_minus));
  out.ok = out.form_sign != 0 && out.max_error <= tol;
  return out;
}

namespace {

void require_coprime(long long n1, long long n2) {
  if (n1 < 1 || n2 < 1 || gcd(n1, n2) != 1)
    throw Error(Errc::NotCoprime, "CRT factors must be coprime: " + std::to_string(n1) + ", " + std::to_string(n2));
}

}  // namespace

CMatrix crt_permutation(long long n1, long long n2) {
  require_coprime(n1, n2);
  const long long n = n1 * n2;
  CMatrix v = CMatrix::Zero(n, n);
  for (long long r = 0; r < n; ++r) v(n2 * (r % n1) + (r % n2), r) = 1.0;
  return v;
}

std::pair<DispIndex, DispIndex> crt_split_index(DispIndex p, long long n1, long long n2) {
  require_coprime(n1, n2);
  const long long n = n1 * n2;
  const long long i = mod(p.i, n), j = mod(p.j, n);
  DispIndex a{mod(i, n1), 0}, b{mod(i, n2), 0};
  if (n1 > 1) a.j = mod(j * *inverse_mod(n2, n1), n1);
  if (n2 > 1) b.j = mod(j * *inverse_mod(n1, n2), n2);
  if (n1 == 1) a = {0, 0};
  if (n2 == 1) b = {0, 0};
  return {a, b};
}

namespace {

// D_p of dimension n as a monomial; dimension 1 is the scalar 1.
Monomial monomial_any(long long n, DispIndex p) {
  if (n == 1) return {{0}, {cplx(1.0)}};
  return monomial(PhaseConstants(n), p);
}

std::vector<CrtSplit> bruteforce_table(long long n1, long long n2) {
  const long long n = n1 * n2;
  PhaseConstants pc(n);
  std::vector<Monomial> small1, small2;
  for (long long i = 0; i < n1; ++i)
    for (long long j = 0; j < n1; ++j) small1.push_back(monomial_any(n1, {i, j}));
  for (long long i = 0; i < n2; ++i)
    for (long long j = 0; j < n2; ++j) small2.push_back(monomial_any(n2, {i, j}));
  auto row = [&](long long r) { return n2 * (r % n1) + (r % n2); };

  std::vector<CrtSplit> table;
  table.reserve(n * n);
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      const Monomial g = monomial(pc, {i, j});
      // g in the tensor basis: column row(s) -> row(g.perm[s]).
      std::vector<long long> perm(n);
      std::vector<cplx> val(n);
      for (long long s = 0; s < n; ++s) {
        perm[row(s)] = row(g.perm[s]);
        val[row(s)] = g.val[s];
      }
      bool found = false;
      for (long long a = 0; a < n1 * n1 && !found; ++a) {
        for (long long b = 0; b < n2 * n2 && !found; ++b) {
          const Monomial& m1 = small1[a];
          const Monomial& m2 = small2[b];
          cplx phase = 0.0;
          bool ok = true;
          for (long long c = 0; c < n && ok; ++c) {
            const long long c1 = c / n2, c2 = c % n2;
            if (perm[c] != m1.perm[c1] * n2 + m2.perm[c2]) {
              ok = false;
              break;
            }
            const cplx ratio = val[c] / (m1.val[c1] * m2.val[c2]);
            if (c == 0) {
              phase = ratio;
            } else if (std::abs(ratio - phase) > 1e-12) {
              ok = false;
            }
          }
          if (ok) {
            table.push_back({{a / n1, a % n1}, {b / n2, b % n2}, phase});
            found = true;
          }
        }
      }
      if (!found) throw Error(Errc::DimensionMismatch, "CRT split has no tensor factorization");
    }
  }
  return table;
}

std::shared_mutex g_crt_mutex;
std::map<std::pair<long long, long long>, std::vector<CrtSplit>> g_crt_cache;

}  // namespace

CrtSplit crt_split_index_bruteforce(DispIndex p, long long n1, long long n2) {
  require_coprime(n1, n2);
  const long long n = n1 * n2;
  const auto key = std::make_pair(n1, n2);
  const std::size_t idx = static_cast<std::size_t>(mod(p.i, n) * n + mod(p.j, n));
  {
    std::shared_lock lock(g_crt_mutex);
    auto it = g_crt_cache.find(key);
    if (it != g_crt_cache.end()) return it->second[idx];
  }
  auto table = bruteforce_table(n1, n2);
  std::unique_lock lock(g_crt_mutex);
  auto [it, inserted] = g_crt_cache.emplace(key, std::move(table));
  return it->second[idx];
}

}  // namespace sicl
