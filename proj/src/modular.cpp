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

#include "sicl/modular.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "sicl/error.hpp"

namespace sicl {

long long gcd(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<long long> inverse_mod(long long a, long long m) {
  long long r0 = m, r1 = mod(a, m);
  long long s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    long long s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) return std::nullopt;
  return mod(s0, m);
}

ModularMatrix2::ModularMatrix2(long long a, long long b, long long c, long long g, long long d)
    : e_{mod(a, d), mod(b, d), mod(c, d), mod(g, d)}, d_(d) {
  if (d < 1) throw Error(Errc::BadDimension, "modulus must be positive");
}

long long ModularMatrix2::det() const { return mod(e_[0] * e_[3] - e_[1] * e_[2], d_); }

ModularMatrix2 ModularMatrix2::operator*(const ModularMatrix2& o) const {
  if (o.d_ != d_) throw Error(Errc::DimensionMismatch, "modulus mismatch in matrix product");
  return {e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
          e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3], d_};
}

DispIndex ModularMatrix2::operator*(const DispIndex& p) const {
  return {mod(e_[0] * p.i + e_[1] * p.j, d_), mod(e_[2] * p.i + e_[3] * p.j, d_)};
}

ModularMatrix2 ModularMatrix2::pow(long long n) const {
  ModularMatrix2 base = *this;
  if (n < 0) {
    auto inv = inverse();
    if (!inv) throw Error(Errc::NotSymplectic, "negative power of a singular matrix");
    base = *inv;
    n = -n;
  }
  ModularMatrix2 r = identity(d_);
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

long long ModularMatrix2::order(long long limit) const {
  ModularMatrix2 m = *this;
  for (long long k = 1; k <= limit; ++k) {
    if (m.is_identity()) return k;
    m = m * *this;
  }
  return 0;
}

std::optional<ModularMatrix2> ModularMatrix2::inverse() const {
  auto di = inverse_mod(det(), d_);
  if (!di) return std::nullopt;
  return ModularMatrix2{*di * e_[3], -*di * e_[1], -*di * e_[2], *di * e_[0], d_};
}

ModularMatrix2 ModularMatrix2::reduce(long long m) const {
  if (m < 1 || d_ % m != 0) throw Error(Errc::DimensionMismatch, "reduce: not a divisor of the modulus");
  return {e_[0], e_[1], e_[2], e_[3], m};
}

std::ostream& operator<<(std::ostream& os, const ModularMatrix2& m) {
  return os << "(" << m.e_[0] << "," << m.e_[1] << ";" << m.e_[2] << "," << m.e_[3] << ")_" << m.d_;
}

std::string ModularMatrix2::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

ModularMatrix2 parity_matrix(long long d) { return {-1, 0, 0, -1, d}; }

ModularMatrix2 zauner_matrix_standard(long long d) { return {0, -1, 1, -1, d}; }

ModularMatrix2 h_matrix(long long d) {
  auto half = inverse_mod(2, d);
  if (!half) throw Error(Errc::BadDimension, "H matrix needs odd d");
  return ModularMatrix2::diagonal(1, *half, d);
}

std::vector<ModularMatrix2> symplectic_elements_of_order(long long d, long long ord) {
  std::vector<ModularMatrix2> out;
  for (long long a = 0; a < d; ++a)
    for (long long b = 0; b < d; ++b)
      for (long long c = 0; c < d; ++c)
        for (long long g = 0; g < d; ++g) {
          ModularMatrix2 m{a, b, c, g, d};
          if (m.is_symplectic() && m.order(ord) == ord) out.push_back(m);
        }
  return out;
}

}  // namespace sicl
