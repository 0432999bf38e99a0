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

#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sicl {

/// Non-negative residue of `x` modulo `m`.
constexpr long long mod(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

long long gcd(long long a, long long b);

/// Inverse of `a` modulo `m`, or nullopt if gcd(a, m) != 1.
std::optional<long long> inverse_mod(long long a, long long m);

/// A point of Z_d x Z_d labelling a displacement operator.
struct DispIndex {
  long long i = 0;
  long long j = 0;

  friend bool operator==(const DispIndex&, const DispIndex&) = default;
};

/// 2x2 integer matrix (a b; c g) with entries reduced modulo `d`.
class ModularMatrix2 {
 public:
  ModularMatrix2() = default;
  ModularMatrix2(long long a, long long b, long long c, long long g, long long d);

  static ModularMatrix2 identity(long long d) { return {1, 0, 0, 1, d}; }
  static ModularMatrix2 diagonal(long long x, long long y, long long d) { return {x, 0, 0, y, d}; }

  long long a() const { return e_[0]; }
  long long b() const { return e_[1]; }
  long long c() const { return e_[2]; }
  long long g() const { return e_[3]; }
  long long modulus() const { return d_; }
  const std::array<long long, 4>& entries() const { return e_; }

  long long det() const;
  bool is_symplectic() const { return det() == 1 % d_; }
  long long trace() const { return mod(e_[0] + e_[3], d_); }

  ModularMatrix2 operator*(const ModularMatrix2& o) const;
  DispIndex operator*(const DispIndex& p) const;
  ModularMatrix2 pow(long long n) const;
  /// Multiplicative order, or 0 if it exceeds `limit`.
  long long order(long long limit = 100000) const;
  std::optional<ModularMatrix2> inverse() const;
  /// Same integer entries reduced modulo a divisor `m` of the modulus.
  ModularMatrix2 reduce(long long m) const;

  bool is_identity() const { return *this == identity(d_); }
  bool is_diagonal() const { return e_[1] == 0 && e_[2] == 0; }

  friend bool operator==(const ModularMatrix2&, const ModularMatrix2&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ModularMatrix2& m);
  std::string to_string() const;

 private:
  std::array<long long, 4> e_{1, 0, 0, 1};
  long long d_ = 1;
};

ModularMatrix2 parity_matrix(long long d);
ModularMatrix2 zauner_matrix_standard(long long d);

/// H = diag(1, 2^{-1}) mod d; relates the squared-phase representation on the
/// symmetric subspace to the standard one.
ModularMatrix2 h_matrix(long long d);

/// All elements of SL(2, Z_d) of exact order `ord`, lexicographic in
/// (a, b, c, g).
std::vector<ModularMatrix2> symplectic_elements_of_order(long long d, long long ord);

}  // namespace sicl
