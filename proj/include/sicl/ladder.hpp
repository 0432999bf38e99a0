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

// Dimension ladder d -> d(d-2): symmetric lift, generalized parity, paired
// eigenbases, the proto-SIC family and the alignment verifier.
//
// Proto vectors live in C^{d-2} (x) C^d (small factor slow). The global
// vector in C^{d(d-2)} is crt_from_tensor(psi, d - 2, d).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sicl/frames.hpp"
#include "sicl/linalg.hpp"
#include "sicl/modular.hpp"
#include "sicl/sic.hpp"

namespace sicl {

struct HMatrix {
  long long d = 0;
  ModularMatrix2 matrix;  // diag(1, 2^{-1})

  static HMatrix of(long long d);
  /// H^{-1} F H.
  ModularMatrix2 conjugate(const ModularMatrix2& F) const;
};

/// Orthogonal d^2 x d^2 change of basis with W (D_{Hp} (x) D_{Hp}) W^T = 1_d (x) D_p.
/// Row x*d + i: for x < (d+1)/2 the symmetric combination of |a,b>, |b,a> with
/// a = x(d-1)/2 + i, b = x(d+1)/2 + i; for x >= (d+1)/2 the antisymmetric one
/// with x shifted down by (d-1)/2.
CMatrix symmetric_reindex(long long d);

struct SymLiftBlocks {
  long long d = 0;
  std::vector<CVector> blocks;  // x_0 .. x_{(d-1)/2}
  double orthonormality_defect = 0.0;
};

/// Blocks of W sqrt((d+1)/2) (psi (x) psi) in the symmetric sector. NotASic
/// unless verify_sic passes at 1e-8.
SymLiftBlocks lift_fiducial(const SicFiducial& f);

struct GeneralizedParity {
  long long d = 0;
  CMatrix matrix;  // from the lift: 2 sum |x_r><x_r| - 1
  std::string source;
  /// max entry difference against (1/d) sum_p T[Hp]^2 D_{-p}.
  double dual_construction_gap = 0.0;
};

CMatrix parity_from_lift(const SymLiftBlocks& lift);
CMatrix parity_from_phases(const OverlapTable& table);
GeneralizedParity generalized_parity(const SicFiducial& f);

struct LabeledVector {
  int label = 0;  // eigenvalue omega_3^label
  CVector v;
};

struct PairedBases {
  long long d = 0;
  ModularMatrix2 F;        // symmetry of the d-dimensional fiducial
  ModularMatrix2 F_prime;  // H^{-1} F H
  ModularMatrix2 F_small;  // order-3 generator in dimension d - 2
  std::vector<LabeledVector> e_basis;  // in C^d, -1 eigenspace of P_theta
  std::vector<LabeledVector> f_basis;  // in C^{d-2}, +1 eigenspace of U_P
  double commutator = 0.0;             // ||[U_{F'}, P_theta]||_max
};

/// Eigenvectors of U_{F'} inside the -1 eigenspace of P_theta and of
/// U_{F_small} inside the +1 eigenspace of the parity operator, each unitary
/// phase-fixed by table, each vector with first significant component real
/// positive. Labels ascend. The fiducial must carry its order-3 symmetry.
PairedBases paired_bases(const SicFiducial& f, const ModularMatrix2& zauner_small, const GeneralizedParity& p_theta);

enum class ParamKind { Phase, HalfAngle, Free };

struct ProtoBlock {
  int f_label = 0;
  int e_label = 0;
  std::vector<int> f_index;  // into f_basis
  std::vector<int> e_index;  // into e_basis
  bool special = false;      // first block: global phase removed
  int conjugate_of = -1;     // block whose unitary this one conjugates
  int param_offset = 0;
  int param_count = 0;
};

struct ProtoFamily {
  long long d = 0;
  std::vector<LabeledVector> e_basis;
  std::vector<LabeledVector> f_basis;
  std::vector<ProtoBlock> blocks;  // ascending f label
  int sector = 0;                  // target eigenvalue omega_3^sector of U_{F''} (x) U_{F'}
  bool conjugate_pairing = false;
  std::vector<ParamKind> kinds;
  std::vector<double> params;

  int param_count() const { return static_cast<int>(kinds.size()); }
  /// Pairs as (f-index, e-index, block-id).
  std::vector<std::array<int, 3>> pairing() const;
};

/// Pairs f-label l with e-label (sector - l) mod 3. BadPairing if a block
/// size disagrees. With conjugate pairing the label-2 block is the complex
/// conjugate of the label-1 block.
ProtoFamily make_family(const PairedBases& bases, int sector, bool conjugate_pairing = false);

/// Unit vector in C^{d-2} (x) C^d.
CVector build_proto(const ProtoFamily& family, const std::vector<double>& params);
/// Same vector in the CRT basis of C^{d(d-2)}.
CVector proto_global(const ProtoFamily& family, const std::vector<double>& params);
/// Block unitaries for the given parameters.
std::vector<CMatrix> block_unitaries(const ProtoFamily& family, const std::vector<double>& params);

/// Wraps phases into [0, 2pi) and folds half-angles into [0, pi], adjusting
/// companion phases so the vector is unchanged.
std::vector<double> canonicalize_params(const ProtoFamily& family, std::vector<double> params);

struct AlignmentCertificate {
  bool passes = false;
  std::optional<ModularMatrix2> matrix_M;
  long long det_M = 0;
  bool unimodular = false;  // det M = +-1
  double max_err_eq13 = 0.0;  // (d-1)<1 (x) D_p> + T[Mp]^2
  double max_err_eq14 = 0.0;  // (d-1)<D_p (x) 1> - 1
  explicit operator bool() const { return passes; }
};

/// psi in C^{d-2} (x) C^d. M is searched over det +-1 first, then any
/// invertible matrix, lexicographically; three mismatches reject a candidate.
AlignmentCertificate verify_alignment(const CVector& psi, const OverlapTable& theta_table, double tol = kPhysicsTol);

/// (d-1) <psi|1 (x) D_p|psi> for p in Z_d^2 and (d-1) <psi|D_q (x) 1|psi> for q in Z_{d-2}^2.
std::vector<cplx> big_factor_overlaps(const CVector& psi, long long d);
std::vector<cplx> small_factor_overlaps(const CVector& psi, long long d);

struct EmbeddedEtf {
  FrameSpec frame;   // restricted to its span: rank x d^2
  int rank = 0;
  CMatrix span;      // orthonormal basis of the span in C^{d-2} (x) C^d
  EtfCertificate certificate;
};

/// The frame {(1 (x) D_p) psi}. AlignmentRequired unless the small-factor
/// overlaps equal 1/(d-1) and the big-factor ones have modulus 1/(d-1),
/// within 1e-8.
EmbeddedEtf embedded_etf(const CVector& psi, long long d);

/// (D_q (x) 1) span for q in Z_{d-2}^2, lexicographic.
std::vector<CMatrix> translated_subspaces(const CMatrix& span, long long d);

}  // namespace sicl
