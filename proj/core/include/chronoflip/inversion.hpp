// Copyright 2026 The chronoflip developers
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

#include "chronoflip/channel.hpp"

namespace chronoflip {

/// The two canonical input-output inversions. Transposition basis is the
/// computational basis; the unitary-equivalence freedom is fixed to V = I.
enum class InversionKind { Transpose, Adjoint };

/// Raised when a channel's projection onto the bistochastic span has a
/// non-PSD Choi operator, so no inversion of the channel exists.
class NonPositiveProjectionError : public std::runtime_error {
 public:
  explicit NonPositiveProjectionError(double min_eigenvalue)
      : std::runtime_error("projection onto the bistochastic span is not completely positive (min eigenvalue " +
                           std::to_string(min_eigenvalue) + ")"),
        min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

/// Kraus-level inversion: Transpose maps {C_i} to {C_iᵀ}, Adjoint to {C_i†}.
Channel invert_channel(const Channel& c, InversionKind kind);

/// Choi-level transpose supermap, SWAP·x·SWAP†, for x on C^d ⊗ C^d.
ComplexMatrix choi_transpose_supermap(const ComplexMatrix& x);
/// Choi-level adjoint supermap, SWAP·xᵀ·SWAP†. Positive but not completely
/// positive, witnessed by a negative eigenvalue when applied to one half of
/// a two-qubit SWAP-gate Choi operator.
ComplexMatrix choi_adjoint_supermap(const ComplexMatrix& x);

/// True iff Tr_in[Choi] ∝ I_out and Tr_out[Choi] ∝ I_in within tol
/// (the map sends I to a multiple of I, and so does its transpose).
bool in_bistochastic_span(const ChoiOperator& m, double tol = kDefaultTol);

/// Projection onto the span of bistochastic maps, in Choi form:
///   Π(J) = J + (2·Tr J/d²)·I⊗I − (1/d)·Tr_in[J]⊗I_in − (1/d)·I_out⊗Tr_out[J].
/// Idempotent, and the identity on the bistochastic span.
ChoiOperator project_bistochastic(const ChoiOperator& m);

struct ChannelDecomposition {
  ChoiOperator bistochastic_part;  // Π(C)
  Channel k1;                      // constant channel onto C(I/d)
  Channel k2;                      // constant channel onto I/d
};

/// Decomposition C = Π(C) + K_{C(I/d)} − K_{I/d} of a trace-preserving channel.
ChannelDecomposition decompose_channel(const Channel& c, double tol = kDefaultTol);

/// Inversion of a general trace-preserving channel: project onto the
/// bistochastic span, then invert. Throws NonPositiveProjectionError when the
/// projected Choi operator fails PSD (possible only for d > 2).
Channel invert_general(const Channel& c, InversionKind kind, double tol = kDefaultTol);

/// Coefficient c(U) = (d²−1)·Tr[Choi(U)·Choi(B)] − ((d²−2)/d)·Tr[B(I)] of the
/// unitary-channel expansion of a bistochastic channel B: averaging
/// c(U)·U(·)U† over a unitary 2-design reconstructs B.
double unitary_decomposition_coefficient(const Channel& b, const ComplexMatrix& u);

/// The 4×4 operator G = I⊗I − 2|Φ⁺⟩⟨Φ⁺| with G|U⟩⟩ = −|U†⟩⟩ for U ∈ SU(2):
/// the unique CP-preserving Choi-level extension of the qubit adjoint.
ComplexMatrix qubit_adjoint_extension_G();

/// The d ≥ 3 classical channel whose bistochastic projection is not positive:
/// ⟨1|Π(C)(|1⟩⟨1|)|1⟩ = −(d−2)/(2d) (indices written 1-based).
Channel counterexample_channel(int d);

/// Closed form of Π applied to a rank-one qubit CP map with Choi |Ψ⟩⟨Ψ|:
/// ½|Ψ⟩⟨Ψ| + ½|Ψ'⟩⟨Ψ'| with the Schmidt coefficients of |Ψ'⟩ swapped.
/// A PSD witness that the qubit projection preserves complete positivity.
ComplexMatrix qubit_projection_closed_form(const ComplexVector& psi);

}  // namespace chronoflip
