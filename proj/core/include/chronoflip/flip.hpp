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

/// Choi operator of a supermap, on labelled systems (B_o, B_i, A_o, A_i):
/// A is the input slot (the channel acted upon), B the produced channel.
struct SuperChoi {
  ComplexMatrix matrix;
  SystemDims dims;
};

/// The quantum time flip: C ↦ controlled channel with Kraus operators
/// F_i = C_i ⊗ |0⟩⟨0| + C_iᵀ ⊗ |1⟩⟨1| on target ⊗ control (|0⟩ = forward).
/// Requires a bistochastic input; otherwise the output is not CPTP.
Channel time_flip(const Channel& c, double tol = kDefaultTol);

/// Choi-level form V·Choi(C)·V† with V = I⊗I ⊗ |00⟩ + SWAP ⊗ |11⟩.
/// Defined for arbitrary channels; equals choi_of_channel(time_flip(c)) on
/// bistochastic inputs, independent of the Kraus representation.
ChoiOperator time_flip_choi(const Channel& c);

/// Rank-one Choi operator |V⟩⟩⟨⟨V| of the time flip as a supermap, on
/// (B_o: 2d, B_i: 2d, A_o: d, A_i: d); trace 2d².
SuperChoi flip_supermap_choi(int d);

/// Apply a supermap to a channel via its Choi operators:
///   Choi(S(N)) = Tr_{A_i A_o}[ (I_{B_o B_i} ⊗ Choi(N))ᵀ · S ].
ChoiOperator contract_supermap(const SuperChoi& s, const ChoiOperator& n);

struct SupermapNormalizationReport {
  /// ‖Tr_{A_i A_o B_o}[S]/d − I_{B_i}‖_F
  double unit_output_residual = 0.0;
  /// Residual of Tr_{B_o}[S] against its required affine form in the
  /// marginals Tr_{A_i B_o}[S], Tr_{A_o B_o}[S], Tr_{A_i A_o B_o}[S].
  double structure_residual = 0.0;

  bool passes(double tol) const {
    return unit_output_residual <= tol && structure_residual <= tol;
  }
};

/// Verify the two normalization conditions a supermap Choi operator must
/// satisfy to send bistochastic channels to channels. Requires equal
/// dimensions for A_i and A_o.
SupermapNormalizationReport check_supermap_normalization(const SuperChoi& s);

/// Same check with the roles of A_i and A_o exchanged.
SupermapNormalizationReport check_supermap_normalization_swapped(const SuperChoi& s);

/// Bipartite supermaps on product bistochastic channels, each producing a
/// channel on target ⊗ control:
///   s1: A₁A₂ᵀ ⊗ |0⟩⟨0| + A₁ᵀA₂ ⊗ |1⟩⟨1|   (two opposed time flips)
///   s2: A₁A₂ ⊗ |0⟩⟨0| + A₂A₁ ⊗ |1⟩⟨1|     (superposition of orders)
///   s3: A₁A₂ ⊗ |0⟩⟨0| + A₂ᵀA₁ᵀ ⊗ |1⟩⟨1|   (composite vs its inversion)
Channel supermap_s1(const Channel& a1, const Channel& a2, double tol = kDefaultTol);
Channel supermap_s2(const Channel& a1, const Channel& a2, double tol = kDefaultTol);
Channel supermap_s3(const Channel& a1, const Channel& a2, double tol = kDefaultTol);

}  // namespace chronoflip
