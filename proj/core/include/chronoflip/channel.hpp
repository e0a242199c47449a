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

#include "chronoflip/linalg.hpp"

namespace chronoflip {

/// Quantum channel in Kraus form. The Kraus list is the source of truth;
/// the Choi operator is computed on demand.
struct Channel {
  std::vector<ComplexMatrix> kraus;  // each d_out × d_in
  int d_in = 0;
  int d_out = 0;

  Channel() = default;
  Channel(std::vector<ComplexMatrix> kraus_ops, int din, int dout);
};

/// Choi operator on output ⊗ input, with factors labelled "out", "in".
struct ChoiOperator {
  ComplexMatrix matrix;
  SystemDims dims;  // {("out", d_out), ("in", d_in)}

  ChoiOperator() = default;
  ChoiOperator(ComplexMatrix m, int d_out, int d_in);

  int d_out() const { return dims.dim(0); }
  int d_in() const { return dims.dim(1); }
};

/// Choi = Σ_i |C_i⟩⟩⟨⟨C_i| on output ⊗ input.
ChoiOperator choi_of_channel(const Channel& c);

/// Kraus operators from the scaled eigenvectors of a PSD Choi operator.
/// Eigenvalues in (-tol, tol) are dropped; an eigenvalue below -tol is an error.
Channel channel_of_choi(const ChoiOperator& j, double tol = kDefaultTol);

/// Σ_i C_i ρ C_i†
ComplexMatrix apply(const Channel& c, const ComplexMatrix& rho);

/// Action of a map given in Choi form: M(ρ) = Tr_in[J·(I_out ⊗ ρᵀ)].
ComplexMatrix apply_choi(const ChoiOperator& j, const ComplexMatrix& rho);

/// Equivalent Kraus set C'_j = Σ_i mixing(j, i)·C_i for an isometric mixing
/// matrix; leaves the Choi operator unchanged.
Channel remix_kraus(const Channel& c, const ComplexMatrix& mixing);

/// Σ C_i†C_i = I within tol.
bool is_cptp(const Channel& c, double tol = kDefaultTol);
/// Both Σ C_i†C_i = I and Σ C_iC_i† = I within tol.
bool is_bistochastic(const Channel& c, double tol = kDefaultTol);

Channel unitary_channel(const ComplexMatrix& u, double tol = kDefaultTol);
Channel identity_channel(int d);
/// K_ρ0(ρ) = ρ0 · Tr[ρ]
Channel constant_channel(const ComplexMatrix& rho0, double tol = kDefaultTol);
/// ρ ↦ Tr[ρ]·I/d
Channel depolarizing(int d);
/// Classical channel with Kraus { √p(y|x) |y⟩⟨x| }.  p is d_out × d_in with
/// columns summing to 1.
Channel classical_channel(const RealMatrix& p, double tol = kDefaultTol);

/// Apply c1 first, then c2.
Channel compose(const Channel& c2, const Channel& c1);
Channel tensor(const Channel& c1, const Channel& c2);

/// Frobenius distance of the Choi operators.
double choi_distance(const Channel& a, const Channel& b);

}  // namespace chronoflip
