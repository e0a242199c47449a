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

/// One Bell-measurement outcome of the teleportation circuit.
struct TeleportOutcome {
  int outcome_index = 0;            // m = a·d + b for U_m = X^a Z^b
  double probability = 0.0;         // exactly 1/d² for unitary inputs
  ComplexVector conditional_state;  // unit norm, on target ⊗ control
};

/// Weyl shift-and-clock family U_m = X^a Z^b, m = a·d + b; U_0 = I and
/// Tr[U_m† U_n] = d·δ_{mn}. These label the Bell measurement outcomes via
/// |B_m⟩ = (U_m† ⊗ I)|Φ⟩.
std::vector<ComplexMatrix> bell_basis(int d);

/// Exact statevector simulation of the probabilistic realisation: the gate u
/// is applied to half a maximally entangled pair, a controlled swap of the two
/// entangled halves is steered by the control qubit α|0⟩+β|1⟩, and a Bell
/// measurement teleports the target |ψ⟩. Outcome m = 0 heralds the
/// time-flipped action α·U|ψ⟩⊗|0⟩ + β·Uᵀ|ψ⟩⊗|1⟩.
std::vector<TeleportOutcome> simulate_flip_circuit(const ComplexMatrix& u,
                                                   const ComplexVector& psi,
                                                   Complex alpha, Complex beta,
                                                   double tol = kDefaultTol);

/// The Kraus operator of each heralded conditional map on target ⊗ control,
/// extracted from the circuit; Σ_m K_m†K_m = I.
std::vector<ComplexMatrix> heralded_kraus_operators(const ComplexMatrix& u,
                                                    double tol = kDefaultTol);

/// The CPTP map on target ⊗ control obtained by conditioning on m = 0;
/// equals the time flip of the unitary channel of u.
Channel postselected_channel(const ComplexMatrix& u, double tol = kDefaultTol);

/// Kraus-branch enumeration for a non-unitary bistochastic resource channel:
/// one statevector pass per Kraus operator. Returns the m = 0 conditional
/// channel, again equal to the time flip of c.
Channel postselected_channel(const Channel& c, double tol = kDefaultTol);

}  // namespace chronoflip
