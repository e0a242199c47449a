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

#include <array>
#include <random>

namespace chronoflip {

using Rng = std::mt19937_64;

// --- Seeded sampling ---------------------------------------------------------

ComplexMatrix random_ginibre(int rows, int cols, Rng& rng);
/// Haar-distributed unitary: QR of a Ginibre matrix with the R-diagonal
/// phase normalization.
ComplexMatrix random_unitary(int d, Rng& rng);
/// Haar unitary rescaled to determinant one.
ComplexMatrix random_special_unitary(int d, Rng& rng);
ComplexVector random_state(int d, Rng& rng);
ComplexMatrix random_density(int d, Rng& rng);
ComplexMatrix random_hermitian(int d, Rng& rng);
/// CPTP channel with the given Kraus rank (Choi of a normalized Ginibre pair).
Channel random_cptp_channel(int d, int kraus_rank, Rng& rng);
/// Random mixture of Haar unitary channels (bistochastic by construction).
Channel random_bistochastic_channel(int d, int n_unitaries, Rng& rng);
/// Choi operator |Ψ⟩⟨Ψ| of a random rank-one completely positive qubit map.
ChoiOperator random_rank_one_cp_choi(int d, Rng& rng);

// --- Weingarten calculus (degree ≤ 3) ----------------------------------------

/// Permutations of S_k together with the Gram matrix G[σ,τ] = d^{#cycles(σ⁻¹τ)}
/// and its Moore–Penrose pseudo-inverse. The pseudo-inverse keeps the moment
/// formula exact also for d < k, where the Gram matrix is singular.
struct WeingartenTable {
  int degree = 0;
  int dim = 0;
  std::vector<std::vector<int>> permutations;
  RealMatrix gram;
  RealMatrix gram_inverse;
};

/// Supported for k ≤ 3 and any d ≥ 2.
WeingartenTable weingarten_gram_inverse(int k, int d);

/// E[ Π_a U[r_a,c_a] · Π_a Ū[r'_a,c'_a] ] over Haar measure;
/// zero when the two lists have different lengths.
double haar_moment(const WeingartenTable& table,
                   const std::vector<std::pair<int, int>>& u_entries,
                   const std::vector<std::pair<int, int>>& ubar_entries);

/// A monomial tensor ⊗_s M_s with M_s ∈ {U, Ū} per slot. Haar averages of
/// unbalanced patterns vanish.
struct MomentSpec {
  int dim = 0;
  std::vector<bool> conjugated;  // slot s carries Ū when conjugated[s]

  int degree() const;  // number of U slots (= Ū slots when balanced)
  bool balanced() const;
};

/// E[⊗_s M_s] as a matrix on (C^d)^{⊗slots}, via the Weingarten formula.
ComplexMatrix haar_moment_tensor(const MomentSpec& spec);

struct MonteCarloEstimate {
  Complex mean;
  double std_error = 0.0;
};

/// Monte Carlo estimate of one Haar moment (pairwise-summed, seeded).
MonteCarloEstimate monte_carlo_moment(int d,
                                      const std::vector<std::pair<int, int>>& u_entries,
                                      const std::vector<std::pair<int, int>>& ubar_entries,
                                      long samples, uint64_t seed);

// --- Unitary designs ----------------------------------------------------------

struct UnitaryDesign {
  std::vector<ComplexMatrix> elements;  // uniform weights
  int strength = 0;
};

/// Average of ⊗_s M_s over the design elements.
ComplexMatrix design_moment_tensor(const MomentSpec& spec, const UnitaryDesign& design);

/// Moment test: the design reproduces the degree-(t,t) Haar tensor within tol.
bool design_has_strength(const UnitaryDesign& design, int t, int d,
                         double tol = 1e-10);

/// The 24 canonical-phase single-qubit Clifford representatives (a 3-design).
UnitaryDesign single_qubit_clifford_group();

// --- Exact twirls and the fidelity operators ----------------------------------

enum class TwirlMethod { Design, Weingarten };

/// F = (1/d²) ∫dU |U⟩⟩⟨⟨U| ⊗ |Ū⟩⟩⟨⟨Ū|, on four d-dimensional factors
/// ordered (row(U), col(U), row(Ū), col(Ū)).
ComplexMatrix frame_operator(int d, TwirlMethod method);
/// Closed form E₁₃⊗E₂₄/d² + (1 − 1/d²)·E⊥₁₃⊗E⊥₂₄/(d²−1)².
ComplexMatrix frame_operator_closed_form(int d);

/// Ω = (1/d²) ∫dU |Ū⟩⟩⟨⟨Ū|_{A_i A_o} ⊗ |Ū⟩⟩⟨⟨Ū|_{B_i B_o} ⊗ |Uᵀ⟩⟩⟨⟨Uᵀ|_{C_i C_o},
/// on factors ordered (A_i, A_o, B_i, B_o, C_i, C_o).
ComplexMatrix omega_operator(int d, TwirlMethod method);
SystemDims omega_dims(int d);

/// ∫dU W X W† with W = Ū⊗Ū⊗U, by exact Weingarten moments.
ComplexMatrix conjugate_rep_twirl(const ComplexMatrix& x, int d);

/// Orthogonal projectors onto the three isotypic components of Ū⊗Ū⊗U on
/// (C^d)^⊗3, in the order (multiplicity-two block of rank 2d,
/// rank d(d₊−1), rank d(d₋−1)) with d± = d(d±1)/2. Supported for d ∈ {2, 3};
/// the last projector vanishes at d = 2.
std::array<ComplexMatrix, 3> isotypic_projectors(int d);

// --- Operator inequalities bounding two definite-direction uses ---------------

/// d = 2: builds the measure-and-prepare channel N from the states ρ± (α = 3/5)
/// and reports the smallest eigenvalue of Choi(N)⊗I_{C_o} − (6/5)·Ω, together
/// with the shared-marginal distance and the traces of ρ±.
struct ControlledUseQubitBound {
  double min_eigenvalue = 0.0;
  double marginal_distance = 0.0;
  double rho_plus_trace = 0.0;
  double rho_minus_trace = 0.0;
};
ControlledUseQubitBound two_copy_inequality_qubit(TwirlMethod method = TwirlMethod::Weingarten);

/// General d: reports the smallest eigenvalue of (6/d²)·ρ⊗I − Ω with
/// ρ built from the isotypic projectors, and Tr[ρ] (1 for d ≥ 3).
struct ControlledUseBound {
  double min_eigenvalue = 0.0;
  double rho_trace = 0.0;
};
ControlledUseBound two_copy_inequality(int d);

}  // namespace chronoflip
