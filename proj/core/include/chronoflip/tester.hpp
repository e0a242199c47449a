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

#include "chronoflip/game.hpp"
#include "chronoflip/haar.hpp"
#include "chronoflip/sdp.hpp"

namespace chronoflip {

/// Two-outcome measurement on a pair of channels: PSD operators on
/// A_i⊗A_o⊗B_i⊗B_o whose sum satisfies the process-matrix constraints.
struct Tester {
  ComplexMatrix t_plus;
  ComplexMatrix t_minus;
  SystemDims dims;  // (A_i, A_o, B_i, B_o)
};

SystemDims tester_dims(int d);

/// The four affine constraint families on T = T₊ + T₋, as rows over the
/// real coordinates of T:
///   (structure)      T = [I_{A_o}⊗Tr_{A_o}T + I_{B_o}⊗Tr_{B_o}T]/d
///                        − I_{A_o}⊗I_{B_o}⊗Tr_{A_oB_o}T/d²
///   (marginal-a)     Tr_{A_iA_o}T = I_{B_o}⊗Tr_{A_iA_oB_o}T/d
///   (marginal-b)     Tr_{B_iB_o}T = I_{A_o}⊗Tr_{A_oB_iB_o}T/d
///   (normalization)  Tr T = d²
struct TesterConstraintSet {
  int d = 0;
  SystemDims dims;
  RealMatrix rows;  // over hermitian_to_real coordinates of T
  RealVector rhs;
  std::vector<std::string> tags;

  RealVector residuals(const ComplexMatrix& t) const;
  double max_violation(const ComplexMatrix& t) const;
};

TesterConstraintSet tester_constraints(int d);

/// Born operator E(V, U) with outcome probability p = Tr[T·E]: the V box is
/// wired first (slot A), the U box second (slot B), each gate's Choi placed
/// by label and the whole operator transposed.
ComplexMatrix born_operator(const ComplexMatrix& v_gate, const ComplexMatrix& u_gate,
                            int d);

/// Probability of outcome T_x on the channel pair with Choi operators
/// placed as in born_operator.
double tester_probability(const ComplexMatrix& t_x, const ComplexMatrix& v_gate,
                          const ComplexMatrix& u_gate, int d);

/// Error terms of a binary tester against the built-in sets:
///   plus_errors[i]  = Tr[T₋·E(V_i, U_i)]  over the Plus set,
///   minus_errors[j] = Tr[T₊·E(V_j, U_j)]  over the Minus set.
struct ErrorTerms {
  std::vector<double> plus_errors;
  std::vector<double> minus_errors;
  double worst() const;
};
ErrorTerms error_terms(const Tester& tester, const BuiltinSets& sets);

/// Compile the tester of a fixed-direction strategy: prepare `input_state`
/// on A_i⊗R, send A_o through a wire into B_i, measure `povm` on B_o⊗R.
std::vector<ComplexMatrix> tester_from_forward_circuit(
    const ComplexMatrix& input_state, const std::vector<ComplexMatrix>& povm,
    int d, int dr);

/// A feasible tester from alternating projections of a random PSD pair onto
/// the constraint set (residual ≤ 1e−9).
Tester random_feasible_tester(int d, Rng& rng);

/// The epigraph program minimizing the worst error term over valid testers.
struct MinimaxSdp {
  SdpProblem problem;
  int block_t_plus = -1;
  int block_t_minus = -1;
  int block_epigraph = -1;
  int block_slack = -1;
  std::vector<ComplexMatrix> plus_born;   // E(V_i,U_i), Plus set
  std::vector<ComplexMatrix> minus_born;  // E(V_j,U_j), Minus set
};
MinimaxSdp build_minimax_sdp(const BuiltinSets& sets);

struct BoundReport {
  double objective = 0.0;
  double dual_objective = 0.0;
  double gap = 0.0;
  double primal_residual = 0.0;
  double psd_violation = 0.0;
  double dual_residual = 0.0;
  double constraint_violation = 0.0;  // tester constraints on returned T
  long iterations = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  SdpStatus status = SdpStatus::IterationLimit;
  ErrorTerms errors;  // recomputed from the returned tester
  Tester tester;
};

/// Solve the minimax program over the built-in sets and report the optimum
/// (the minimum worst-case error of every definite-time-direction strategy).
BoundReport optimal_error_bound(const SdpOptions& options = {});

}  // namespace chronoflip
