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

#include <cstdint>
#include <functional>
#include <optional>

namespace chronoflip {

// Dense SDP in the form
//   minimize    Σ ⟨C_b, X_b⟩ + Σ c_s᙮x_s + const
//   subject to  affine equality rows over the variables,
//               X_b ⪰ 0 for PSD blocks, x_s ≥ 0 for NonNeg blocks.
// Hermitian matrix blocks are handled through an isometric real
// parametrization; the PSD projection runs on the real symmetric embedding.

enum class SdpBlockKind { Psd, Free, NonNeg };

struct SdpBlock {
  SdpBlockKind kind = SdpBlockKind::Free;
  int dim = 0;  // Psd: matrix side n; Free/NonNeg: number of scalars
};

struct SdpMatrixTerm {
  int block = -1;
  ComplexMatrix coeff;  // Hermitian
};

struct SdpScalarTerm {
  int block = -1;
  RealVector coeff;
};

struct SdpConstraint {
  std::vector<SdpMatrixTerm> matrix_terms;
  std::vector<SdpScalarTerm> scalar_terms;
  double rhs = 0.0;
  std::string tag;
};

struct SdpObjective {
  std::vector<SdpMatrixTerm> matrix_terms;
  std::vector<SdpScalarTerm> scalar_terms;
  double constant = 0.0;
};

struct SdpProblem {
  std::vector<SdpBlock> blocks;
  std::vector<SdpConstraint> constraints;
  SdpObjective objective;

  int add_psd_block(int n);
  int add_free_block(int count);
  int add_nonneg_block(int count);

  long real_dimension() const;
  long rows() const { return static_cast<long>(constraints.size()); }
  long count_tagged(const std::string& tag) const;
};

struct SdpOptions {
  long max_iter = 200000;
  double eps_gap = 1e-5;
  double eps_feas = 1e-7;
  std::uint64_t seed = 42;
  double rho = 1.0;
  double over_relaxation = 1.6;
  long check_every = 100;
};

enum class SdpStatus { Converged, IterationLimit, MaybeInfeasible };

struct SdpSolution {
  SdpStatus status = SdpStatus::IterationLimit;
  long iterations = 0;
  std::uint64_t seed = 0;

  // All residuals below are recomputed from the returned variables.
  double objective = 0.0;
  double dual_objective = 0.0;
  double gap = 0.0;             // relative primal-dual gap
  double primal_residual = 0.0; // ‖A x − b‖ / (1 + ‖b‖)
  double psd_violation = 0.0;   // most negative block eigenvalue, clamped at 0
  double dual_residual = 0.0;   // ‖c − A᙮y − s‖ / (1 + ‖c‖)

  std::vector<ComplexMatrix> matrix_values;  // empty for scalar blocks
  std::vector<RealVector> scalar_values;     // empty for PSD blocks

  /// Objective sampled at every convergence check, in iteration order.
  std::vector<double> objective_trace;
};

SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options = {});

// --- Hermitian ↔ real parametrization helpers ---------------------------------

/// Isometric real coordinates of a Hermitian n×n matrix (n² values):
/// diagonal entries, then √2·Re / √2·Im of the upper triangle.
RealVector hermitian_to_real(const ComplexMatrix& h);
ComplexMatrix real_to_hermitian(const RealVector& v, int n);

/// Orthonormal Hermitian basis matching the coordinates above.
std::vector<ComplexMatrix> hermitian_basis(int n);

/// Projection onto the PSD cone via the 2n×2n real symmetric embedding.
ComplexMatrix project_psd(const ComplexMatrix& h);

/// Append one equality row per Hermitian basis element of an operator
/// identity Σ_b maps_b(X_b) + Σ_s x_s·M_s = rhs, where each maps_b is a
/// linear superoperator acting on the corresponding PSD block.
void add_operator_equality(
    SdpProblem& problem,
    const std::vector<std::pair<int, std::function<ComplexMatrix(const ComplexMatrix&)>>>& matrix_maps,
    const std::vector<std::pair<int, std::vector<ComplexMatrix>>>& scalar_coeffs,
    const ComplexMatrix& rhs, const std::string& tag);

}  // namespace chronoflip
