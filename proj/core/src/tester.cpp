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

#include "chronoflip/tester.hpp"

#include <chrono>

namespace chronoflip {

namespace {

// Superoperators defining the constraint families, acting on operators over
// (A_i, A_o, B_i, B_o).
ComplexMatrix structure_map(const ComplexMatrix& t, const SystemDims& dims, int d) {
  const ComplexMatrix m_ao = partial_trace(t, dims, {"A_o"});
  const ComplexMatrix m_bo = partial_trace(t, dims, {"B_o"});
  const ComplexMatrix m_both = partial_trace(t, dims, {"A_o", "B_o"});
  return t - embed(m_ao, dims.erased({"A_o"}), dims) / double(d) -
         embed(m_bo, dims.erased({"B_o"}), dims) / double(d) +
         embed(m_both, dims.erased({"A_o", "B_o"}), dims) / double(d * d);
}

ComplexMatrix marginal_a_map(const ComplexMatrix& t, const SystemDims& dims, int d) {
  const SystemDims rest = dims.erased({"A_i", "A_o"});
  const ComplexMatrix lhs = partial_trace(t, dims, {"A_i", "A_o"});
  const ComplexMatrix marg = partial_trace(t, dims, {"A_i", "A_o", "B_o"});
  return lhs - embed(marg, dims.erased({"A_i", "A_o", "B_o"}), rest) / double(d);
}

ComplexMatrix marginal_b_map(const ComplexMatrix& t, const SystemDims& dims, int d) {
  const SystemDims rest = dims.erased({"B_i", "B_o"});
  const ComplexMatrix lhs = partial_trace(t, dims, {"B_i", "B_o"});
  const ComplexMatrix marg = partial_trace(t, dims, {"A_o", "B_i", "B_o"});
  return lhs - embed(marg, dims.erased({"A_o", "B_i", "B_o"}), rest) / double(d);
}

}  // namespace

SystemDims tester_dims(int d) {
  return SystemDims{{"A_i", d}, {"A_o", d}, {"B_i", d}, {"B_o", d}};
}

TesterConstraintSet tester_constraints(int d) {
  TesterConstraintSet set;
  set.d = d;
  set.dims = tester_dims(d);
  const long n = set.dims.total_dim();
  const long coords = n * n;

  const std::vector<ComplexMatrix> basis = hermitian_basis(static_cast<int>(n));

  std::vector<RealVector> rows;
  std::vector<double> rhs;
  std::vector<std::string> tags;

  const auto add_family = [&](const std::string& tag,
                              const std::function<ComplexMatrix(const ComplexMatrix&)>& map,
                              long out_dim) {
    RealMatrix columns(out_dim * out_dim, coords);
    for (long bj = 0; bj < coords; ++bj)
      columns.col(bj) = hermitian_to_real(map(basis[bj]));
    for (long alpha = 0; alpha < out_dim * out_dim; ++alpha) {
      rows.push_back(columns.row(alpha).transpose());
      rhs.push_back(0.0);
      tags.push_back(tag);
    }
  };

  add_family("structure",
             [&](const ComplexMatrix& x) { return structure_map(x, set.dims, d); }, n);
  add_family("marginal-a",
             [&](const ComplexMatrix& x) { return marginal_a_map(x, set.dims, d); },
             static_cast<long>(d) * d);
  add_family("marginal-b",
             [&](const ComplexMatrix& x) { return marginal_b_map(x, set.dims, d); },
             static_cast<long>(d) * d);

  // Tr T = d²
  rows.push_back(hermitian_to_real(identity(static_cast<int>(n))));
  rhs.push_back(double(d) * d);
  tags.push_back("normalization");

  set.rows = RealMatrix(rows.size(), coords);
  set.rhs = RealVector(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    set.rows.row(r) = rows[r];
    set.rhs(r) = rhs[r];
  }
  set.tags = std::move(tags);
  return set;
}

RealVector TesterConstraintSet::residuals(const ComplexMatrix& t) const {
  return rows * hermitian_to_real(t) - rhs;
}

double TesterConstraintSet::max_violation(const ComplexMatrix& t) const {
  return residuals(t).cwiseAbs().maxCoeff();
}

ComplexMatrix born_operator(const ComplexMatrix& v_gate, const ComplexMatrix& u_gate,
                            int d) {
  const SystemDims dims = tester_dims(d);
  const ComplexVector v_ket = double_ket(v_gate);
  const ComplexVector u_ket = double_ket(u_gate);
  const ComplexMatrix j_v = v_ket * v_ket.adjoint();
  const ComplexMatrix j_u = u_ket * u_ket.adjoint();
  const ComplexMatrix placed =
      embed(j_v, SystemDims{{"A_o", d}, {"A_i", d}}, dims) *
      embed(j_u, SystemDims{{"B_o", d}, {"B_i", d}}, dims);
  return placed.transpose();
}

double tester_probability(const ComplexMatrix& t_x, const ComplexMatrix& v_gate,
                          const ComplexMatrix& u_gate, int d) {
  return (t_x * born_operator(v_gate, u_gate, d)).trace().real();
}

double ErrorTerms::worst() const {
  double w = 0.0;
  for (double e : plus_errors) w = std::max(w, e);
  for (double e : minus_errors) w = std::max(w, e);
  return w;
}

ErrorTerms error_terms(const Tester& tester, const BuiltinSets& sets) {
  const int d = tester.dims.dim(0);
  ErrorTerms out;
  for (const auto& pair : sets.plus_set)
    out.plus_errors.push_back(tester_probability(tester.t_minus, pair.v, pair.u, d));
  for (const auto& pair : sets.minus_set)
    out.minus_errors.push_back(tester_probability(tester.t_plus, pair.v, pair.u, d));
  return out;
}

std::vector<ComplexMatrix> tester_from_forward_circuit(
    const ComplexMatrix& input_state, const std::vector<ComplexMatrix>& povm,
    int d, int dr) {
  if (input_state.rows() != static_cast<Eigen::Index>(d) * dr)
    throw std::invalid_argument("tester_from_forward_circuit: input state dimension mismatch");
  const long n = static_cast<long>(d) * d * d * d;
  std::vector<ComplexMatrix> testers;

  for (const auto& m_x : povm) {
    if (m_x.rows() != static_cast<Eigen::Index>(d) * dr)
      throw std::invalid_argument("tester_from_forward_circuit: POVM dimension mismatch");
    ComplexMatrix t_x = ComplexMatrix::Zero(n, n);
    for (int a1 = 0; a1 < d; ++a1)
      for (int a2 = 0; a2 < d; ++a2)
        for (int t1 = 0; t1 < d; ++t1)
          for (int t2 = 0; t2 < d; ++t2) {
            Complex coupling = 0.0;
            for (int r = 0; r < dr; ++r)
              for (int rp = 0; rp < dr; ++rp)
                coupling += m_x(static_cast<long>(t2) * dr + r,
                                static_cast<long>(t1) * dr + rp) *
                            input_state(static_cast<long>(a1) * dr + rp,
                                        static_cast<long>(a2) * dr + r);
            if (coupling == Complex(0.0)) continue;
            // coefficient of |a1⟩⟨a2|_{A_i} ⊗ |s⟩⟨s'|_{A_o} ⊗ |s⟩⟨s'|_{B_i} ⊗ |t1⟩⟨t2|_{B_o}
            for (int s = 0; s < d; ++s)
              for (int sp = 0; sp < d; ++sp) {
                const long row = ((static_cast<long>(a1) * d + s) * d + s) * d + t1;
                const long col = ((static_cast<long>(a2) * d + sp) * d + sp) * d + t2;
                t_x(row, col) += coupling;
              }
          }
    testers.push_back(std::move(t_x));
  }
  return testers;
}

Tester random_feasible_tester(int d, Rng& rng) {
  const TesterConstraintSet constraints = tester_constraints(d);
  const long n = constraints.dims.total_dim();
  const long coords = n * n;

  // Stacked affine projection for (T₊, T₋): rows act on the sum.
  RealMatrix a(constraints.rows.rows(), 2 * coords);
  a << constraints.rows, constraints.rows;
  const RealMatrix at = a.transpose();
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(a * at);
  RealVector inv = RealVector::Zero(solver.eigenvalues().size());
  const double cutoff = 1e-12 * std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < inv.size(); ++i)
    if (solver.eigenvalues()(i) > cutoff) inv(i) = 1.0 / solver.eigenvalues()(i);
  const RealMatrix pinv =
      solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();

  ComplexMatrix g_plus = random_ginibre(static_cast<int>(n), static_cast<int>(n), rng);
  ComplexMatrix g_minus = random_ginibre(static_cast<int>(n), static_cast<int>(n), rng);
  ComplexMatrix t_plus = g_plus * g_plus.adjoint() / double(n);
  ComplexMatrix t_minus = g_minus * g_minus.adjoint() / double(n);

  for (int iter = 0; iter < 20000; ++iter) {
    RealVector stacked(2 * coords);
    stacked << hermitian_to_real(t_plus), hermitian_to_real(t_minus);
    stacked -= at * (pinv * (a * stacked - constraints.rhs));
    t_plus = project_psd(real_to_hermitian(stacked.head(coords), static_cast<int>(n)));
    t_minus = project_psd(real_to_hermitian(stacked.tail(coords), static_cast<int>(n)));
    if (constraints.max_violation(t_plus + t_minus) <= 1e-9) break;
  }
  if (constraints.max_violation(t_plus + t_minus) > 1e-9)
    throw std::runtime_error("random_feasible_tester: projections did not converge");
  return Tester{t_plus, t_minus, constraints.dims};
}

MinimaxSdp build_minimax_sdp(const BuiltinSets& sets) {
  const int d = static_cast<int>(sets.plus_set.front().u.rows());
  const SystemDims dims = tester_dims(d);
  const int n = static_cast<int>(dims.total_dim());
  const int pairs = static_cast<int>(sets.plus_set.size() + sets.minus_set.size());

  MinimaxSdp out;
  out.block_t_plus = out.problem.add_psd_block(n);
  out.block_t_minus = out.problem.add_psd_block(n);
  out.block_epigraph = out.problem.add_free_block(1);
  out.block_slack = out.problem.add_nonneg_block(pairs);

  for (const auto& pair : sets.plus_set)
    out.plus_born.push_back(born_operator(pair.v, pair.u, d));
  for (const auto& pair : sets.minus_set)
    out.minus_born.push_back(born_operator(pair.v, pair.u, d));

  // Tester constraint families on T₊ + T₋.
  const auto on_both = [&](const std::function<ComplexMatrix(const ComplexMatrix&)>& map) {
    return std::vector<std::pair<int, std::function<ComplexMatrix(const ComplexMatrix&)>>>{
        {out.block_t_plus, map}, {out.block_t_minus, map}};
  };
  add_operator_equality(
      out.problem,
      on_both([&, d](const ComplexMatrix& x) { return structure_map(x, dims, d); }), {},
      ComplexMatrix::Zero(n, n), "structure");
  add_operator_equality(
      out.problem,
      on_both([&, d](const ComplexMatrix& x) { return marginal_a_map(x, dims, d); }), {},
      ComplexMatrix::Zero(d * d, d * d), "marginal-a");
  add_operator_equality(
      out.problem,
      on_both([&, d](const ComplexMatrix& x) { return marginal_b_map(x, dims, d); }), {},
      ComplexMatrix::Zero(d * d, d * d), "marginal-b");
  {
    SdpConstraint norm_row;
    norm_row.tag = "normalization";
    norm_row.matrix_terms.push_back(SdpMatrixTerm{out.block_t_plus, identity(n)});
    norm_row.matrix_terms.push_back(SdpMatrixTerm{out.block_t_minus, identity(n)});
    norm_row.rhs = double(d) * d;
    out.problem.constraints.push_back(std::move(norm_row));
  }

  // Epigraph rows: error term + slack − t = 0.
  int slack_index = 0;
  const auto add_epigraph = [&](int tester_block, const ComplexMatrix& born) {
    SdpConstraint row;
    row.tag = "epigraph";
    row.matrix_terms.push_back(SdpMatrixTerm{tester_block, 0.5 * (born + born.adjoint())});
    RealVector slack_coeff = RealVector::Zero(pairs);
    slack_coeff(slack_index++) = 1.0;
    row.scalar_terms.push_back(SdpScalarTerm{out.block_slack, slack_coeff});
    RealVector t_coeff(1);
    t_coeff << -1.0;
    row.scalar_terms.push_back(SdpScalarTerm{out.block_epigraph, t_coeff});
    row.rhs = 0.0;
    out.problem.constraints.push_back(std::move(row));
  };
  for (const auto& born : out.plus_born) add_epigraph(out.block_t_minus, born);
  for (const auto& born : out.minus_born) add_epigraph(out.block_t_plus, born);

  RealVector objective_coeff(1);
  objective_coeff << 1.0;
  out.problem.objective.scalar_terms.push_back(
      SdpScalarTerm{out.block_epigraph, objective_coeff});
  return out;
}

BoundReport optimal_error_bound(const SdpOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const BuiltinSets sets = builtin_sets();
  const int d = 2;

  MinimaxSdp minimax = build_minimax_sdp(sets);
  const SdpSolution sol = solve_sdp(minimax.problem, options);

  BoundReport report;
  report.objective = sol.objective;
  report.dual_objective = sol.dual_objective;
  report.gap = sol.gap;
  report.primal_residual = sol.primal_residual;
  report.psd_violation = sol.psd_violation;
  report.dual_residual = sol.dual_residual;
  report.iterations = sol.iterations;
  report.seed = sol.seed;
  report.status = sol.status;
  report.tester = Tester{sol.matrix_values[minimax.block_t_plus],
                         sol.matrix_values[minimax.block_t_minus], tester_dims(d)};
  report.errors = error_terms(report.tester, sets);
  report.constraint_violation =
      tester_constraints(d).max_violation(report.tester.t_plus + report.tester.t_minus);
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace chronoflip
