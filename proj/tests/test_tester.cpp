#include <chronoflip/tester.hpp>

#include <doctest.h>

using namespace chronoflip;

namespace {

// evaluate one compiled constraint row on explicit block values
double evaluate_constraint(const SdpConstraint& row,
                           const std::vector<ComplexMatrix>& matrices,
                           const std::vector<RealVector>& scalars) {
  double value = 0.0;
  for (const auto& term : row.matrix_terms)
    value += (term.coeff.adjoint() * matrices[term.block]).trace().real();
  for (const auto& term : row.scalar_terms)
    value += term.coeff.dot(scalars[term.block]);
  return value - row.rhs;
}

}  // namespace

TEST_SUITE("tester") {

TEST_CASE("uniform tester satisfies the constraints") {
  const TesterConstraintSet constraints = tester_constraints(2);
  const ComplexMatrix uniform = identity(16) / 4.0;
  CHECK(constraints.max_violation(uniform) <= 1e-12);

  // scaling breaks only the normalization row
  const RealVector scaled = constraints.residuals(ComplexMatrix(2.0 * uniform));
  double structural = 0.0;
  bool norm_broken = false;
  for (Eigen::Index r = 0; r < scaled.size(); ++r) {
    if (constraints.tags[r] == "normalization")
      norm_broken = std::abs(scaled(r)) > 1.0;
    else
      structural = std::max(structural, std::abs(scaled(r)));
  }
  CHECK(norm_broken);
  CHECK(structural <= 1e-12);
}

TEST_CASE("forward circuit testers satisfy the constraints and the born rule") {
  Rng rng(71);
  const int d = 2, dr = 2;
  const ComplexVector psi_in = random_state(d * dr, rng);
  const ComplexMatrix input = psi_in * psi_in.adjoint();
  const ComplexMatrix w = random_unitary(d * dr, rng);
  std::vector<ComplexMatrix> povm;
  for (int k = 0; k < d * dr; ++k)
    povm.push_back(ComplexMatrix(w.col(k) * w.col(k).adjoint()));

  const auto testers = tester_from_forward_circuit(input, povm, d, dr);
  ComplexMatrix total = ComplexMatrix::Zero(16, 16);
  for (const auto& t : testers) {
    CHECK(min_eig(t) >= -1e-12);
    total += t;
  }
  CHECK(tester_constraints(d).max_violation(total) <= 1e-12);

  // probabilities match a direct simulation of the circuit
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix v_gate = random_unitary(d, rng);  // first box
    const ComplexMatrix u_gate = random_unitary(d, rng);  // second box
    const ComplexVector evolved = kron(ComplexMatrix(u_gate * v_gate), identity(dr)) * psi_in;
    double total_p = 0.0;
    for (size_t x = 0; x < povm.size(); ++x) {
      const double direct = (evolved.adjoint() * povm[x] * evolved)(0).real();
      const double via_tester = tester_probability(testers[x], v_gate, u_gate, d);
      CHECK(std::abs(direct - via_tester) <= 1e-12);
      total_p += via_tester;
    }
    CHECK(std::abs(total_p - 1.0) <= 1e-12);
  }
}

TEST_CASE("error terms") {
  const BuiltinSets sets = builtin_sets();
  const SystemDims dims = tester_dims(2);

  Tester zero_minus{identity(16) / 4.0, ComplexMatrix::Zero(16, 16), dims};
  const ErrorTerms no_minus = error_terms(zero_minus, sets);
  for (double e : no_minus.plus_errors) CHECK(std::abs(e) <= 1e-14);

  Tester uniform{identity(16) / 8.0, identity(16) / 8.0, dims};
  const ErrorTerms half = error_terms(uniform, sets);
  for (double e : half.plus_errors) CHECK(e == doctest::Approx(0.5).epsilon(1e-12));
  for (double e : half.minus_errors) CHECK(e == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(half.worst() == doctest::Approx(0.5));
}

TEST_CASE("minimax program bookkeeping") {
  const BuiltinSets sets = builtin_sets();
  const MinimaxSdp minimax = build_minimax_sdp(sets);

  CHECK(minimax.problem.blocks.size() == 4);
  CHECK(minimax.problem.blocks[minimax.block_t_plus].kind == SdpBlockKind::Psd);
  CHECK(minimax.problem.blocks[minimax.block_t_plus].dim == 16);
  CHECK(minimax.problem.blocks[minimax.block_t_minus].dim == 16);
  CHECK(minimax.problem.count_tagged("epigraph") == 21);
  CHECK(minimax.problem.count_tagged("structure") == 256);
  CHECK(minimax.problem.count_tagged("marginal-a") == 16);
  CHECK(minimax.problem.count_tagged("marginal-b") == 16);
  CHECK(minimax.problem.count_tagged("normalization") == 1);

  // the uniform split with t = 1/2 is feasible
  std::vector<ComplexMatrix> matrices(4);
  std::vector<RealVector> scalars(4);
  matrices[minimax.block_t_plus] = identity(16) / 8.0;
  matrices[minimax.block_t_minus] = identity(16) / 8.0;
  scalars[minimax.block_epigraph] = RealVector::Constant(1, 0.5);
  scalars[minimax.block_slack] = RealVector::Zero(21);
  for (const auto& row : minimax.problem.constraints)
    CHECK(std::abs(evaluate_constraint(row, matrices, scalars)) <= 1e-12);
}

TEST_CASE("optimal bound reproduces the reference value") {
  const BoundReport report = optimal_error_bound();
  CHECK(report.status == SdpStatus::Converged);
  CHECK(std::abs(report.objective - 0.112149) <= 5e-4);
  CHECK(report.primal_residual <= 1e-7);
  CHECK(report.psd_violation <= 1e-7);
  CHECK(report.gap <= 1e-5);
  CHECK(report.constraint_violation <= 1e-6);

  // weak duality and the recomputed error terms agree with the objective
  CHECK(report.dual_objective <= report.objective + 1e-5);
  CHECK(std::abs(report.errors.worst() - report.objective) <= 1e-5);

  // hermiticity preserved by the constraint algebra
  CHECK((report.tester.t_plus - report.tester.t_plus.adjoint()).norm() <= 1e-12);
  CHECK((report.tester.t_minus - report.tester.t_minus.adjoint()).norm() <= 1e-12);

  // determinism across seeds
  SdpOptions other_seed;
  other_seed.seed = 7;
  const BoundReport again = optimal_error_bound(other_seed);
  CHECK(std::abs(again.objective - report.objective) <= 1e-5);

  // any feasible tester sits above the optimum
  Rng rng(72);
  for (int t = 0; t < 20; ++t) {
    const Tester feasible = random_feasible_tester(2, rng);
    const ErrorTerms terms = error_terms(feasible, builtin_sets());
    CHECK(terms.worst() >= report.objective - 1e-5);
  }

  // the flip strategy wins with certainty, no tester can: the solved optimum
  // stays strictly away from zero
  CHECK(report.objective > 0.05);
}

TEST_CASE("random feasible testers") {
  Rng rng(73);
  const TesterConstraintSet constraints = tester_constraints(2);
  for (int t = 0; t < 3; ++t) {
    const Tester tester = random_feasible_tester(2, rng);
    CHECK(constraints.max_violation(tester.t_plus + tester.t_minus) <= 1e-9);
    CHECK(min_eig(tester.t_plus) >= -1e-10);
    CHECK(min_eig(tester.t_minus) >= -1e-10);
  }
}

}  // TEST_SUITE
