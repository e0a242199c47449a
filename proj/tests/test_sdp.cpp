#include <chronoflip/haar.hpp>
#include <chronoflip/sdp.hpp>

#include <doctest.h>

#include <algorithm>

using namespace chronoflip;

TEST_SUITE("sdp") {

TEST_CASE("hermitian real coordinates are isometric") {
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = random_hermitian(5, rng);
    const ComplexMatrix b = random_hermitian(5, rng);
    CHECK((real_to_hermitian(hermitian_to_real(a), 5) - a).norm() <= 1e-14);
    const double frob = (a.adjoint() * b).trace().real();
    CHECK(std::abs(hermitian_to_real(a).dot(hermitian_to_real(b)) - frob) <= 1e-12);
  }

  const auto basis = hermitian_basis(3);
  REQUIRE(basis.size() == 9);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      const double inner = (basis[i].adjoint() * basis[j]).trace().real();
      CHECK(std::abs(inner - (i == j ? 1.0 : 0.0)) <= 1e-14);
    }
}

TEST_CASE("psd projection through the real symmetric embedding") {
  Rng rng(62);
  const ComplexMatrix psd = [&] {
    ComplexMatrix g = random_ginibre(4, 4, rng);
    return ComplexMatrix(g * g.adjoint());
  }();
  CHECK((project_psd(psd) - psd).norm() <= 1e-12);
  CHECK(project_psd(ComplexMatrix(-identity(3))).norm() <= 1e-14);

  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix h = random_hermitian(6, rng);
    const ComplexMatrix projected = project_psd(h);
    CHECK(min_eig(projected) >= -1e-12);

    // oracle: clamp the complex eigendecomposition directly
    const HermitianEig eig = eig_hermitian(h);
    const ComplexMatrix clamped = eig.vectors *
                                  eig.values.cwiseMax(0.0).asDiagonal() *
                                  eig.vectors.adjoint();
    CHECK((projected - clamped).norm() <= 1e-12);
  }
}

TEST_CASE("largest eigenvalue as an epigraph program") {
  Rng rng(63);
  for (int t = 0; t < 3; ++t) {
    const ComplexMatrix a = random_hermitian(5, rng);
    SdpProblem p;
    const int s_block = p.add_psd_block(5);
    const int t_block = p.add_free_block(1);
    add_operator_equality(p, {{s_block, [](const ComplexMatrix& x) { return x; }}},
                          {{t_block, {ComplexMatrix(-identity(5))}}}, ComplexMatrix(-a),
                          "shift");
    RealVector t_coeff(1);
    t_coeff << 1.0;
    p.objective.scalar_terms.push_back(SdpScalarTerm{t_block, t_coeff});

    const SdpSolution sol = solve_sdp(p);
    const double exact = eig_hermitian(a).values(0);
    CHECK(sol.status == SdpStatus::Converged);
    CHECK(std::abs(sol.scalar_values[t_block](0) - exact) <= 1e-6);
    CHECK(sol.primal_residual <= 1e-7);
    CHECK(sol.psd_violation <= 1e-9);

    // the objective settles downward onto the optimum; intermediate iterates
    // may undershoot slightly while still affine-infeasible, within the gap
    REQUIRE(!sol.objective_trace.empty());
    CHECK(sol.objective_trace.back() <= sol.objective_trace.front() + 1e-9);
    const double best =
        *std::min_element(sol.objective_trace.begin(), sol.objective_trace.end());
    CHECK(std::abs(sol.objective_trace.back() - best) <= 1e-4);
  }
}

TEST_CASE("two-state discrimination reaches the pure-state bound") {
  Rng rng(64);
  for (int t = 0; t < 3; ++t) {
    const ComplexVector psi = random_state(2, rng);
    const ComplexVector phi = random_state(2, rng);
    const ComplexMatrix rho1 = psi * psi.adjoint();
    const ComplexMatrix rho2 = phi * phi.adjoint();

    SdpProblem p;
    const int m_block = p.add_psd_block(2);
    const int n_block = p.add_psd_block(2);
    add_operator_equality(p,
                          {{m_block, [](const ComplexMatrix& x) { return x; }},
                           {n_block, [](const ComplexMatrix& x) { return x; }}},
                          {}, identity(2), "povm");
    p.objective.matrix_terms.push_back(
        SdpMatrixTerm{m_block, ComplexMatrix(0.5 * (rho2 - rho1))});
    p.objective.constant = 0.5;

    const SdpSolution sol = solve_sdp(p);
    const double exact = 0.5 * (1.0 - std::sqrt(1.0 - std::norm(psi.dot(phi))));
    CHECK(std::abs(sol.objective - exact) <= 1e-6);
    // weak duality at the optimum
    CHECK(sol.dual_objective <= sol.objective + 1e-6);
  }
}

TEST_CASE("solver is deterministic") {
  Rng rng(65);
  const ComplexMatrix a = random_hermitian(4, rng);
  const auto build = [&] {
    SdpProblem p;
    const int s_block = p.add_psd_block(4);
    const int t_block = p.add_free_block(1);
    add_operator_equality(p, {{s_block, [](const ComplexMatrix& x) { return x; }}},
                          {{t_block, {ComplexMatrix(-identity(4))}}}, ComplexMatrix(-a),
                          "shift");
    RealVector t_coeff(1);
    t_coeff << 1.0;
    p.objective.scalar_terms.push_back(SdpScalarTerm{t_block, t_coeff});
    return p;
  };
  SdpOptions opt_a;
  opt_a.seed = 1;
  SdpOptions opt_b;
  opt_b.seed = 2;
  const SdpSolution sol_a = solve_sdp(build(), opt_a);
  const SdpSolution sol_b = solve_sdp(build(), opt_b);
  CHECK(sol_a.objective == sol_b.objective);  // bit-identical, seed only recorded
  CHECK(sol_a.iterations == sol_b.iterations);
}

TEST_CASE("inconsistent equalities are flagged") {
  SdpProblem p;
  const int x_block = p.add_free_block(1);
  RealVector one(1);
  one << 1.0;
  SdpConstraint c1;
  c1.scalar_terms.push_back(SdpScalarTerm{x_block, one});
  c1.rhs = 1.0;
  SdpConstraint c2 = c1;
  c2.rhs = 2.0;
  p.constraints.push_back(c1);
  p.constraints.push_back(c2);

  SdpOptions opts;
  opts.max_iter = 2000;
  const SdpSolution sol = solve_sdp(p, opts);
  CHECK(sol.status == SdpStatus::MaybeInfeasible);
}

TEST_CASE("constraint validation") {
  SdpProblem p;
  const int blk = p.add_psd_block(2);
  SdpConstraint bad;
  Rng rng(66);
  bad.matrix_terms.push_back(SdpMatrixTerm{blk, random_ginibre(2, 2, rng)});
  p.constraints.push_back(bad);
  CHECK_THROWS_AS(solve_sdp(p), std::invalid_argument);
}

}  // TEST_SUITE
