#include <chronoflip/haar.hpp>

#include <doctest.h>

using namespace chronoflip;

TEST_SUITE("haar") {

TEST_CASE("first moment is the depolarizing value") {
  for (int d : {2, 3}) {
    const WeingartenTable table = weingarten_gram_inverse(1, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            const double expected = (i == k && j == l) ? 1.0 / d : 0.0;
            CHECK(std::abs(haar_moment(table, {{i, j}}, {{k, l}}) - expected) <= 1e-14);
          }
  }
}

TEST_CASE("clifford group is a 3-design") {
  const UnitaryDesign clifford = single_qubit_clifford_group();
  REQUIRE(clifford.elements.size() == 24);

  // contains I, X, Z and an H-equivalent up to phase
  const auto contains = [&](const ComplexMatrix& target) {
    for (const auto& g : clifford.elements) {
      const Complex overlap = (g.adjoint() * target).trace();
      if (std::abs(std::abs(overlap) - 2.0) <= 1e-9) return true;
    }
    return false;
  };
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  CHECK(contains(identity(2)));
  CHECK(contains(pauli_x()));
  CHECK(contains(pauli_z()));
  CHECK(contains(h));

  // closure under multiplication up to phase
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix& a = clifford.elements[rng() % 24];
    const ComplexMatrix& b = clifford.elements[rng() % 24];
    CHECK(contains(ComplexMatrix(a * b)));
  }

  for (int t = 1; t <= 3; ++t) CHECK(design_has_strength(clifford, t, 2, 1e-10));
}

TEST_CASE("weingarten moments agree with the clifford design at k=2") {
  const UnitaryDesign clifford = single_qubit_clifford_group();
  MomentSpec spec;
  spec.dim = 2;
  spec.conjugated = {false, false, true, true};
  CHECK((haar_moment_tensor(spec) - design_moment_tensor(spec, clifford))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
}

TEST_CASE("weingarten moments agree with monte carlo") {
  // a spread of monomials for k ≤ 3, d ≤ 3, each at 10⁵ samples
  struct Probe {
    int d;
    std::vector<std::pair<int, int>> u, ubar;
  };
  const std::vector<Probe> probes{
      {2, {{0, 0}}, {{0, 0}}},
      {2, {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}},
      {2, {{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}},
      {3, {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}},
      {2, {{0, 0}, {1, 1}, {0, 1}}, {{0, 0}, {1, 1}, {0, 1}}},
      {3, {{0, 0}, {1, 1}, {2, 2}}, {{0, 0}, {1, 1}, {2, 2}}},
      {3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 1}, {1, 2}, {2, 0}}},
  };
  std::uint64_t seed = 1000;
  for (const auto& probe : probes) {
    const WeingartenTable table =
        weingarten_gram_inverse(static_cast<int>(probe.u.size()), probe.d);
    const double exact = haar_moment(table, probe.u, probe.ubar);
    const MonteCarloEstimate mc =
        monte_carlo_moment(probe.d, probe.u, probe.ubar, 100000, seed++);
    CHECK(std::abs(mc.mean.real() - exact) <= 5.0 * std::max(mc.std_error, 1e-9));
    CHECK(std::abs(mc.mean.imag()) <= 5.0 * std::max(mc.std_error, 1e-9));
  }
}

TEST_CASE("third moment at d=3 against a large monte carlo run") {
  const WeingartenTable table = weingarten_gram_inverse(3, 3);
  const std::vector<std::pair<int, int>> entries{{0, 0}, {1, 1}, {2, 2}};
  const double exact = haar_moment(table, entries, entries);
  const MonteCarloEstimate mc = monte_carlo_moment(3, entries, entries, 1000000, 4242);
  CHECK(std::abs(mc.mean.real() - exact) <= 5.0 * mc.std_error);
}

TEST_CASE("unbalanced moments vanish") {
  MomentSpec spec;
  spec.dim = 2;
  spec.conjugated = {false, false, true};
  CHECK(haar_moment_tensor(spec).norm() == 0.0);
  CHECK(weingarten_gram_inverse(2, 2).gram_inverse.allFinite());
  CHECK_THROWS_AS(weingarten_gram_inverse(4, 4), std::invalid_argument);
}

TEST_CASE("frame operator") {
  const ComplexMatrix closed = frame_operator_closed_form(2);
  CHECK((frame_operator(2, TwirlMethod::Design) - closed).norm() <= 1e-10);
  CHECK((frame_operator(2, TwirlMethod::Weingarten) - closed).norm() <= 1e-10);

  const HermitianEig eig = eig_hermitian(closed);
  CHECK(eig.values(0) == doctest::Approx(0.25).epsilon(1e-10));
  for (int k = 1; k < 10; ++k)
    CHECK(eig.values(k) == doctest::Approx(1.0 / 12.0).epsilon(1e-10));
  for (int k = 10; k < 16; ++k) CHECK(std::abs(eig.values(k)) <= 1e-12);

  CHECK((frame_operator(3, TwirlMethod::Weingarten) - frame_operator_closed_form(3)).norm() <=
        1e-9);

  CHECK_THROWS_AS(frame_operator(3, TwirlMethod::Design), std::invalid_argument);
  CHECK_THROWS_AS(frame_operator(5, TwirlMethod::Weingarten), std::invalid_argument);
}

TEST_CASE("omega operator") {
  const ComplexMatrix design = omega_operator(2, TwirlMethod::Design);
  const ComplexMatrix weingarten = omega_operator(2, TwirlMethod::Weingarten);
  CHECK((design - weingarten).norm() <= 1e-10);
  CHECK(min_eig(weingarten) >= -1e-11);

  Rng rng(43);
  const ComplexMatrix u = random_unitary(2, rng);
  const ComplexMatrix v = random_unitary(2, rng);
  const ComplexMatrix rep =
      kron_all({ComplexMatrix(u.conjugate()), ComplexMatrix(v.conjugate()),
                ComplexMatrix(u.conjugate()), ComplexMatrix(v.conjugate()), v, u});
  CHECK((weingarten * rep - rep * weingarten).norm() <= 1e-10);

  // trivial always-identity supermap: F = Tr[SΩ] = ∫|Tr Uᵀ|²/d² via Monte Carlo
  const int d = 2;
  const ComplexMatrix j_identity = 2.0 * bell_projector(d);
  const ComplexMatrix s_trivial =
      embed(j_identity, SystemDims{{"C_o", d}, {"C_i", d}}, omega_dims(d)) / double(d * d);
  const double fidelity = (s_trivial * weingarten).trace().real();

  Rng mc_rng(4444);
  double mc_sum = 0.0;
  const long samples = 100000;
  for (long s = 0; s < samples; ++s)
    mc_sum += std::norm(random_unitary(d, mc_rng).trace());
  const double mc_value = mc_sum / double(samples) / (d * d);
  CHECK(std::abs(fidelity - mc_value) <= 5e-3);  // MC error ~ 1/√samples
  CHECK(fidelity == doctest::Approx(1.0 / (d * d)).epsilon(1e-9));
}

TEST_CASE("isotypic projectors") {
  for (int d : {2, 3}) {
    const auto p = isotypic_projectors(d);
    const int d_plus = d * (d + 1) / 2;
    const int d_minus = d * (d - 1) / 2;
    CHECK(p[0].trace().real() == doctest::Approx(2 * d).epsilon(1e-10));
    CHECK(p[1].trace().real() == doctest::Approx(d * (d_plus - 1)).epsilon(1e-10));
    CHECK(p[2].trace().real() == doctest::Approx(d * (d_minus - 1)).epsilon(1e-10));

    const long n = static_cast<long>(d) * d * d;
    CHECK((p[0] + p[1] + p[2] - identity(static_cast<int>(n))).norm() <= 1e-10);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b)
          CHECK((p[a] * p[a] - p[a]).norm() <= 1e-10);
        else
          CHECK((p[a] * p[b]).norm() <= 1e-10);
      }

    // commutes with the conjugate representation on random elements
    Rng rng(44 + d);
    for (int t = 0; t < 3; ++t) {
      const ComplexMatrix u = random_unitary(d, rng);
      const ComplexMatrix rep = kron_all(
          {ComplexMatrix(u.conjugate()), ComplexMatrix(u.conjugate()), u});
      for (const auto& proj : p)
        CHECK((proj * rep - rep * proj).norm() <= 1e-10);
    }
  }
  CHECK_THROWS_AS(isotypic_projectors(4), std::invalid_argument);
}

TEST_CASE("two-copy fidelity inequalities") {
  const ControlledUseQubitBound qubit = two_copy_inequality_qubit();
  CHECK(qubit.min_eigenvalue >= -1e-9);
  CHECK(qubit.marginal_distance <= 1e-12);
  CHECK(qubit.rho_plus_trace == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qubit.rho_minus_trace == doctest::Approx(1.0).epsilon(1e-12));

  const ControlledUseBound qutrit = two_copy_inequality(3);
  CHECK(qutrit.min_eigenvalue >= -1e-8);
  CHECK(qutrit.rho_trace == doctest::Approx(1.0).epsilon(1e-10));

  // the same construction is PSD-consistent at d=2
  const ControlledUseBound qubit_general = two_copy_inequality(2);
  CHECK(qubit_general.min_eigenvalue >= -1e-8);
}

TEST_CASE("random sampling utilities") {
  Rng rng(45);
  CHECK(is_unitary(random_unitary(4, rng), 1e-10));
  const ComplexMatrix su = random_special_unitary(3, rng);
  CHECK(is_unitary(su, 1e-10));
  CHECK(std::abs(su.determinant() - Complex(1.0)) <= 1e-10);
  CHECK(is_bistochastic(random_bistochastic_channel(3, 3, rng)));
  CHECK(is_cptp(random_cptp_channel(3, 2, rng)));
  const ComplexMatrix rho = random_density(3, rng);
  CHECK(is_psd(rho, 1e-12));
  CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-12);

  // determinism: identical seeds give identical samples
  Rng r1(99), r2(99);
  CHECK((random_unitary(3, r1) - random_unitary(3, r2)).norm() == 0.0);
}

}  // TEST_SUITE
