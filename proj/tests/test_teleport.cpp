#include <chronoflip/flip.hpp>
#include <chronoflip/haar.hpp>
#include <chronoflip/teleport.hpp>

#include <doctest.h>

using namespace chronoflip;

namespace {

// Independent circuit oracle on the (target, resource1, resource2, control)
// register: controlled swap of the resources, then a Bell projection keeping
// (resource2, control).
struct CircuitOracle {
  int d;
  SystemDims dims;
  ComplexMatrix cswap;
  std::vector<ComplexVector> bell_vectors;  // on (target, resource1)

  explicit CircuitOracle(int dim) : d(dim), dims{{"s", dim}, {"e1", dim}, {"e2", dim}, {"q", 2}} {
    const long n = dims.total_dim();
    cswap = ComplexMatrix::Zero(n, n);
    for (int s = 0; s < d; ++s)
      for (int e1 = 0; e1 < d; ++e1)
        for (int e2 = 0; e2 < d; ++e2) {
          cswap(at(s, e1, e2, 0), at(s, e1, e2, 0)) = 1.0;
          cswap(at(s, e2, e1, 1), at(s, e1, e2, 1)) = 1.0;
        }
    for (const auto& u_m : bell_basis(d)) {
      ComplexVector b = ComplexVector::Zero(static_cast<long>(d) * d);
      for (int s = 0; s < d; ++s)
        for (int e1 = 0; e1 < d; ++e1)
          b(static_cast<long>(s) * d + e1) = std::conj(u_m(e1, s)) / std::sqrt(double(d));
      bell_vectors.push_back(b);
    }
  }

  long at(int s, int e1, int e2, int q) const {
    return ((static_cast<long>(s) * d + e1) * d + e2) * 2 + q;
  }

  // Σ_m (⟨B_m|⊗I)·CSWAP·(σ ⊗ τ)·CSWAP†·(|B_m⟩⊗I), reorganised on (e2, q)
  ComplexMatrix discard_outcomes(const ComplexMatrix& sigma_sq, const ComplexMatrix& tau_e) const {
    const ComplexMatrix full =
        embed(sigma_sq, SystemDims{{"s", d}, {"q", 2}}, dims) *
        embed(tau_e, SystemDims{{"e1", d}, {"e2", d}}, dims);
    const ComplexMatrix evolved = cswap * full * cswap.adjoint();
    ComplexMatrix out = ComplexMatrix::Zero(2L * d, 2L * d);
    for (const auto& b : bell_vectors) {
      ComplexMatrix projected = ComplexMatrix::Zero(2L * d, 2L * d);
      for (int e2 = 0; e2 < d; ++e2)
        for (int q = 0; q < 2; ++q)
          for (int f2 = 0; f2 < d; ++f2)
            for (int p = 0; p < 2; ++p) {
              Complex amp = 0.0;
              for (int s = 0; s < d; ++s)
                for (int e1 = 0; e1 < d; ++e1)
                  for (int sp = 0; sp < d; ++sp)
                    for (int f1 = 0; f1 < d; ++f1)
                      amp += std::conj(b(static_cast<long>(s) * d + e1)) *
                             evolved(at(s, e1, e2, q), at(sp, f1, f2, p)) *
                             b(static_cast<long>(sp) * d + f1);
              projected(static_cast<long>(e2) * 2 + q, static_cast<long>(f2) * 2 + p) = amp;
            }
      out += projected;
    }
    return out;
  }
};

}  // namespace

TEST_SUITE("teleport") {

TEST_CASE("bell basis") {
  const auto basis2 = bell_basis(2);
  REQUIRE(basis2.size() == 4);
  CHECK((basis2[0] - identity(2)).norm() == 0.0);
  CHECK((basis2[1] - pauli_z()).norm() <= 1e-15);
  CHECK((basis2[2] - pauli_x()).norm() <= 1e-15);
  CHECK((basis2[3] - ComplexMatrix(pauli_x() * pauli_z())).norm() <= 1e-15);

  for (int d : {2, 3}) {
    const auto basis = bell_basis(d);
    for (size_t m = 0; m < basis.size(); ++m)
      for (size_t n = 0; n < basis.size(); ++n) {
        const Complex gram = (basis[m].adjoint() * basis[n]).trace();
        CHECK(std::abs(gram - (m == n ? Complex(d) : Complex(0.0))) <= 1e-12);
      }

    // associated Bell states are orthonormal
    const ComplexVector phi = maximally_entangled_state(d);
    for (size_t m = 0; m < basis.size(); ++m)
      for (size_t n = 0; n < basis.size(); ++n) {
        const ComplexVector bm = kron(basis[m], identity(d)) * phi;
        const ComplexVector bn = kron(basis[n], identity(d)) * phi;
        CHECK(std::abs(bm.dot(bn) - (m == n ? 1.0 : 0.0)) <= 1e-12);
      }
  }
}

TEST_CASE("heralded outcome reproduces the flipped action") {
  Rng rng(33);
  const ComplexMatrix u = random_unitary(2, rng);
  const ComplexVector psi = random_state(2, rng);
  const Complex alpha(0.6), beta(0.8);

  const auto outcomes = simulate_flip_circuit(u, psi, alpha, beta);
  REQUIRE(outcomes.size() == 4);
  CHECK(std::abs(outcomes[0].probability - 0.25) <= 1e-12);

  ComplexVector expected = ComplexVector::Zero(4);
  const ComplexVector fwd = u * psi;
  const ComplexVector bwd = u.transpose() * psi;
  for (int t = 0; t < 2; ++t) {
    expected(t * 2 + 0) = alpha * fwd(t);
    expected(t * 2 + 1) = beta * bwd(t);
  }
  expected /= expected.norm();
  Complex phase = expected.dot(outcomes[0].conditional_state);
  phase /= std::abs(phase);
  CHECK((outcomes[0].conditional_state - phase * expected).norm() <= 1e-12);
}

TEST_CASE("identity gate factorizes the control") {
  Rng rng(34);
  const ComplexVector psi = random_state(3, rng);
  const Complex alpha(0.8), beta(Complex(0.0, 0.6));
  const auto outcomes = simulate_flip_circuit(identity(3), psi, alpha, beta);
  const auto basis = bell_basis(3);
  for (const auto& o : outcomes) {
    ComplexVector expected = ComplexVector::Zero(6);
    const ComplexVector moved = basis[o.outcome_index] * psi;
    for (int t = 0; t < 3; ++t) {
      expected(t * 2 + 0) = alpha * moved(t);
      expected(t * 2 + 1) = beta * moved(t);
    }
    expected /= expected.norm();
    Complex phase = expected.dot(o.conditional_state);
    phase /= std::abs(phase);
    CHECK((o.conditional_state - phase * expected).norm() <= 1e-12);
  }
}

TEST_CASE("outcome probabilities are uniform") {
  Rng rng(35);
  for (int t = 0; t < 100; ++t) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const ComplexMatrix u = random_unitary(d, rng);
    const ComplexVector psi = random_state(d, rng);
    const ComplexVector ab = random_state(2, rng);
    const auto outcomes = simulate_flip_circuit(u, psi, ab(0), ab(1));
    double total = 0.0;
    for (const auto& o : outcomes) {
      CHECK(std::abs(o.probability - 1.0 / (d * d)) <= 1e-12);
      total += o.probability;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("postselected channel equals the time flip") {
  CHECK(choi_distance(postselected_channel(identity(2)),
                      identity_channel(4)) <= 1e-10);

  CHECK(choi_distance(postselected_channel(pauli_x()),
                      time_flip(unitary_channel(pauli_x()))) <= 1e-10);

  Rng rng(36);
  for (int d : {2, 3}) {
    for (int t = 0; t < 5; ++t) {
      const ComplexMatrix u = random_unitary(d, rng);
      CHECK(choi_distance(postselected_channel(u), time_flip(unitary_channel(u))) <= 1e-10);
    }
  }
}

TEST_CASE("kraus-branch enumeration handles non-unitary resources") {
  Rng rng(39);
  for (int d : {2, 3}) {
    const Channel c = random_bistochastic_channel(d, 3, rng);
    const Channel heralded = postselected_channel(c);
    CHECK(heralded.kraus.size() == c.kraus.size());
    CHECK(is_cptp(heralded, 1e-10));
    CHECK(choi_distance(heralded, time_flip(c)) <= 1e-10);
  }
  ComplexMatrix ket0 = ComplexMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  CHECK_THROWS_AS(postselected_channel(constant_channel(ket0)), std::invalid_argument);
}

TEST_CASE("averaged conditional maps use the gate forward only") {
  Rng rng(37);
  for (int d : {2, 3}) {
    const ComplexMatrix u = random_unitary(d, rng);
    const auto kraus = heralded_kraus_operators(u);

    // the heralded family is trace-preserving as a whole
    ComplexMatrix total = ComplexMatrix::Zero(2L * d, 2L * d);
    for (const auto& k : kraus) total += k.adjoint() * k;
    CHECK((total - identity(2 * d)).norm() <= 1e-12);

    ComplexMatrix averaged_choi = ComplexMatrix::Zero(4L * d * d, 4L * d * d);
    for (const auto& k : kraus) {
      const ComplexVector kket = double_ket(k);
      averaged_choi += kket * kket.adjoint();
    }

    // fixed circuit applied to the resource (I⊗U)|Φ⟩: the only U-dependence
    const CircuitOracle oracle(d);
    const ComplexVector phi = maximally_entangled_state(d);
    const ComplexVector resource = kron(identity(d), u) * phi;
    const ComplexMatrix tau = resource * resource.adjoint();

    ComplexMatrix oracle_choi = ComplexMatrix::Zero(4L * d * d, 4L * d * d);
    // reconstruct the Choi operator by feeding matrix units through the map
    for (int m = 0; m < 2 * d; ++m)
      for (int n = 0; n < 2 * d; ++n) {
        ComplexMatrix unit = ComplexMatrix::Zero(2L * d, 2L * d);
        unit(m, n) = 1.0;
        const ComplexMatrix image = oracle.discard_outcomes(unit, tau);
        for (int a = 0; a < 2 * d; ++a)
          for (int b = 0; b < 2 * d; ++b)
            oracle_choi(static_cast<long>(a) * 2 * d + m, static_cast<long>(b) * 2 * d + n) +=
                image(a, b);
      }
    CHECK((averaged_choi - oracle_choi).norm() <= 1e-11);
  }
}

TEST_CASE("input validation") {
  Rng rng(38);
  const ComplexVector psi = random_state(2, rng);
  CHECK_THROWS_AS(simulate_flip_circuit(ComplexMatrix(2.0 * identity(2)), psi,
                                        Complex(1.0), Complex(0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate_flip_circuit(identity(2), psi, Complex(1.0), Complex(1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(postselected_channel(random_ginibre(2, 2, rng)), std::invalid_argument);
}

}  // TEST_SUITE
