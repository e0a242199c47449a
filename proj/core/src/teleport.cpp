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

#include "chronoflip/teleport.hpp"

#include <cmath>
#include <numbers>

namespace chronoflip {

namespace {

// Index into the (target, resource1, resource2, control) register.
long slot(int d, int s, int e1, int e2, int q) {
  return ((static_cast<long>(s) * d + e1) * d + e2) * 2 + q;
}

// Full-register state after the controlled swap, for input |psi⟩⊗(α|0⟩+β|1⟩)
// and resource (I⊗u)|Φ⟩.
ComplexVector evolved_register(const ComplexMatrix& u, const ComplexVector& psi,
                               Complex alpha, Complex beta) {
  const int d = static_cast<int>(u.rows());
  const double root_d = std::sqrt(double(d));
  ComplexVector state = ComplexVector::Zero(2L * d * d * d);
  for (int s = 0; s < d; ++s)
    for (int i = 0; i < d; ++i)
      for (int e2 = 0; e2 < d; ++e2) {
        const Complex resource = u(e2, i) / root_d;  // (I ⊗ u)|Φ⟩ amplitude
        // forward branch: resource untouched
        state(slot(d, s, i, e2, 0)) += alpha * psi(s) * resource;
        // flipped branch: the two resource halves are swapped
        state(slot(d, s, e2, i, 1)) += beta * psi(s) * resource;
      }
  return state;
}

// Unnormalized (target ⊗ control) amplitudes after projecting (s, e1) onto
// |B_m⟩ = (U_m† ⊗ I)|Φ⟩, i.e. B_m[(s,e1)] = conj(U_m[e1,s])/√d.
ComplexVector project_bell(const ComplexVector& state, const ComplexMatrix& u_m,
                           int d) {
  ComplexVector out = ComplexVector::Zero(2L * d);
  for (int e2 = 0; e2 < d; ++e2)
    for (int q = 0; q < 2; ++q) {
      Complex amp = 0.0;
      for (int s = 0; s < d; ++s)
        for (int e1 = 0; e1 < d; ++e1)
          amp += u_m(e1, s) / std::sqrt(double(d)) * state(slot(d, s, e1, e2, q));
      out(e2 * 2 + q) = amp;
    }
  return out;
}

void check_inputs(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols() || !is_unitary(u, tol))
    throw std::invalid_argument("teleport: gate must be unitary");
}

}  // namespace

std::vector<ComplexMatrix> bell_basis(int d) {
  ComplexMatrix shift = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) shift((k + 1) % d, k) = 1.0;
  ComplexMatrix clock = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k)
    clock(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);

  std::vector<ComplexMatrix> basis;
  basis.reserve(d * d);
  ComplexMatrix shift_pow = identity(d);
  for (int a = 0; a < d; ++a) {
    ComplexMatrix clock_pow = identity(d);
    for (int b = 0; b < d; ++b) {
      basis.push_back(shift_pow * clock_pow);
      clock_pow = clock_pow * clock;
    }
    shift_pow = shift * shift_pow;
  }
  return basis;
}

std::vector<TeleportOutcome> simulate_flip_circuit(const ComplexMatrix& u,
                                                   const ComplexVector& psi,
                                                   Complex alpha, Complex beta,
                                                   double tol) {
  check_inputs(u, tol);
  const int d = static_cast<int>(u.rows());
  if (psi.size() != d) throw std::invalid_argument("teleport: state dimension mismatch");
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol)
    throw std::invalid_argument("teleport: control amplitudes must be normalized");

  const ComplexVector state = evolved_register(u, psi / psi.norm(), alpha, beta);
  const std::vector<ComplexMatrix> basis = bell_basis(d);

  std::vector<TeleportOutcome> outcomes;
  outcomes.reserve(basis.size());
  for (size_t m = 0; m < basis.size(); ++m) {
    ComplexVector projected = project_bell(state, basis[m], d);
    const double p = projected.squaredNorm();
    outcomes.push_back(TeleportOutcome{static_cast<int>(m), p,
                                       ComplexVector(projected / projected.norm())});
  }
  return outcomes;
}

std::vector<ComplexMatrix> heralded_kraus_operators(const ComplexMatrix& u, double tol) {
  check_inputs(u, tol);
  const int d = static_cast<int>(u.rows());
  const std::vector<ComplexMatrix> basis = bell_basis(d);

  std::vector<ComplexMatrix> kraus(basis.size(), ComplexMatrix::Zero(2L * d, 2L * d));
  for (int t = 0; t < d; ++t)
    for (int q = 0; q < 2; ++q) {
      ComplexVector basis_target = ComplexVector::Zero(d);
      basis_target(t) = 1.0;
      const ComplexVector state = evolved_register(
          u, basis_target, q == 0 ? Complex(1.0) : Complex(0.0),
          q == 1 ? Complex(1.0) : Complex(0.0));
      for (size_t m = 0; m < basis.size(); ++m)
        kraus[m].col(t * 2 + q) = project_bell(state, basis[m], d);
    }
  return kraus;
}

Channel postselected_channel(const ComplexMatrix& u, double tol) {
  const int d = static_cast<int>(u.rows());
  ComplexMatrix k0 = heralded_kraus_operators(u, tol).front();
  return Channel({ComplexMatrix(double(d) * k0)}, 2 * d, 2 * d);
}

Channel postselected_channel(const Channel& c, double tol) {
  if (!is_bistochastic(c, tol))
    throw std::invalid_argument("postselected_channel: resource channel must be bistochastic");
  const int d = c.d_in;
  const ComplexMatrix first_bell = bell_basis(d).front();

  // one statevector pass per Kraus branch of the resource channel
  std::vector<ComplexMatrix> kraus;
  for (const auto& branch : c.kraus) {
    ComplexMatrix k0 = ComplexMatrix::Zero(2L * d, 2L * d);
    for (int t = 0; t < d; ++t)
      for (int q = 0; q < 2; ++q) {
        ComplexVector basis_target = ComplexVector::Zero(d);
        basis_target(t) = 1.0;
        const ComplexVector state = evolved_register(
            branch, basis_target, q == 0 ? Complex(1.0) : Complex(0.0),
            q == 1 ? Complex(1.0) : Complex(0.0));
        k0.col(t * 2 + q) = project_bell(state, first_bell, d);
      }
    kraus.push_back(ComplexMatrix(double(d) * k0));
  }
  return Channel(std::move(kraus), 2 * d, 2 * d);
}

}  // namespace chronoflip
