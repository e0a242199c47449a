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

#include "chronoflip/game.hpp"

#include <cmath>

namespace chronoflip {

namespace {

constexpr double kPromiseTol = 1e-9;

void check_gates(const ComplexMatrix& u, const ComplexMatrix& v, double tol) {
  if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows())
    throw std::invalid_argument("game: gates must be square with equal dimension");
  if (!is_unitary(u, tol) || !is_unitary(v, tol))
    throw std::invalid_argument("game: gates must be unitary");
}

}  // namespace

PromiseClass classify_pair(const ComplexMatrix& u, const ComplexMatrix& v, double tol) {
  check_gates(u, v, tol);
  const ComplexMatrix lhs = u * v.transpose();
  const ComplexMatrix rhs = u.transpose() * v;
  if ((lhs - rhs).norm() <= tol) return PromiseClass::Plus;
  if ((lhs + rhs).norm() <= tol) return PromiseClass::Minus;
  return PromiseClass::None;
}

ComplexVector strategy_output(const ComplexMatrix& u, const ComplexMatrix& v,
                              const ComplexVector& psi, double tol) {
  check_gates(u, v, tol);
  const int d = static_cast<int>(u.rows());
  if (psi.size() != d)
    throw std::invalid_argument("strategy_output: state dimension mismatch");

  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const ComplexMatrix s_u = kron(u, p0) + kron(ComplexMatrix(u.transpose()), p1);
  const ComplexMatrix s_v = kron(ComplexMatrix(v.transpose()), p0) + kron(v, p1);

  ComplexVector input = ComplexVector::Zero(2L * d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int t = 0; t < d; ++t) {
    input(t * 2 + 0) = psi(t) * inv_sqrt2;
    input(t * 2 + 1) = psi(t) * inv_sqrt2;
  }
  return s_u * (s_v * input);
}

GameOutcome strategy_probabilities(const ComplexMatrix& u, const ComplexMatrix& v,
                                   const ComplexVector& psi, double tol) {
  const ComplexVector out = strategy_output(u, v, psi, tol);
  const int d = static_cast<int>(u.rows());
  GameOutcome result;
  for (int t = 0; t < d; ++t) {
    const Complex plus = (out(t * 2 + 0) + out(t * 2 + 1)) / std::sqrt(2.0);
    const Complex minus = (out(t * 2 + 0) - out(t * 2 + 1)) / std::sqrt(2.0);
    result.p_plus += std::norm(plus);
    result.p_minus += std::norm(minus);
  }
  return result;
}

PromiseClass play_game(const ComplexMatrix& u, const ComplexMatrix& v, double tol) {
  if (classify_pair(u, v, std::max(tol, kPromiseTol)) == PromiseClass::None)
    throw std::invalid_argument("play_game: the gate pair satisfies neither promise");
  const int d = static_cast<int>(u.rows());
  ComplexVector psi = ComplexVector::Zero(d);
  psi(0) = 1.0;
  const GameOutcome outcome = strategy_probabilities(u, v, psi, tol);
  return outcome.p_plus >= outcome.p_minus ? PromiseClass::Plus : PromiseClass::Minus;
}

BuiltinSets builtin_sets() {
  const ComplexMatrix i2 = identity(2);
  const ComplexMatrix x = pauli_x();
  const ComplexMatrix y = pauli_y();
  const ComplexMatrix z = pauli_z();
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix x_minus_y = s * (x - y);
  const ComplexMatrix x_plus_y = s * (x + y);
  const ComplexMatrix z_minus_y = s * (z - y);
  const ComplexMatrix z_plus_y = s * (z + y);
  const ComplexMatrix i_plus_iy = s * (i2 + Complex(0, 1) * y);
  const ComplexMatrix i_minus_iy = s * (i2 - Complex(0, 1) * y);

  BuiltinSets sets;
  const auto plus = [&sets](const ComplexMatrix& u, const ComplexMatrix& v) {
    sets.plus_set.push_back(GamePair{u, v, PromiseClass::Plus});
  };
  const auto minus = [&sets](const ComplexMatrix& u, const ComplexMatrix& v) {
    sets.minus_set.push_back(GamePair{u, v, PromiseClass::Minus});
  };

  plus(i2, i2);
  plus(i2, x);
  plus(i2, z);
  plus(x, i2);
  plus(x, x);
  plus(x, z);
  plus(z, i2);
  plus(z, x);
  plus(z, z);
  plus(x_minus_y, x_plus_y);
  plus(x_plus_y, x_minus_y);
  plus(z_minus_y, z_plus_y);
  plus(z_plus_y, z_minus_y);

  minus(y, i2);
  minus(y, x);
  minus(y, z);
  minus(i2, y);
  minus(x, y);
  minus(z, y);
  minus(i_plus_iy, i_minus_iy);
  minus(i_minus_iy, i_plus_iy);
  return sets;
}

}  // namespace chronoflip
