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

#include "chronoflip/inversion.hpp"

#include <cmath>

namespace chronoflip {

namespace {

int square_side(const ComplexMatrix& x, const char* op) {
  if (x.rows() != x.cols())
    throw std::invalid_argument(std::string(op) + ": matrix must be square");
  const int d = static_cast<int>(std::lround(std::sqrt(double(x.rows()))));
  if (static_cast<Eigen::Index>(d) * d != x.rows())
    throw std::invalid_argument(std::string(op) + ": dimension is not a perfect square");
  return d;
}

}  // namespace

Channel invert_channel(const Channel& c, InversionKind kind) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(c.kraus.size());
  for (const auto& k : c.kraus)
    kraus.push_back(kind == InversionKind::Transpose ? ComplexMatrix(k.transpose())
                                                     : ComplexMatrix(k.adjoint()));
  return Channel(std::move(kraus), c.d_out, c.d_in);
}

ComplexMatrix choi_transpose_supermap(const ComplexMatrix& x) {
  const int d = square_side(x, "choi_transpose_supermap");
  const ComplexMatrix s = swap_operator(d);
  return s * x * s;
}

ComplexMatrix choi_adjoint_supermap(const ComplexMatrix& x) {
  const int d = square_side(x, "choi_adjoint_supermap");
  const ComplexMatrix s = swap_operator(d);
  return s * x.transpose() * s;
}

bool in_bistochastic_span(const ChoiOperator& m, double tol) {
  const auto proportional_to_identity = [tol](const ComplexMatrix& a) {
    const int n = static_cast<int>(a.rows());
    const Complex mean = a.trace() / double(n);
    return (a - mean * identity(n)).norm() <= tol * std::max(1.0, a.norm());
  };
  return proportional_to_identity(partial_trace(m.matrix, m.dims, {"in"})) &&
         proportional_to_identity(partial_trace(m.matrix, m.dims, {"out"}));
}

ChoiOperator project_bistochastic(const ChoiOperator& m) {
  if (m.d_in() != m.d_out())
    throw std::invalid_argument("project_bistochastic: input and output dimensions differ");
  const int d = m.d_in();
  const ComplexMatrix j = m.matrix;
  const Complex tr = j.trace();
  const ComplexMatrix tr_in = partial_trace(j, m.dims, {"in"});    // = M(I), on out
  const ComplexMatrix tr_out = partial_trace(j, m.dims, {"out"});  // = Mᵀ(I)ᵀ-side, on in

  ComplexMatrix out = j;
  out += (2.0 * tr / double(d * d)) * identity(d * d);
  out -= (1.0 / d) * kron(tr_in, identity(d));
  out -= (1.0 / d) * kron(identity(d), tr_out);
  return ChoiOperator(std::move(out), d, d);
}

ChannelDecomposition decompose_channel(const Channel& c, double tol) {
  if (!is_cptp(c, tol))
    throw std::invalid_argument("decompose_channel: channel is not trace-preserving");
  const int d = c.d_in;
  const ChoiOperator j = choi_of_channel(c);
  ComplexMatrix c_of_mixed = partial_trace(j.matrix, j.dims, {"in"}) / double(d);
  return ChannelDecomposition{
      project_bistochastic(j),
      constant_channel(c_of_mixed, std::max(tol, 1e-6)),
      depolarizing(d),
  };
}

Channel invert_general(const Channel& c, InversionKind kind, double tol) {
  ChoiOperator projected = project_bistochastic(choi_of_channel(c));
  const double lambda_min = min_eig(projected.matrix);
  if (lambda_min < -tol) throw NonPositiveProjectionError(lambda_min);
  return invert_channel(channel_of_choi(projected, tol), kind);
}

double unitary_decomposition_coefficient(const Channel& b, const ComplexMatrix& u) {
  const int d = b.d_in;
  const ComplexMatrix jb = choi_of_channel(b).matrix;
  const ComplexVector uket = double_ket(u);
  const Complex overlap = (uket.adjoint() * jb * uket)(0);  // Tr[Choi(U)·Choi(B)]
  const double trace_b = jb.trace().real();                 // Tr[B(I)]
  return (d * d - 1.0) * overlap.real() - (d * d - 2.0) / d * trace_b;
}

ComplexMatrix qubit_adjoint_extension_G() {
  return identity(4) - 2.0 * bell_projector(2);
}

ComplexMatrix qubit_projection_closed_form(const ComplexVector& psi) {
  if (psi.size() != 4)
    throw std::invalid_argument("qubit_projection_closed_form: expected a two-qubit vector");
  const ComplexMatrix psi_mat = double_ket_inverse(psi, 2, 2);
  Eigen::JacobiSVD<ComplexMatrix> svd(psi_mat, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector s = svd.singularValues();

  // |Ψ⟩ = Σ_k s_k |u_k⟩⊗|v̄_k⟩; the partner swaps s₀ and s₁.
  ComplexVector partner = ComplexVector::Zero(4);
  for (int k = 0; k < 2; ++k) {
    const ComplexVector u_k = svd.matrixU().col(k);
    const ComplexVector v_k = svd.matrixV().col(k).conjugate();
    const double coeff = s(1 - k);
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n) partner(m * 2 + n) += coeff * u_k(m) * v_k(n);
  }
  return 0.5 * (psi * psi.adjoint()) + 0.5 * (partner * partner.adjoint());
}

Channel counterexample_channel(int d) {
  if (d < 3) throw std::invalid_argument("counterexample_channel: requires d >= 3");
  RealMatrix p = RealMatrix::Zero(d, d);
  const double p11 = double(d - 2) / (2.0 * (d - 1));
  p(0, 0) = p11;
  for (int x = 1; x < d; ++x) p(0, x) = 1.0;
  for (int y = 1; y < d; ++y) p(y, 0) = (1.0 - p11) / double(d - 1);
  return classical_channel(p);
}

}  // namespace chronoflip
