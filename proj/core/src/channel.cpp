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

#include "chronoflip/channel.hpp"

namespace chronoflip {

Channel::Channel(std::vector<ComplexMatrix> kraus_ops, int din, int dout)
    : kraus(std::move(kraus_ops)), d_in(din), d_out(dout) {
  if (kraus.empty()) throw std::invalid_argument("Channel: empty Kraus list");
  for (const auto& k : kraus)
    if (k.rows() != d_out || k.cols() != d_in)
      throw std::invalid_argument("Channel: Kraus operator shape mismatch");
}

ChoiOperator::ChoiOperator(ComplexMatrix m, int d_out, int d_in)
    : matrix(std::move(m)), dims{{"out", d_out}, {"in", d_in}} {
  if (matrix.rows() != matrix.cols() ||
      matrix.rows() != static_cast<Eigen::Index>(d_out) * d_in)
    throw std::invalid_argument("ChoiOperator: dimension mismatch");
}

ChoiOperator choi_of_channel(const Channel& c) {
  const long n = static_cast<long>(c.d_out) * c.d_in;
  ComplexMatrix j = ComplexMatrix::Zero(n, n);
  for (const auto& k : c.kraus) {
    ComplexVector v = double_ket(k);
    j += v * v.adjoint();
  }
  return ChoiOperator(std::move(j), c.d_out, c.d_in);
}

Channel channel_of_choi(const ChoiOperator& j, double tol) {
  HermitianEig eig = eig_hermitian(j.matrix, std::max(tol, kDefaultTol));
  if (eig.values.minCoeff() < -tol)
    throw std::invalid_argument("channel_of_choi: Choi operator is not PSD within tolerance");

  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) <= tol) continue;
    ComplexVector scaled = std::sqrt(eig.values(k)) * eig.vectors.col(k);
    kraus.push_back(double_ket_inverse(scaled, j.d_out(), j.d_in()));
  }
  if (kraus.empty())
    kraus.push_back(ComplexMatrix::Zero(j.d_out(), j.d_in()));
  return Channel(std::move(kraus), j.d_in(), j.d_out());
}

ComplexMatrix apply(const Channel& c, const ComplexMatrix& rho) {
  if (rho.rows() != c.d_in || rho.cols() != c.d_in)
    throw std::invalid_argument("apply: state dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(c.d_out, c.d_out);
  for (const auto& k : c.kraus) out += k * rho * k.adjoint();
  return out;
}

ComplexMatrix apply_choi(const ChoiOperator& j, const ComplexMatrix& rho) {
  if (rho.rows() != j.d_in() || rho.cols() != j.d_in())
    throw std::invalid_argument("apply_choi: state dimension mismatch");
  const ComplexMatrix lifted = kron(identity(j.d_out()), ComplexMatrix(rho.transpose()));
  return partial_trace(j.matrix * lifted, j.dims, {"in"});
}

Channel remix_kraus(const Channel& c, const ComplexMatrix& mixing) {
  if (mixing.cols() != static_cast<Eigen::Index>(c.kraus.size()))
    throw std::invalid_argument("remix_kraus: mixing matrix width must match Kraus count");
  if (!is_unitary(mixing, 1e-9) && (mixing.adjoint() * mixing -
                                    identity(static_cast<int>(mixing.cols())))
                                           .norm() > 1e-9)
    throw std::invalid_argument("remix_kraus: mixing matrix must be an isometry");
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index jrow = 0; jrow < mixing.rows(); ++jrow) {
    ComplexMatrix op = ComplexMatrix::Zero(c.d_out, c.d_in);
    for (size_t i = 0; i < c.kraus.size(); ++i) op += mixing(jrow, i) * c.kraus[i];
    kraus.push_back(std::move(op));
  }
  return Channel(std::move(kraus), c.d_in, c.d_out);
}

bool is_cptp(const Channel& c, double tol) {
  ComplexMatrix sum = ComplexMatrix::Zero(c.d_in, c.d_in);
  for (const auto& k : c.kraus) sum += k.adjoint() * k;
  return (sum - identity(c.d_in)).norm() <= tol * std::max(1.0, sum.norm());
}

bool is_bistochastic(const Channel& c, double tol) {
  if (c.d_in != c.d_out || !is_cptp(c, tol)) return false;
  ComplexMatrix sum = ComplexMatrix::Zero(c.d_out, c.d_out);
  for (const auto& k : c.kraus) sum += k * k.adjoint();
  return (sum - identity(c.d_out)).norm() <= tol * std::max(1.0, sum.norm());
}

Channel unitary_channel(const ComplexMatrix& u, double tol) {
  if (!is_unitary(u, tol))
    throw std::invalid_argument("unitary_channel: input is not unitary");
  return Channel({u}, static_cast<int>(u.cols()), static_cast<int>(u.rows()));
}

Channel identity_channel(int d) { return unitary_channel(identity(d)); }

Channel constant_channel(const ComplexMatrix& rho0, double tol) {
  if (!is_hermitian(rho0, tol) || min_eig(rho0) < -tol ||
      std::abs(rho0.trace().real() - 1.0) > tol || std::abs(rho0.trace().imag()) > tol)
    throw std::invalid_argument("constant_channel: input is not a density matrix");
  const int d = static_cast<int>(rho0.rows());
  HermitianEig eig = eig_hermitian(rho0, std::max(tol, kDefaultTol));
  std::vector<ComplexMatrix> kraus;
  for (int k = 0; k < d; ++k) {
    if (eig.values(k) <= tol) continue;
    ComplexVector psi = std::sqrt(eig.values(k)) * eig.vectors.col(k);
    for (int x = 0; x < d; ++x) {
      ComplexMatrix op = ComplexMatrix::Zero(d, d);
      op.col(x) = psi;
      kraus.push_back(op);
    }
  }
  return Channel(std::move(kraus), d, d);
}

Channel depolarizing(int d) {
  std::vector<ComplexMatrix> kraus;
  const double w = 1.0 / std::sqrt(double(d));
  for (int y = 0; y < d; ++y)
    for (int x = 0; x < d; ++x) {
      ComplexMatrix op = ComplexMatrix::Zero(d, d);
      op(y, x) = w;
      kraus.push_back(op);
    }
  return Channel(std::move(kraus), d, d);
}

Channel classical_channel(const RealMatrix& p, double tol) {
  const int d_out = static_cast<int>(p.rows());
  const int d_in = static_cast<int>(p.cols());
  for (int x = 0; x < d_in; ++x) {
    double col = 0.0;
    for (int y = 0; y < d_out; ++y) {
      if (p(y, x) < -tol)
        throw std::invalid_argument("classical_channel: negative probability");
      col += p(y, x);
    }
    if (std::abs(col - 1.0) > tol)
      throw std::invalid_argument("classical_channel: column does not sum to 1");
  }
  std::vector<ComplexMatrix> kraus;
  for (int y = 0; y < d_out; ++y)
    for (int x = 0; x < d_in; ++x) {
      if (p(y, x) <= 0.0) continue;
      ComplexMatrix op = ComplexMatrix::Zero(d_out, d_in);
      op(y, x) = std::sqrt(p(y, x));
      kraus.push_back(op);
    }
  return Channel(std::move(kraus), d_in, d_out);
}

Channel compose(const Channel& c2, const Channel& c1) {
  if (c1.d_out != c2.d_in)
    throw std::invalid_argument("compose: dimension mismatch");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(c1.kraus.size() * c2.kraus.size());
  for (const auto& b : c2.kraus)
    for (const auto& a : c1.kraus) kraus.push_back(b * a);
  return Channel(std::move(kraus), c1.d_in, c2.d_out);
}

Channel tensor(const Channel& c1, const Channel& c2) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(c1.kraus.size() * c2.kraus.size());
  for (const auto& a : c1.kraus)
    for (const auto& b : c2.kraus) kraus.push_back(kron(a, b));
  return Channel(std::move(kraus), c1.d_in * c2.d_in, c1.d_out * c2.d_out);
}

double choi_distance(const Channel& a, const Channel& b) {
  return frobenius_distance(choi_of_channel(a).matrix, choi_of_channel(b).matrix);
}

}  // namespace chronoflip
