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

#include "chronoflip/linalg.hpp"

#include <algorithm>
#include <set>

namespace chronoflip {

namespace {

// Mixed-radix helpers for row-major composite indices.
std::vector<long> strides_of(const std::vector<int>& dims) {
  std::vector<long> strides(dims.size());
  long acc = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    strides[i] = acc;
    acc *= dims[i];
  }
  return strides;
}

void decode(long index, const std::vector<int>& dims, std::vector<int>& digits) {
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(index % dims[i]);
    index /= dims[i];
  }
}

long encode(const std::vector<int>& digits, const std::vector<long>& strides) {
  long index = 0;
  for (size_t i = 0; i < digits.size(); ++i) index += digits[i] * strides[i];
  return index;
}

void check_square_for(const ComplexMatrix& m, const SystemDims& dims,
                      const char* op) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(op) + ": matrix must be square");
  if (m.rows() != dims.total_dim())
    throw std::invalid_argument(std::string(op) +
                                ": dims do not match matrix dimension");
}

}  // namespace

SystemDims::SystemDims(std::initializer_list<std::pair<std::string, int>> factors)
    : factors_(factors) {
  validate();
}

SystemDims::SystemDims(std::vector<std::pair<std::string, int>> factors)
    : factors_(std::move(factors)) {
  validate();
}

void SystemDims::validate() const {
  std::set<std::string> seen;
  for (const auto& [label, dim] : factors_) {
    if (dim <= 0) throw std::invalid_argument("SystemDims: nonpositive dimension");
    if (!seen.insert(label).second)
      throw std::invalid_argument("SystemDims: duplicate label '" + label + "'");
  }
}

long SystemDims::total_dim() const {
  long total = 1;
  for (const auto& [label, dim] : factors_) total *= dim;
  return total;
}

bool SystemDims::has_label(const std::string& label) const {
  for (const auto& [l, d] : factors_)
    if (l == label) return true;
  return false;
}

int SystemDims::index_of(const std::string& label) const {
  for (size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].first == label) return static_cast<int>(i);
  throw std::invalid_argument("SystemDims: unknown label '" + label + "'");
}

SystemDims SystemDims::subset(const std::vector<std::string>& labels) const {
  std::set<std::string> keep(labels.begin(), labels.end());
  for (const auto& l : labels) index_of(l);  // reject unknown labels
  std::vector<std::pair<std::string, int>> out;
  for (const auto& f : factors_)
    if (keep.count(f.first)) out.push_back(f);
  return SystemDims(out);
}

SystemDims SystemDims::erased(const std::vector<std::string>& labels) const {
  std::set<std::string> drop(labels.begin(), labels.end());
  for (const auto& l : labels) index_of(l);
  std::vector<std::pair<std::string, int>> out;
  for (const auto& f : factors_)
    if (!drop.count(f.first)) out.push_back(f);
  return SystemDims(out);
}

SystemDims SystemDims::reordered(const std::vector<std::string>& labels) const {
  if (static_cast<int>(labels.size()) != count())
    throw std::invalid_argument("SystemDims::reordered: not a permutation");
  std::vector<std::pair<std::string, int>> out;
  for (const auto& l : labels) out.emplace_back(l, dim(index_of(l)));
  return SystemDims(out);
}

SystemDims SystemDims::relabeled(const std::string& a, const std::string& b) const {
  std::vector<std::pair<std::string, int>> out = factors_;
  out[index_of(a)].first = b;
  out[index_of(b)].first = a;
  return SystemDims(out);
}

std::vector<int> SystemDims::dims_vector() const {
  std::vector<int> out;
  out.reserve(factors_.size());
  for (const auto& [l, d] : factors_) out.push_back(d);
  return out;
}

std::vector<std::string> SystemDims::labels_vector() const {
  std::vector<std::string> out;
  out.reserve(factors_.size());
  for (const auto& [l, d] : factors_) out.push_back(l);
  return out;
}

ComplexMatrix identity(int n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix swap_operator(int d) {
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  return s;
}

ComplexVector maximally_entangled_state(int d) {
  ComplexVector v = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(double(d));
  return v;
}

ComplexMatrix bell_projector(int d) {
  ComplexVector v = double_ket(identity(d));
  return (v * v.adjoint()) / double(d);
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("kron_all: empty factor list");
  ComplexMatrix out = factors.front();
  for (size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

ComplexVector double_ket(const ComplexMatrix& a) {
  ComplexVector v(a.rows() * a.cols());
  for (Eigen::Index m = 0; m < a.rows(); ++m)
    for (Eigen::Index n = 0; n < a.cols(); ++n) v(m * a.cols() + n) = a(m, n);
  return v;
}

ComplexMatrix double_ket_inverse(const ComplexVector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols)
    throw std::invalid_argument("double_ket_inverse: size mismatch");
  ComplexMatrix a(rows, cols);
  for (int m = 0; m < rows; ++m)
    for (int n = 0; n < cols; ++n) a(m, n) = v(m * cols + n);
  return a;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SystemDims& dims,
                            const std::vector<std::string>& traced) {
  check_square_for(m, dims, "partial_trace");
  const std::vector<int> all_dims = dims.dims_vector();
  const std::vector<long> all_strides = strides_of(all_dims);

  std::set<std::string> drop(traced.begin(), traced.end());
  for (const auto& l : traced) dims.index_of(l);

  std::vector<int> kept_pos, traced_pos;
  for (int i = 0; i < dims.count(); ++i) {
    if (drop.count(dims.label(i)))
      traced_pos.push_back(i);
    else
      kept_pos.push_back(i);
  }

  std::vector<int> kept_dims, traced_dims;
  for (int p : kept_pos) kept_dims.push_back(all_dims[p]);
  for (int p : traced_pos) traced_dims.push_back(all_dims[p]);
  long kept_total = 1, traced_total = 1;
  for (int d : kept_dims) kept_total *= d;
  for (int d : traced_dims) traced_total *= d;

  ComplexMatrix out = ComplexMatrix::Zero(kept_total, kept_total);
  std::vector<int> ri(kept_dims.size()), ci(kept_dims.size()), ti(traced_dims.size());
  std::vector<int> row_digits(all_dims.size()), col_digits(all_dims.size());
  for (long r = 0; r < kept_total; ++r) {
    if (!kept_dims.empty()) decode(r, kept_dims, ri);
    for (long c = 0; c < kept_total; ++c) {
      if (!kept_dims.empty()) decode(c, kept_dims, ci);
      Complex sum = 0.0;
      for (long t = 0; t < traced_total; ++t) {
        if (!traced_dims.empty()) decode(t, traced_dims, ti);
        for (size_t k = 0; k < kept_pos.size(); ++k) {
          row_digits[kept_pos[k]] = ri[k];
          col_digits[kept_pos[k]] = ci[k];
        }
        for (size_t k = 0; k < traced_pos.size(); ++k) {
          row_digits[traced_pos[k]] = ti[k];
          col_digits[traced_pos[k]] = ti[k];
        }
        sum += m(encode(row_digits, all_strides), encode(col_digits, all_strides));
      }
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix permute_systems(const ComplexMatrix& m, const SystemDims& dims,
                              const std::vector<std::string>& new_order) {
  check_square_for(m, dims, "permute_systems");
  const SystemDims target = dims.reordered(new_order);
  const std::vector<int> old_dims = dims.dims_vector();
  const std::vector<int> new_dims = target.dims_vector();
  const std::vector<long> old_strides = strides_of(old_dims);

  // position in the old list of the factor at new position k
  std::vector<int> source(new_order.size());
  for (size_t k = 0; k < new_order.size(); ++k)
    source[k] = dims.index_of(new_order[k]);

  const long n = dims.total_dim();
  ComplexMatrix out(n, n);
  std::vector<int> rn(new_dims.size()), cn(new_dims.size());
  std::vector<int> ro(old_dims.size()), co(old_dims.size());
  for (long r = 0; r < n; ++r) {
    decode(r, new_dims, rn);
    for (size_t k = 0; k < source.size(); ++k) ro[source[k]] = rn[k];
    const long old_r = encode(ro, old_strides);
    for (long c = 0; c < n; ++c) {
      decode(c, new_dims, cn);
      for (size_t k = 0; k < source.size(); ++k) co[source[k]] = cn[k];
      out(r, c) = m(old_r, encode(co, old_strides));
    }
  }
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, const SystemDims& sub,
                    const SystemDims& full) {
  check_square_for(op, sub, "embed");
  std::vector<std::string> rest_labels;
  for (int i = 0; i < full.count(); ++i)
    if (!sub.has_label(full.label(i))) rest_labels.push_back(full.label(i));
  for (int i = 0; i < sub.count(); ++i) full.index_of(sub.label(i));

  const SystemDims rest = full.subset(rest_labels);
  ComplexMatrix big = kron(op, identity(static_cast<int>(rest.total_dim())));

  // big lives on [sub..., rest...]; permute to full order
  std::vector<std::pair<std::string, int>> cat;
  for (int i = 0; i < sub.count(); ++i) cat.emplace_back(sub.label(i), sub.dim(i));
  for (int i = 0; i < rest.count(); ++i) cat.emplace_back(rest.label(i), rest.dim(i));
  return permute_systems(big, SystemDims(cat), full.labels_vector());
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const SystemDims& dims,
                                const std::vector<std::string>& labels) {
  check_square_for(m, dims, "partial_transpose");
  std::set<std::string> flip(labels.begin(), labels.end());
  for (const auto& l : labels) dims.index_of(l);
  const std::vector<int> all_dims = dims.dims_vector();
  const std::vector<long> strides = strides_of(all_dims);
  const long n = dims.total_dim();

  ComplexMatrix out(n, n);
  std::vector<int> ri(all_dims.size()), ci(all_dims.size());
  std::vector<int> sr(all_dims.size()), sc(all_dims.size());
  for (long r = 0; r < n; ++r) {
    decode(r, all_dims, ri);
    for (long c = 0; c < n; ++c) {
      decode(c, all_dims, ci);
      for (int k = 0; k < dims.count(); ++k) {
        const bool swap = flip.count(dims.label(k)) > 0;
        sr[k] = swap ? ci[k] : ri[k];
        sc[k] = swap ? ri[k] : ci[k];
      }
      out(r, c) = m(encode(sr, strides), encode(sc, strides));
    }
  }
  return out;
}

HermitianEig eig_hermitian(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol))
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed");

  const Eigen::Index n = m.rows();
  HermitianEig out;
  out.values = RealVector(n);
  out.vectors = ComplexMatrix(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

double min_eig(const ComplexMatrix& m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  return solver.eigenvalues().minCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - ComplexMatrix(m.adjoint())).norm() <= tol * std::max(1.0, m.norm());
}

bool is_psd(const ComplexMatrix& m, double tol) {
  return is_hermitian(m, std::max(tol, kDefaultTol)) && min_eig(m) >= -tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  ComplexMatrix gram = m.adjoint() * m;
  return (gram - identity(static_cast<int>(m.rows()))).norm() <= tol * std::max(1.0, gram.norm());
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).norm();
}

}  // namespace chronoflip
