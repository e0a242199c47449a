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

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chronoflip {

using Complex = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Default tolerance for numerical predicates (Hermitian, unitary, PSD, ...).
inline constexpr double kDefaultTol = 1e-9;

/// Ordered list of labelled tensor factors of a composite Hilbert space.
///
/// Within a labelled space, tensor factors appear in list order; every
/// operator on the space indexes its rows/columns in the row-major
/// mixed-radix order induced by that list.
class SystemDims {
 public:
  SystemDims() = default;
  SystemDims(std::initializer_list<std::pair<std::string, int>> factors);
  explicit SystemDims(std::vector<std::pair<std::string, int>> factors);

  int count() const { return static_cast<int>(factors_.size()); }
  const std::string& label(int i) const { return factors_.at(i).first; }
  int dim(int i) const { return factors_.at(i).second; }
  int dim_of(const std::string& label) const { return dim(index_of(label)); }
  long total_dim() const;

  bool has_label(const std::string& label) const;
  /// Position of a label in the factor list; throws on unknown labels.
  int index_of(const std::string& label) const;

  /// Factors restricted to `labels`, keeping this object's order.
  SystemDims subset(const std::vector<std::string>& labels) const;
  /// Factors remaining after removing `labels`, keeping order.
  SystemDims erased(const std::vector<std::string>& labels) const;
  /// Same factors listed in the order given by `labels` (a permutation).
  SystemDims reordered(const std::vector<std::string>& labels) const;
  /// Copy with two labels exchanged (dimensions move with the labels).
  SystemDims relabeled(const std::string& a, const std::string& b) const;

  std::vector<int> dims_vector() const;
  std::vector<std::string> labels_vector() const;

  bool operator==(const SystemDims& other) const = default;

 private:
  void validate() const;
  std::vector<std::pair<std::string, int>> factors_;
};

// --- Construction of standard operators -------------------------------------

ComplexMatrix identity(int n);
/// SWAP on C^d ⊗ C^d:  SWAP(|φ⟩⊗|ψ⟩) = |ψ⟩⊗|φ⟩.
ComplexMatrix swap_operator(int d);
/// Rank-one projector E = |I⟩⟩⟨⟨I| / d onto the maximally entangled vector.
ComplexMatrix bell_projector(int d);
/// Maximally entangled unit vector |I⟩⟩/√d on C^d ⊗ C^d.
ComplexVector maximally_entangled_state(int d);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// --- Core operations ---------------------------------------------------------

/// Kronecker product, (a⊗b)[(i·rb+k),(j·cb+l)] = a[i,j]·b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors);

/// Vectorisation |A⟩⟩ = Σ_{m,n} ⟨m|A|n⟩ |m⟩⊗|n⟩.
ComplexVector double_ket(const ComplexMatrix& a);
/// Inverse of double_ket for a rows×cols operator (pure index permutation).
ComplexMatrix double_ket_inverse(const ComplexVector& v, int rows, int cols);

/// Trace out the factors named in `traced`, preserving the order of the rest.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SystemDims& dims,
                            const std::vector<std::string>& traced);

/// Reorder tensor factors; `new_order` must be a permutation of the labels.
ComplexMatrix permute_systems(const ComplexMatrix& m, const SystemDims& dims,
                              const std::vector<std::string>& new_order);

/// Place an operator given on the `sub` factors into the `full` space,
/// acting as identity on the remaining factors.
ComplexMatrix embed(const ComplexMatrix& op, const SystemDims& sub,
                    const SystemDims& full);

/// Transpose only the factors named in `labels`.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const SystemDims& dims,
                                const std::vector<std::string>& labels);

// --- Hermitian eigenproblems and predicates ----------------------------------

struct HermitianEig {
  RealVector values;      // descending
  ComplexMatrix vectors;  // orthonormal columns, vectors.col(k) ↔ values[k]
};

/// Eigendecomposition of a Hermitian matrix (checked within `tol`).
/// Throws std::invalid_argument when the input is not Hermitian.
HermitianEig eig_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);

/// Smallest eigenvalue of the Hermitian part (m + m†)/2.
double min_eig(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);
bool is_psd(const ComplexMatrix& m, double tol = kDefaultTol);
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTol);

/// ‖a − b‖_F
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Deterministic pairwise (tree) reduction of f(0), ..., f(count-1).
template <class T, class F>
T pairwise_sum(long count, F&& f) {
  if (count <= 0) throw std::invalid_argument("pairwise_sum: empty range");
  struct Rec {
    F& fn;
    T run(long lo, long hi) {
      if (hi - lo == 1) return fn(lo);
      long mid = lo + (hi - lo) / 2;
      return run(lo, mid) + run(mid, hi);
    }
  } rec{f};
  return rec.run(0, count);
}

}  // namespace chronoflip
