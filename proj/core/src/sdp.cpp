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

#include "chronoflip/sdp.hpp"

#include <cmath>

namespace chronoflip {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

long block_real_dim(const SdpBlock& b) {
  return b.kind == SdpBlockKind::Psd ? static_cast<long>(b.dim) * b.dim : b.dim;
}

struct Compiled {
  RealMatrix a;           // rows × n
  RealVector b;
  RealVector c;
  std::vector<long> offsets;
  long n = 0;
};

Compiled compile(const SdpProblem& p) {
  Compiled out;
  out.offsets.resize(p.blocks.size());
  long n = 0;
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    out.offsets[i] = n;
    n += block_real_dim(p.blocks[i]);
  }
  out.n = n;

  const auto scatter = [&](RealVector& row, const SdpConstraint& k) {
    for (const auto& term : k.matrix_terms) {
      const SdpBlock& blk = p.blocks.at(term.block);
      if (blk.kind != SdpBlockKind::Psd)
        throw std::invalid_argument("sdp: matrix term on a scalar block");
      if (term.coeff.rows() != blk.dim || !is_hermitian(term.coeff, 1e-10))
        throw std::invalid_argument("sdp: constraint coefficient must be Hermitian of block size");
      row.segment(out.offsets[term.block], block_real_dim(blk)) +=
          hermitian_to_real(term.coeff);
    }
    for (const auto& term : k.scalar_terms) {
      const SdpBlock& blk = p.blocks.at(term.block);
      if (blk.kind == SdpBlockKind::Psd)
        throw std::invalid_argument("sdp: scalar term on a PSD block");
      if (term.coeff.size() != blk.dim)
        throw std::invalid_argument("sdp: scalar coefficient size mismatch");
      row.segment(out.offsets[term.block], blk.dim) += term.coeff;
    }
  };

  out.a = RealMatrix::Zero(p.rows(), n);
  out.b = RealVector::Zero(p.rows());
  for (long r = 0; r < p.rows(); ++r) {
    RealVector row = RealVector::Zero(n);
    scatter(row, p.constraints[r]);
    out.a.row(r) = row;
    out.b(r) = p.constraints[r].rhs;
    if (!std::isfinite(p.constraints[r].rhs))
      throw std::invalid_argument("sdp: non-finite right-hand side");
  }

  out.c = RealVector::Zero(n);
  SdpConstraint objective_row;
  objective_row.matrix_terms = p.objective.matrix_terms;
  objective_row.scalar_terms = p.objective.scalar_terms;
  RealVector crow = RealVector::Zero(n);
  scatter(crow, objective_row);
  out.c = crow;
  return out;
}

RealMatrix pinv_spd(const RealMatrix& m) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m);
  const RealVector& vals = solver.eigenvalues();
  const double cutoff = 1e-12 * std::max(1.0, vals.cwiseAbs().maxCoeff());
  RealVector inv = RealVector::Zero(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (vals(i) > cutoff) inv(i) = 1.0 / vals(i);
  return solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();
}

}  // namespace

int SdpProblem::add_psd_block(int n) {
  if (n <= 0) throw std::invalid_argument("add_psd_block: nonpositive size");
  blocks.push_back(SdpBlock{SdpBlockKind::Psd, n});
  return static_cast<int>(blocks.size()) - 1;
}

int SdpProblem::add_free_block(int count) {
  if (count <= 0) throw std::invalid_argument("add_free_block: nonpositive size");
  blocks.push_back(SdpBlock{SdpBlockKind::Free, count});
  return static_cast<int>(blocks.size()) - 1;
}

int SdpProblem::add_nonneg_block(int count) {
  if (count <= 0) throw std::invalid_argument("add_nonneg_block: nonpositive size");
  blocks.push_back(SdpBlock{SdpBlockKind::NonNeg, count});
  return static_cast<int>(blocks.size()) - 1;
}

long SdpProblem::real_dimension() const {
  long n = 0;
  for (const auto& b : blocks) n += block_real_dim(b);
  return n;
}

long SdpProblem::count_tagged(const std::string& tag) const {
  long n = 0;
  for (const auto& k : constraints)
    if (k.tag == tag) ++n;
  return n;
}

RealVector hermitian_to_real(const ComplexMatrix& h) {
  const int n = static_cast<int>(h.rows());
  RealVector v(static_cast<long>(n) * n);
  long idx = 0;
  for (int i = 0; i < n; ++i) v(idx++) = h(i, i).real();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      v(idx++) = kSqrt2 * h(i, j).real();
      v(idx++) = kSqrt2 * h(i, j).imag();
    }
  return v;
}

ComplexMatrix real_to_hermitian(const RealVector& v, int n) {
  if (v.size() != static_cast<long>(n) * n)
    throw std::invalid_argument("real_to_hermitian: size mismatch");
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  long idx = 0;
  for (int i = 0; i < n; ++i) h(i, i) = v(idx++);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double re = v(idx++) / kSqrt2;
      const double im = v(idx++) / kSqrt2;
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  return h;
}

std::vector<ComplexMatrix> hermitian_basis(int n) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<long>(n) * n);
  for (long k = 0; k < static_cast<long>(n) * n; ++k) {
    RealVector e = RealVector::Zero(static_cast<long>(n) * n);
    e(k) = 1.0;
    basis.push_back(real_to_hermitian(e, n));
  }
  return basis;
}

ComplexMatrix project_psd(const ComplexMatrix& h) {
  const int n = static_cast<int>(h.rows());
  RealMatrix embedded(2 * n, 2 * n);
  const RealMatrix re = h.real();
  const RealMatrix im = h.imag();
  embedded.topLeftCorner(n, n) = re;
  embedded.topRightCorner(n, n) = -im;
  embedded.bottomLeftCorner(n, n) = im;
  embedded.bottomRightCorner(n, n) = re;

  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(embedded);
  RealVector vals = solver.eigenvalues().cwiseMax(0.0);
  const RealMatrix projected =
      solver.eigenvectors() * vals.asDiagonal() * solver.eigenvectors().transpose();

  const RealMatrix re_out =
      0.5 * (projected.topLeftCorner(n, n) + projected.bottomRightCorner(n, n));
  const RealMatrix im_out =
      0.5 * (projected.bottomLeftCorner(n, n) - projected.topRightCorner(n, n));
  ComplexMatrix out(n, n);
  out.real() = 0.5 * (re_out + re_out.transpose());
  out.imag() = 0.5 * (im_out - im_out.transpose());
  return out;
}

void add_operator_equality(
    SdpProblem& problem,
    const std::vector<std::pair<int, std::function<ComplexMatrix(const ComplexMatrix&)>>>& matrix_maps,
    const std::vector<std::pair<int, std::vector<ComplexMatrix>>>& scalar_coeffs,
    const ComplexMatrix& rhs, const std::string& tag) {
  const int n = static_cast<int>(rhs.rows());
  const long row_count = static_cast<long>(n) * n;

  // One equality row per Hermitian basis element B_α of the rhs space:
  //   Σ_b ⟨maps_b†(B_α), X_b⟩ + Σ_s ⟨B_α, M_s⟩·x_s = ⟨B_α, rhs⟩.
  // Every inner product with B_α is just the α-th real coordinate, so each
  // superoperator is pushed through its block basis once up front.
  struct BlockColumns {
    int block;
    int block_n;
    RealMatrix columns;  // row α, column bj = ⟨B_α, map(block basis bj)⟩
  };
  std::vector<BlockColumns> pushed;
  for (const auto& [block, map] : matrix_maps) {
    const int block_n = problem.blocks.at(block).dim;
    const std::vector<ComplexMatrix> block_basis = hermitian_basis(block_n);
    RealMatrix columns(row_count, block_basis.size());
    for (size_t bj = 0; bj < block_basis.size(); ++bj)
      columns.col(bj) = hermitian_to_real(map(block_basis[bj]));
    pushed.push_back(BlockColumns{block, block_n, std::move(columns)});
  }

  std::vector<std::pair<int, RealMatrix>> scalar_columns;
  for (const auto& [block, mats] : scalar_coeffs) {
    RealMatrix columns(row_count, mats.size());
    for (size_t s = 0; s < mats.size(); ++s)
      columns.col(s) = hermitian_to_real(mats[s]);
    scalar_columns.emplace_back(block, std::move(columns));
  }

  const RealVector rhs_coords = hermitian_to_real(rhs);
  for (long alpha = 0; alpha < row_count; ++alpha) {
    SdpConstraint row;
    row.tag = tag;
    row.rhs = rhs_coords(alpha);
    for (const auto& pb : pushed)
      row.matrix_terms.push_back(SdpMatrixTerm{
          pb.block, real_to_hermitian(pb.columns.row(alpha).transpose(), pb.block_n)});
    for (const auto& [block, columns] : scalar_columns)
      row.scalar_terms.push_back(SdpScalarTerm{block, columns.row(alpha).transpose()});
    problem.constraints.push_back(std::move(row));
  }
}

SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options) {
  const Compiled sys = compile(problem);
  const long n = sys.n;
  const long rows = sys.a.rows();

  const RealMatrix at = sys.a.transpose();
  const RealMatrix aat_pinv = pinv_spd(sys.a * at);

  const auto affine_project = [&](const RealVector& v, RealVector& multiplier) {
    multiplier.noalias() = aat_pinv * (sys.a * v - sys.b);
    return RealVector(v - at * multiplier);
  };

  const auto cone_project = [&](RealVector v) {
    for (size_t bi = 0; bi < problem.blocks.size(); ++bi) {
      const SdpBlock& blk = problem.blocks[bi];
      const long off = sys.offsets[bi];
      const long len = block_real_dim(blk);
      if (blk.kind == SdpBlockKind::Psd) {
        const ComplexMatrix h = real_to_hermitian(v.segment(off, len), blk.dim);
        v.segment(off, len) = hermitian_to_real(project_psd(h));
      } else if (blk.kind == SdpBlockKind::NonNeg) {
        v.segment(off, len) = v.segment(off, len).cwiseMax(0.0);
      }
    }
    return v;
  };

  double rho = options.rho;
  const double alpha = options.over_relaxation;
  RealVector x = RealVector::Zero(n), z = RealVector::Zero(n), u = RealVector::Zero(n);
  RealVector multiplier = RealVector::Zero(rows);

  const double b_scale = 1.0 + sys.b.norm();
  const double c_scale = 1.0 + sys.c.norm();

  SdpSolution sol;
  sol.seed = options.seed;

  long iter = 0;
  for (iter = 1; iter <= options.max_iter; ++iter) {
    const RealVector z_old = z;
    x = affine_project(z - u - sys.c / rho, multiplier);
    const RealVector x_relaxed = alpha * x + (1.0 - alpha) * z_old;
    z = cone_project(x_relaxed + u);
    u += x_relaxed - z;

    if (iter % options.check_every == 0 || iter == options.max_iter) {
      const double split_residual = (x - z).norm() / (1.0 + z.norm());
      const double primal_residual = (sys.a * z - sys.b).norm() / b_scale;
      const RealVector y = -rho * multiplier;
      const RealVector slack = -rho * u;
      const double dual_residual = (sys.c - at * y - slack).norm() / c_scale;
      const double primal_obj = sys.c.dot(z) + problem.objective.constant;
      const double dual_obj = sys.b.dot(y) + problem.objective.constant;
      const double gap =
          std::abs(primal_obj - dual_obj) / (1.0 + std::abs(primal_obj) + std::abs(dual_obj));
      sol.objective_trace.push_back(primal_obj);

      if (split_residual <= options.eps_feas && primal_residual <= options.eps_feas &&
          gap <= options.eps_gap) {
        sol.status = SdpStatus::Converged;
        break;
      }

      // residual balancing
      const double r_norm = (x - z).norm();
      const double s_norm = rho * (z - z_old).norm();
      if (r_norm > 10.0 * s_norm && rho < 1e6) {
        rho *= 2.0;
        u /= 2.0;
      } else if (s_norm > 10.0 * r_norm && rho > 1e-6) {
        rho /= 2.0;
        u *= 2.0;
      }
    }
  }
  sol.iterations = std::min(iter, options.max_iter);

  // Report everything from the returned (cone-feasible) iterate z.
  const RealVector y = -rho * multiplier;
  const RealVector slack = -rho * u;
  sol.objective = sys.c.dot(z) + problem.objective.constant;
  sol.dual_objective = sys.b.dot(y) + problem.objective.constant;
  sol.gap = std::abs(sol.objective - sol.dual_objective) /
            (1.0 + std::abs(sol.objective) + std::abs(sol.dual_objective));
  sol.primal_residual = (sys.a * z - sys.b).norm() / b_scale;
  sol.dual_residual = (sys.c - at * y - slack).norm() / c_scale;

  sol.matrix_values.resize(problem.blocks.size());
  sol.scalar_values.resize(problem.blocks.size());
  double worst_neg = 0.0;
  for (size_t bi = 0; bi < problem.blocks.size(); ++bi) {
    const SdpBlock& blk = problem.blocks[bi];
    const long off = sys.offsets[bi];
    const long len = block_real_dim(blk);
    if (blk.kind == SdpBlockKind::Psd) {
      sol.matrix_values[bi] = real_to_hermitian(z.segment(off, len), blk.dim);
      worst_neg = std::min(worst_neg, min_eig(sol.matrix_values[bi]));
    } else {
      sol.scalar_values[bi] = z.segment(off, len);
      if (blk.kind == SdpBlockKind::NonNeg)
        worst_neg = std::min(worst_neg, sol.scalar_values[bi].minCoeff());
    }
  }
  sol.psd_violation = std::max(0.0, -worst_neg);

  if (sol.status != SdpStatus::Converged) {
    sol.status = sol.primal_residual > 1e-2 ? SdpStatus::MaybeInfeasible
                                            : SdpStatus::IterationLimit;
  }
  return sol;
}

}  // namespace chronoflip
