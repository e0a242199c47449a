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

#include "chronoflip/haar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chronoflip {

namespace {

std::vector<std::vector<int>> permutations_of(int k) {
  std::vector<int> base(k);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

int cycle_count(const std::vector<int>& perm) {
  const int k = static_cast<int>(perm.size());
  std::vector<bool> seen(k, false);
  int cycles = 0;
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::vector<int> invert_perm(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

RealMatrix pseudo_inverse_symmetric(const RealMatrix& g) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(g);
  const RealVector& vals = solver.eigenvalues();
  const double cutoff = 1e-10 * std::max(1.0, vals.cwiseAbs().maxCoeff());
  RealVector inv = RealVector::Zero(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (std::abs(vals(i)) > cutoff) inv(i) = 1.0 / vals(i);
  return solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();
}

void decode_digits(long index, int base, std::vector<int>& digits) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(index % base);
    index /= base;
  }
}

ComplexVector kron_vec(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexMatrix canonical_phase(const ComplexMatrix& u) {
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      const Complex z = u(i, j);
      if (std::abs(z) > 1e-9) return ComplexMatrix(u * (std::conj(z) / std::abs(z)));
    }
  return u;
}

}  // namespace

ComplexMatrix random_ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  return g;
}

ComplexMatrix random_unitary(int d, Rng& rng) {
  ComplexMatrix g = random_ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const Complex diag = r(i, i);
    const Complex phase = std::abs(diag) > 0 ? diag / std::abs(diag) : Complex(1.0);
    q.col(i) *= phase;
  }
  return q;
}

ComplexMatrix random_special_unitary(int d, Rng& rng) {
  ComplexMatrix u = random_unitary(d, rng);
  const double theta = std::arg(u.determinant());
  return ComplexMatrix(u * std::polar(1.0, -theta / d));
}

ComplexVector random_state(int d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

ComplexMatrix random_density(int d, Rng& rng) {
  ComplexMatrix g = random_ginibre(d, d, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace();
}

ComplexMatrix random_hermitian(int d, Rng& rng) {
  ComplexMatrix g = random_ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

Channel random_cptp_channel(int d, int kraus_rank, Rng& rng) {
  ComplexMatrix g = random_ginibre(d * kraus_rank, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix isometry =
      qr.householderQ() * ComplexMatrix::Identity(d * kraus_rank, d);
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < kraus_rank; ++i)
    kraus.push_back(isometry.block(i * d, 0, d, d));
  return Channel(std::move(kraus), d, d);
}

Channel random_bistochastic_channel(int d, int n_unitaries, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(n_unitaries);
  double total = 0.0;
  for (double& w : weights) total += (w = expo(rng));
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < n_unitaries; ++i)
    kraus.push_back(std::sqrt(weights[i] / total) * random_unitary(d, rng));
  return Channel(std::move(kraus), d, d);
}

ChoiOperator random_rank_one_cp_choi(int d, Rng& rng) {
  ComplexVector psi = random_state(d * d, rng);
  return ChoiOperator(ComplexMatrix(psi * psi.adjoint()), d, d);
}

WeingartenTable weingarten_gram_inverse(int k, int d) {
  if (k < 1 || k > 3)
    throw std::invalid_argument("weingarten_gram_inverse: only degrees 1..3 are supported");
  if (d < 2) throw std::invalid_argument("weingarten_gram_inverse: d must be >= 2");
  WeingartenTable table;
  table.degree = k;
  table.dim = d;
  table.permutations = permutations_of(k);
  const int n = static_cast<int>(table.permutations.size());
  table.gram = RealMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto rel = compose_perm(invert_perm(table.permutations[a]), table.permutations[b]);
      table.gram(a, b) = std::pow(double(d), cycle_count(rel));
    }
  table.gram_inverse = pseudo_inverse_symmetric(table.gram);
  return table;
}

double haar_moment(const WeingartenTable& table,
                   const std::vector<std::pair<int, int>>& u_entries,
                   const std::vector<std::pair<int, int>>& ubar_entries) {
  if (u_entries.size() != ubar_entries.size()) return 0.0;
  const int k = static_cast<int>(u_entries.size());
  if (k != table.degree)
    throw std::invalid_argument("haar_moment: entry count does not match table degree");

  const int n = static_cast<int>(table.permutations.size());
  double sum = 0.0;
  for (int a = 0; a < n; ++a) {
    const auto& sigma = table.permutations[a];
    bool rows_match = true;
    for (int i = 0; i < k && rows_match; ++i)
      rows_match = (u_entries[i].first == ubar_entries[sigma[i]].first);
    if (!rows_match) continue;
    for (int b = 0; b < n; ++b) {
      const auto& tau = table.permutations[b];
      bool cols_match = true;
      for (int i = 0; i < k && cols_match; ++i)
        cols_match = (u_entries[i].second == ubar_entries[tau[i]].second);
      if (cols_match) sum += table.gram_inverse(a, b);
    }
  }
  return sum;
}

int MomentSpec::degree() const {
  int u = 0;
  for (bool c : conjugated)
    if (!c) ++u;
  return u;
}

bool MomentSpec::balanced() const {
  return 2 * degree() == static_cast<int>(conjugated.size());
}

ComplexMatrix haar_moment_tensor(const MomentSpec& spec) {
  const int slots = static_cast<int>(spec.conjugated.size());
  const int d = spec.dim;
  long n = 1;
  for (int s = 0; s < slots; ++s) n *= d;

  if (!spec.balanced()) return ComplexMatrix::Zero(n, n);

  const WeingartenTable table = weingarten_gram_inverse(spec.degree(), d);
  ComplexMatrix out(n, n);
  std::vector<int> row(slots), col(slots);
  std::vector<std::pair<int, int>> u_entries, ubar_entries;
  for (long r = 0; r < n; ++r) {
    decode_digits(r, d, row);
    for (long c = 0; c < n; ++c) {
      decode_digits(c, d, col);
      u_entries.clear();
      ubar_entries.clear();
      for (int s = 0; s < slots; ++s) {
        if (spec.conjugated[s])
          ubar_entries.emplace_back(row[s], col[s]);
        else
          u_entries.emplace_back(row[s], col[s]);
      }
      out(r, c) = haar_moment(table, u_entries, ubar_entries);
    }
  }
  return out;
}

MonteCarloEstimate monte_carlo_moment(int d,
                                      const std::vector<std::pair<int, int>>& u_entries,
                                      const std::vector<std::pair<int, int>>& ubar_entries,
                                      long samples, uint64_t seed) {
  Rng rng(seed);
  std::vector<Complex> values(samples);
  for (long s = 0; s < samples; ++s) {
    const ComplexMatrix u = random_unitary(d, rng);
    Complex term = 1.0;
    for (const auto& [r, c] : u_entries) term *= u(r, c);
    for (const auto& [r, c] : ubar_entries) term *= std::conj(u(r, c));
    values[s] = term;
  }
  const Complex mean =
      pairwise_sum<Complex>(samples, [&](long i) { return values[i]; }) / double(samples);
  const double var =
      pairwise_sum<double>(samples, [&](long i) { return std::norm(values[i] - mean); }) /
      double(samples - 1);
  return MonteCarloEstimate{mean, std::sqrt(var / double(samples))};
}

ComplexMatrix design_moment_tensor(const MomentSpec& spec, const UnitaryDesign& design) {
  if (design.elements.empty())
    throw std::invalid_argument("design_moment_tensor: empty design");
  const long count = static_cast<long>(design.elements.size());
  ComplexMatrix sum = pairwise_sum<ComplexMatrix>(count, [&](long i) {
    std::vector<ComplexMatrix> factors;
    for (bool c : spec.conjugated)
      factors.push_back(c ? ComplexMatrix(design.elements[i].conjugate())
                          : design.elements[i]);
    return kron_all(factors);
  });
  return sum / double(count);
}

bool design_has_strength(const UnitaryDesign& design, int t, int d, double tol) {
  MomentSpec spec;
  spec.dim = d;
  spec.conjugated.assign(t, false);
  spec.conjugated.insert(spec.conjugated.end(), t, true);
  const ComplexMatrix haar = haar_moment_tensor(spec);
  const ComplexMatrix avg = design_moment_tensor(spec, design);
  return (haar - avg).cwiseAbs().maxCoeff() <= tol;
}

UnitaryDesign single_qubit_clifford_group() {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, Complex(0, 1);

  std::vector<ComplexMatrix> group{canonical_phase(identity(2))};
  const std::vector<ComplexMatrix> generators{h, s};
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t current = group.size();
    for (size_t i = 0; i < current; ++i)
      for (const auto& g : generators) {
        const ComplexMatrix candidate = canonical_phase(ComplexMatrix(g * group[i]));
        bool known = false;
        for (const auto& existing : group)
          if ((existing - candidate).norm() < 1e-9) {
            known = true;
            break;
          }
        if (!known) {
          group.push_back(candidate);
          grew = true;
        }
      }
  }
  if (group.size() != 24)
    throw std::runtime_error("single_qubit_clifford_group: closure produced " +
                             std::to_string(group.size()) + " elements");
  return UnitaryDesign{std::move(group), 3};
}

ComplexMatrix frame_operator(int d, TwirlMethod method) {
  const long n = static_cast<long>(d) * d * d * d;
  if (method == TwirlMethod::Design) {
    if (d != 2)
      throw std::invalid_argument("frame_operator: design method supports d = 2 only");
    const UnitaryDesign clifford = single_qubit_clifford_group();
    const long count = static_cast<long>(clifford.elements.size());
    ComplexMatrix sum = pairwise_sum<ComplexMatrix>(count, [&](long i) {
      const ComplexMatrix& u = clifford.elements[i];
      const ComplexVector v =
          kron_vec(double_ket(u), double_ket(ComplexMatrix(u.conjugate())));
      return ComplexMatrix(v * v.adjoint());
    });
    return sum / double(count * d * d);
  }

  if (d > 4)
    throw std::invalid_argument("frame_operator: weingarten method supports d <= 4");
  const WeingartenTable table = weingarten_gram_inverse(2, d);
  ComplexMatrix out(n, n);
  std::vector<int> ri(4), ci(4);
  for (long r = 0; r < n; ++r) {
    decode_digits(r, d, ri);
    for (long c = 0; c < n; ++c) {
      decode_digits(c, d, ci);
      // (1/d²) E[U[r1,r2]Ū[r3,r4] · conj(U[c1,c2]Ū[c3,c4])]
      out(r, c) = haar_moment(table, {{ri[0], ri[1]}, {ci[2], ci[3]}},
                              {{ri[2], ri[3]}, {ci[0], ci[1]}}) /
                  double(d * d);
    }
  }
  return out;
}

ComplexMatrix frame_operator_closed_form(int d) {
  const SystemDims full{{"1", d}, {"2", d}, {"3", d}, {"4", d}};
  const ComplexMatrix e = bell_projector(d);
  const ComplexMatrix e_perp = identity(d * d) - e;
  const SystemDims pair13{{"1", d}, {"3", d}};
  const SystemDims pair24{{"2", d}, {"4", d}};
  const ComplexMatrix e13 = embed(e, pair13, full);
  const ComplexMatrix e24 = embed(e, pair24, full);
  const ComplexMatrix p13 = embed(e_perp, pair13, full);
  const ComplexMatrix p24 = embed(e_perp, pair24, full);
  const double dd = double(d) * d;
  return e13 * e24 / dd + (1.0 - 1.0 / dd) * p13 * p24 / ((dd - 1.0) * (dd - 1.0));
}

SystemDims omega_dims(int d) {
  return SystemDims{{"A_i", d}, {"A_o", d}, {"B_i", d}, {"B_o", d}, {"C_i", d}, {"C_o", d}};
}

ComplexMatrix omega_operator(int d, TwirlMethod method) {
  long n = 1;
  for (int s = 0; s < 6; ++s) n *= d;

  if (method == TwirlMethod::Design) {
    if (d != 2)
      throw std::invalid_argument("omega_operator: design method supports d = 2 only");
    const UnitaryDesign clifford = single_qubit_clifford_group();
    const long count = static_cast<long>(clifford.elements.size());
    ComplexMatrix sum = pairwise_sum<ComplexMatrix>(count, [&](long i) {
      const ComplexMatrix& u = clifford.elements[i];
      const ComplexVector v = kron_vec(
          kron_vec(double_ket(ComplexMatrix(u.conjugate())),
                   double_ket(ComplexMatrix(u.conjugate()))),
          double_ket(ComplexMatrix(u.transpose())));
      return ComplexMatrix(v * v.adjoint());
    });
    return sum / double(count * d * d);
  }

  if (d > 4)
    throw std::invalid_argument("omega_operator: weingarten method supports d <= 4");
  const WeingartenTable table = weingarten_gram_inverse(3, d);
  ComplexMatrix out(n, n);
  std::vector<int> ri(6), ci(6);
  for (long r = 0; r < n; ++r) {
    decode_digits(r, d, ri);
    for (long c = r; c < n; ++c) {
      decode_digits(c, d, ci);
      // (1/d²) E[Ū[rAi,rAo]Ū[rBi,rBo]Uᵀ[rCi,rCo] · conj(same at c)]
      const double val =
          haar_moment(table,
                      {{ri[5], ri[4]}, {ci[0], ci[1]}, {ci[2], ci[3]}},
                      {{ri[0], ri[1]}, {ri[2], ri[3]}, {ci[5], ci[4]}}) /
          double(d * d);
      out(r, c) = val;
      out(c, r) = val;
    }
  }
  return out;
}

ComplexMatrix conjugate_rep_twirl(const ComplexMatrix& x, int d) {
  const long n = static_cast<long>(d) * d * d;
  if (x.rows() != n || x.cols() != n)
    throw std::invalid_argument("conjugate_rep_twirl: operator must act on (C^d)^3");
  MomentSpec spec;
  spec.dim = d;
  spec.conjugated = {true, true, false, false, false, true};  // W ⊗ conj(W)
  const ComplexMatrix m = haar_moment_tensor(spec);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (long r = 0; r < n; ++r)
    for (long rp = 0; rp < n; ++rp) {
      Complex sum = 0.0;
      for (long s = 0; s < n; ++s)
        for (long sp = 0; sp < n; ++sp)
          sum += m(r * n + rp, s * n + sp) * x(s, sp);
      out(r, rp) = sum;
    }
  return out;
}

std::array<ComplexMatrix, 3> isotypic_projectors(int d) {
  if (d != 2 && d != 3)
    throw std::invalid_argument("isotypic_projectors: supported for d in {2, 3}");
  const long n = static_cast<long>(d) * d * d;
  const int d_plus = d * (d + 1) / 2;
  const int d_minus = d * (d - 1) / 2;
  const int rank_multiplicity = 2 * d;
  const int rank_sym = d * (d_plus - 1);
  const int rank_anti = d * (d_minus - 1);

  Rng rng(0x1507f11au);
  ComplexMatrix generic = conjugate_rep_twirl(random_hermitian(static_cast<int>(n), rng), d);
  generic = 0.5 * (generic + generic.adjoint());

  const HermitianEig eig = eig_hermitian(generic, 1e-6);
  const double spread =
      std::max(1e-12, eig.values.maxCoeff() - eig.values.minCoeff());

  // Cluster eigenvalues; a generic commutant element has one eigenvalue per
  // irreducible block (two for the multiplicity-two block).
  std::vector<std::pair<int, int>> clusters;  // [start, end)
  int start = 0;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    if (i == static_cast<int>(n) || eig.values(i - 1) - eig.values(i) > 1e-6 * spread) {
      clusters.emplace_back(start, i);
      start = i;
    }
  }

  ComplexMatrix p_mult = ComplexMatrix::Zero(n, n);
  ComplexMatrix p_sym = ComplexMatrix::Zero(n, n);
  ComplexMatrix p_anti = ComplexMatrix::Zero(n, n);
  int found_dim_d = 0, found_sym = 0, found_anti = 0;
  for (const auto& [lo, hi] : clusters) {
    const int size = hi - lo;
    ComplexMatrix block = ComplexMatrix::Zero(n, n);
    for (int i = lo; i < hi; ++i)
      block += eig.vectors.col(i) * eig.vectors.col(i).adjoint();
    if (size == d) {
      p_mult += block;
      ++found_dim_d;
    } else if (size == rank_sym) {
      p_sym += block;
      ++found_sym;
    } else if (rank_anti > 0 && size == rank_anti) {
      p_anti += block;
      ++found_anti;
    } else {
      throw std::runtime_error("isotypic_projectors: unexpected eigenspace of dimension " +
                               std::to_string(size));
    }
  }
  if (found_dim_d != 2 || found_sym != 1 || (rank_anti > 0 && found_anti != 1))
    throw std::runtime_error("isotypic_projectors: eigenspace pattern does not match");
  if (std::abs(p_mult.trace().real() - rank_multiplicity) > 1e-8)
    throw std::runtime_error("isotypic_projectors: multiplicity block has wrong rank");

  return {p_mult, p_sym, p_anti};
}

ControlledUseQubitBound two_copy_inequality_qubit(TwirlMethod method) {
  const int d = 2;
  const SystemDims full = omega_dims(d);
  const SystemDims out_dims{{"A_o", d}, {"B_o", d}, {"C_i", d}};
  const long n3 = out_dims.total_dim();

  const auto phi_vector = [&](int nn, double sign, double norm) {
    ComplexVector v = ComplexVector::Zero(n3);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
          double amp = 0.0;
          if (a == nn && b == c) amp += 1.0;        // |n⟩_{A_o}|I⟩⟩_{B_o C_i}
          if (a == c && b == nn) amp += sign;       // |I⟩⟩_{A_o C_i}|n⟩_{B_o}
          v((static_cast<long>(a) * d + b) * d + c) = amp / norm;
        }
    return v;
  };

  ComplexMatrix q_plus = ComplexMatrix::Zero(n3, n3);
  ComplexMatrix q_minus = ComplexMatrix::Zero(n3, n3);
  for (int nn = 0; nn < d; ++nn) {
    const ComplexVector vp = phi_vector(nn, +1.0, std::sqrt(2.0 * (d + 1)));
    const ComplexVector vm = phi_vector(nn, -1.0, std::sqrt(2.0 * (d - 1)));
    q_plus += vp * vp.adjoint();
    q_minus += vm * vm.adjoint();
  }

  const ComplexMatrix sym = 0.5 * (identity(d * d) + swap_operator(d));
  const ComplexMatrix anti = 0.5 * (identity(d * d) - swap_operator(d));
  const SystemDims pair_out{{"A_o", d}, {"B_o", d}};
  const ComplexMatrix q_plus_perp = embed(sym, pair_out, out_dims) - q_plus;

  const double alpha = 3.0 / 5.0;
  const ComplexMatrix rho_plus = alpha * q_plus / 2.0 + (1.0 - alpha) * q_plus_perp / 4.0;
  const ComplexMatrix rho_minus = alpha * q_minus / 2.0 + (1.0 - alpha) * q_plus / 2.0;

  ControlledUseQubitBound report;
  report.rho_plus_trace = rho_plus.trace().real();
  report.rho_minus_trace = rho_minus.trace().real();
  report.marginal_distance = std::max(
      (partial_trace(rho_plus, out_dims, {"A_o"}) -
       partial_trace(rho_minus, out_dims, {"A_o"}))
          .norm(),
      (partial_trace(rho_plus, out_dims, {"B_o"}) -
       partial_trace(rho_minus, out_dims, {"B_o"}))
          .norm());

  // Choi(N) for N(ρ) = Tr[P₊ρ]·ρ₊ + Tr[P₋ρ]·ρ₋ is ρ₊⊗P₊ᵀ + ρ₋⊗P₋ᵀ; both
  // projectors are real symmetric.
  const SystemDims five{{"A_o", d}, {"B_o", d}, {"C_i", d}, {"A_i", d}, {"B_i", d}};
  const ComplexMatrix choi_n = kron(rho_plus, sym) + kron(rho_minus, anti);
  const ComplexMatrix lhs = embed(choi_n, five, full);
  const ComplexMatrix omega = omega_operator(d, method);
  report.min_eigenvalue = min_eig(lhs - 1.2 * omega);
  return report;
}

ControlledUseBound two_copy_inequality(int d) {
  const auto projectors = isotypic_projectors(d);
  const int d_plus = d * (d + 1) / 2;
  const int d_minus = d * (d - 1) / 2;
  const std::array<int, 3> block_dims{d, d * (d_plus - 1), d * (d_minus - 1)};
  const std::array<int, 3> multiplicities{2, 1, 1};

  const long n3 = static_cast<long>(d) * d * d;
  ComplexMatrix rho = ComplexMatrix::Zero(n3, n3);
  for (int j = 0; j < 3; ++j) {
    if (block_dims[j] == 0) continue;
    rho += double(multiplicities[j]) / double(block_dims[j]) * projectors[j];
  }
  rho /= 6.0;

  const SystemDims full = omega_dims(d);
  const SystemDims sub{{"A_o", d}, {"B_o", d}, {"C_i", d}};
  const ComplexMatrix lhs = (6.0 / double(d * d)) * embed(rho, sub, full);
  const ComplexMatrix omega = omega_operator(d, TwirlMethod::Weingarten);

  ControlledUseBound report;
  report.rho_trace = rho.trace().real();
  report.min_eigenvalue = min_eig(lhs - omega);
  return report;
}

}  // namespace chronoflip
