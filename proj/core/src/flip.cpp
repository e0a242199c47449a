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

#include "chronoflip/flip.hpp"

#include <functional>

namespace chronoflip {

namespace {

ComplexMatrix control_block(int c) {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(c, c) = 1.0;
  return p;
}

// Isometry-like map V with Choi(F(C)) = V·Choi(C)·V†. Rows are indexed by
// (target_out, ctrl_out, target_in, ctrl_in), columns by (out, in) of C.
ComplexMatrix flip_conjugation(int d) {
  ComplexMatrix v = ComplexMatrix::Zero(4L * d * d, static_cast<long>(d) * d);
  for (int t1 = 0; t1 < d; ++t1)
    for (int t2 = 0; t2 < d; ++t2) {
      const long fwd = ((static_cast<long>(t1) * 2 + 0) * (2 * d)) + t2 * 2 + 0;
      const long bwd = ((static_cast<long>(t1) * 2 + 1) * (2 * d)) + t2 * 2 + 1;
      v(fwd, static_cast<long>(t1) * d + t2) += 1.0;
      v(bwd, static_cast<long>(t2) * d + t1) += 1.0;
    }
  return v;
}

void require_bipartite_pair(const Channel& a1, const Channel& a2, double tol,
                            const char* op) {
  if (a1.d_in != a1.d_out || a2.d_in != a2.d_out || a1.d_in != a2.d_in)
    throw std::invalid_argument(std::string(op) + ": channels must share equal square dimensions");
  if (!is_bistochastic(a1, tol) || !is_bistochastic(a2, tol))
    throw std::invalid_argument(std::string(op) + ": both channels must be bistochastic");
}

Channel controlled_pair_supermap(const Channel& a1, const Channel& a2,
                                 const std::function<ComplexMatrix(const ComplexMatrix&, const ComplexMatrix&)>& branch0,
                                 const std::function<ComplexMatrix(const ComplexMatrix&, const ComplexMatrix&)>& branch1) {
  const int d = a1.d_in;
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a1.kraus.size() * a2.kraus.size());
  for (const auto& m : a1.kraus)
    for (const auto& n : a2.kraus)
      kraus.push_back(kron(branch0(m, n), control_block(0)) +
                      kron(branch1(m, n), control_block(1)));
  return Channel(std::move(kraus), 2 * d, 2 * d);
}

}  // namespace

Channel time_flip(const Channel& c, double tol) {
  if (!is_bistochastic(c, tol))
    throw std::invalid_argument("time_flip: input channel must be bistochastic");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(c.kraus.size());
  for (const auto& k : c.kraus)
    kraus.push_back(kron(k, control_block(0)) +
                    kron(ComplexMatrix(k.transpose()), control_block(1)));
  return Channel(std::move(kraus), 2 * c.d_in, 2 * c.d_out);
}

ChoiOperator time_flip_choi(const Channel& c) {
  if (c.d_in != c.d_out)
    throw std::invalid_argument("time_flip_choi: channel must have equal dimensions");
  const int d = c.d_in;
  const ComplexMatrix v = flip_conjugation(d);
  return ChoiOperator(v * choi_of_channel(c).matrix * v.adjoint(), 2 * d, 2 * d);
}

SuperChoi flip_supermap_choi(int d) {
  const SystemDims dims{{"B_o", 2 * d}, {"B_i", 2 * d}, {"A_o", d}, {"A_i", d}};
  ComplexVector v = ComplexVector::Zero(dims.total_dim());
  const auto at = [d](long b_o, long b_i, long a_o, long a_i) {
    return ((b_o * (2 * d) + b_i) * d + a_o) * d + a_i;
  };
  for (int s1 = 0; s1 < d; ++s1)
    for (int s2 = 0; s2 < d; ++s2) {
      v(at(s1 * 2 + 0, s2 * 2 + 0, s1, s2)) += 1.0;  // forward branch |00⟩
      v(at(s2 * 2 + 1, s1 * 2 + 1, s1, s2)) += 1.0;  // flipped branch |11⟩
    }
  return SuperChoi{ComplexMatrix(v * v.adjoint()), dims};
}

ChoiOperator contract_supermap(const SuperChoi& s, const ChoiOperator& n) {
  const SystemDims slot({{"A_o", n.d_out()}, {"A_i", n.d_in()}});
  if (s.dims.dim_of("A_o") != n.d_out() || s.dims.dim_of("A_i") != n.d_in())
    throw std::invalid_argument("contract_supermap: channel does not fit the A slot");
  const ComplexMatrix lifted = embed(n.matrix, slot, s.dims);
  const ComplexMatrix traced =
      partial_trace(ComplexMatrix(lifted.transpose()) * s.matrix, s.dims, {"A_i", "A_o"});
  const ComplexMatrix ordered =
      permute_systems(traced, s.dims.erased({"A_i", "A_o"}), {"B_o", "B_i"});
  return ChoiOperator(ordered, s.dims.dim_of("B_o"), s.dims.dim_of("B_i"));
}

SupermapNormalizationReport check_supermap_normalization(const SuperChoi& s) {
  for (const char* l : {"A_i", "A_o", "B_i", "B_o"}) s.dims.index_of(l);
  const int d = s.dims.dim_of("A_i");
  if (d != s.dims.dim_of("A_o"))
    throw std::invalid_argument(
        "check_supermap_normalization: A_i and A_o must have equal dimension");

  SupermapNormalizationReport report;

  const ComplexMatrix to_b_i = partial_trace(s.matrix, s.dims, {"A_i", "A_o", "B_o"});
  report.unit_output_residual =
      (to_b_i / double(d) - identity(s.dims.dim_of("B_i"))).norm();

  const SystemDims rest = s.dims.erased({"B_o"});
  const ComplexMatrix lhs = partial_trace(s.matrix, s.dims, {"B_o"});
  const ComplexMatrix m_ai =
      partial_trace(s.matrix, s.dims, {"A_i", "B_o"});
  const ComplexMatrix m_ao =
      partial_trace(s.matrix, s.dims, {"A_o", "B_o"});
  const ComplexMatrix m_both =
      partial_trace(s.matrix, s.dims, {"A_i", "A_o", "B_o"});
  const ComplexMatrix rhs =
      embed(m_ai, s.dims.erased({"A_i", "B_o"}), rest) / double(d) +
      embed(m_ao, s.dims.erased({"A_o", "B_o"}), rest) / double(d) -
      embed(m_both, s.dims.erased({"A_i", "A_o", "B_o"}), rest) / double(d * d);
  report.structure_residual = (lhs - rhs).norm();
  return report;
}

SupermapNormalizationReport check_supermap_normalization_swapped(const SuperChoi& s) {
  return check_supermap_normalization(SuperChoi{s.matrix, s.dims.relabeled("A_i", "A_o")});
}

Channel supermap_s1(const Channel& a1, const Channel& a2, double tol) {
  require_bipartite_pair(a1, a2, tol, "supermap_s1");
  return controlled_pair_supermap(
      a1, a2,
      [](const ComplexMatrix& m, const ComplexMatrix& n) { return ComplexMatrix(m * n.transpose()); },
      [](const ComplexMatrix& m, const ComplexMatrix& n) { return ComplexMatrix(m.transpose() * n); });
}

Channel supermap_s2(const Channel& a1, const Channel& a2, double tol) {
  require_bipartite_pair(a1, a2, tol, "supermap_s2");
  return controlled_pair_supermap(
      a1, a2,
      [](const ComplexMatrix& m, const ComplexMatrix& n) { return ComplexMatrix(m * n); },
      [](const ComplexMatrix& m, const ComplexMatrix& n) { return ComplexMatrix(n * m); });
}

Channel supermap_s3(const Channel& a1, const Channel& a2, double tol) {
  require_bipartite_pair(a1, a2, tol, "supermap_s3");
  return controlled_pair_supermap(
      a1, a2,
      [](const ComplexMatrix& m, const ComplexMatrix& n) { return ComplexMatrix(m * n); },
      [](const ComplexMatrix& m, const ComplexMatrix& n) {
        return ComplexMatrix(n.transpose() * m.transpose());
      });
}

}  // namespace chronoflip
