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

#include "chronoflip/reproduce.hpp"

#include "chronoflip/flip.hpp"
#include "chronoflip/game.hpp"
#include "chronoflip/haar.hpp"
#include "chronoflip/inversion.hpp"
#include "chronoflip/teleport.hpp"
#include "chronoflip/tester.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace chronoflip {

namespace {

constexpr double kPaperBound = 0.112149;

struct Check {
  double measured = 0.0;
  std::string detail;
};

CriterionResult timed(int index, const std::string& name, double threshold,
                      const std::function<Check()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  result.index = index;
  result.name = name;
  result.threshold = threshold;
  try {
    const Check check = body();
    result.measured = check.measured;
    result.detail = check.detail;
    result.passed = check.measured <= threshold;
  } catch (const std::exception& e) {
    result.measured = std::numeric_limits<double>::infinity();
    result.detail = std::string("exception: ") + e.what();
    result.passed = false;
  }
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// 1. minimax SDP reproduces the 0.112149 worst-case error bound
Check sdp_bound(const SdpOptions& options) {
  const BoundReport report = optimal_error_bound(options);
  Check check;
  check.measured = std::abs(report.objective - kPaperBound);
  if (report.primal_residual > 1e-7)
    check.measured = std::max(check.measured, 1.0 + report.primal_residual);
  check.detail = "objective=" + fmt(report.objective) +
                 " gap=" + fmt(report.gap) +
                 " primal_residual=" + fmt(report.primal_residual) +
                 " iterations=" + std::to_string(report.iterations);
  return check;
}

// 2. every built-in pair is identified with certainty
Check perfect_game() {
  const BuiltinSets sets = builtin_sets();
  ComplexVector psi = ComplexVector::Zero(2);
  psi(0) = 1.0;
  double worst = 0.0;
  for (const auto& pair : sets.plus_set)
    worst = std::max(worst, strategy_probabilities(pair.u, pair.v, psi).p_minus);
  for (const auto& pair : sets.minus_set)
    worst = std::max(worst, strategy_probabilities(pair.u, pair.v, psi).p_plus);
  return Check{worst, "pairs=21 worst_wrong_outcome=" + fmt(worst)};
}

// 3. teleportation realisation heralds the flip with probability 1/d²
Check teleport_realisation(std::uint64_t seed, long extra_trials) {
  Rng rng(seed);
  double worst_prob_dev = 0.0;
  double worst_choi = 0.0;
  for (const auto& [d, trials] : std::vector<std::pair<int, long>>{
           {2, std::max(50L, extra_trials)}, {3, std::max(20L, extra_trials)}}) {
    for (long t = 0; t < trials; ++t) {
      const ComplexMatrix u = random_unitary(d, rng);
      const ComplexVector psi = random_state(d, rng);
      const auto outcomes = simulate_flip_circuit(u, psi, Complex(0.6), Complex(0.8));
      worst_prob_dev = std::max(
          worst_prob_dev, std::abs(outcomes.front().probability - 1.0 / (d * d)));
      worst_choi = std::max(
          worst_choi, choi_distance(postselected_channel(u), time_flip(unitary_channel(u))));
    }
  }
  const double measured = std::max(worst_prob_dev / 1e-12, worst_choi / 1e-10);
  return Check{measured, "max_prob_dev=" + fmt(worst_prob_dev) +
                             " max_choi_dist=" + fmt(worst_choi) + " (scaled to 1)"};
}

// 4. projection theorems: idempotence, decomposition, constant-channel inversion
Check projection_suite(std::uint64_t seed, long extra_trials) {
  Rng rng(seed);
  double worst = 0.0;
  for (int d : {2, 3}) {
    for (long t = 0; t < std::max(50L, extra_trials); ++t) {
      const Channel c = random_cptp_channel(d, 1 + static_cast<int>(rng() % 4), rng);
      const ChoiOperator j = choi_of_channel(c);
      const ChoiOperator pi = project_bistochastic(j);
      worst = std::max(worst,
                       (project_bistochastic(pi).matrix - pi.matrix).norm());
      const ChannelDecomposition dec = decompose_channel(c, 1e-7);
      const ComplexMatrix reconstructed = dec.bistochastic_part.matrix +
                                          choi_of_channel(dec.k1).matrix -
                                          choi_of_channel(dec.k2).matrix;
      worst = std::max(worst, (reconstructed - j.matrix).norm());
    }
    const ComplexMatrix rho0 = random_density(d, rng);
    const Channel inverted = invert_general(constant_channel(rho0, 1e-9),
                                            InversionKind::Transpose, 1e-9);
    worst = std::max(worst, choi_distance(inverted, depolarizing(d)));
  }
  return Check{worst, "max_residual=" + fmt(worst)};
}

// 5. the d=3 classical counterexample has a non-positive projection
Check counterexample_d3() {
  const Channel c = counterexample_channel(3);
  const ChoiOperator pi = project_bistochastic(choi_of_channel(c));
  ComplexMatrix basis_state = ComplexMatrix::Zero(3, 3);
  basis_state(0, 0) = 1.0;
  const ComplexMatrix image = apply_choi(pi, basis_state);
  const double value = image(0, 0).real();
  const double deviation = std::abs(value - (-1.0 / 6.0));

  bool raised = false;
  try {
    invert_general(c, InversionKind::Transpose);
  } catch (const NonPositiveProjectionError&) {
    raised = true;
  }
  return Check{raised ? deviation : 1.0,
               "projection_value=" + fmt(value) + " error_raised=" + (raised ? "yes" : "no")};
}

// 6. the qubit projection preserves complete positivity
Check qubit_positivity(std::uint64_t seed, long extra_trials) {
  Rng rng(seed);
  double worst_neg = 0.0;
  double worst_closed_form = 0.0;
  for (long t = 0; t < std::max(1000L, extra_trials); ++t) {
    const ChoiOperator j = random_rank_one_cp_choi(2, rng);
    const ChoiOperator pi = project_bistochastic(j);
    worst_neg = std::max(worst_neg, -min_eig(pi.matrix));

    ComplexVector psi(4);
    const HermitianEig eig = eig_hermitian(j.matrix);
    psi = eig.vectors.col(0) * std::sqrt(eig.values(0));
    worst_closed_form =
        std::max(worst_closed_form, (qubit_projection_closed_form(psi) - pi.matrix).norm());
  }
  const double measured = std::max(worst_neg, worst_closed_form);
  return Check{measured, "max_negative_eig=" + fmt(worst_neg) +
                             " closed_form_residual=" + fmt(worst_closed_form)};
}

// 7. frame operator: design route, closed form, Weingarten route
Check frame_operator_check() {
  const ComplexMatrix design = frame_operator(2, TwirlMethod::Design);
  const ComplexMatrix closed2 = frame_operator_closed_form(2);
  const double design_residual = (design - closed2).norm();

  const HermitianEig eig = eig_hermitian(closed2);
  double spectrum_residual = 0.0;
  for (int i = 0; i < 16; ++i) {
    const double expected = i == 0 ? 0.25 : (i < 10 ? 1.0 / 12.0 : 0.0);
    spectrum_residual = std::max(spectrum_residual, std::abs(eig.values(i) - expected));
  }

  const double weingarten_residual =
      (frame_operator(3, TwirlMethod::Weingarten) - frame_operator_closed_form(3)).norm();
  const double measured = std::max({design_residual / 1e-10, spectrum_residual / 1e-10,
                                    weingarten_residual / 1e-9});
  return Check{measured, "design_residual=" + fmt(design_residual) +
                             " spectrum_residual=" + fmt(spectrum_residual) +
                             " weingarten_residual_d3=" + fmt(weingarten_residual) +
                             " (scaled to 1)"};
}

// 8. bistochastic channels reconstructed from the unitary-span coefficients
Check unitary_span_reconstruction(std::uint64_t seed, long extra_trials) {
  Rng rng(seed);
  const UnitaryDesign clifford = single_qubit_clifford_group();
  double worst = 0.0;
  for (long t = 0; t < std::max(20L, extra_trials); ++t) {
    const Channel b = random_bistochastic_channel(2, 3, rng);
    const ComplexMatrix jb = choi_of_channel(b).matrix;
    ComplexMatrix reconstructed = ComplexMatrix::Zero(4, 4);
    for (const auto& u : clifford.elements) {
      const ComplexVector uket = double_ket(u);
      reconstructed += unitary_decomposition_coefficient(b, u) * (uket * uket.adjoint());
    }
    reconstructed /= double(clifford.elements.size());
    worst = std::max(worst, (reconstructed - jb).norm());
  }
  return Check{worst, "max_choi_distance=" + fmt(worst)};
}

// 9. the flip supermap Choi operator satisfies the normalization conditions
Check supermap_normalization() {
  const SuperChoi s = flip_supermap_choi(2);
  const SupermapNormalizationReport direct = check_supermap_normalization(s);
  const SupermapNormalizationReport swapped = check_supermap_normalization_swapped(s);
  const double measured =
      std::max({direct.unit_output_residual, direct.structure_residual,
                swapped.unit_output_residual, swapped.structure_residual});
  return Check{measured, "direct=(" + fmt(direct.unit_output_residual) + ", " +
                             fmt(direct.structure_residual) + ") swapped=(" +
                             fmt(swapped.unit_output_residual) + ", " +
                             fmt(swapped.structure_residual) + ")"};
}

// 10. operator inequalities bounding two same-direction uses
Check two_copy_inequalities() {
  const ControlledUseQubitBound qubit = two_copy_inequality_qubit();
  const ControlledUseBound qutrit = two_copy_inequality(3);
  const double measured = std::max(
      {-qubit.min_eigenvalue / 1e-9, -qutrit.min_eigenvalue / 1e-8,
       qubit.marginal_distance / 1e-12, std::abs(qutrit.rho_trace - 1.0) / 1e-10});
  return Check{measured, "qubit_min_eig=" + fmt(qubit.min_eigenvalue) +
                             " d3_min_eig=" + fmt(qutrit.min_eigenvalue) +
                             " marginal_dist=" + fmt(qubit.marginal_distance) +
                             " (scaled to 1)"};
}

// 11. inversion axioms and Kraus-representation independence
Check inversion_axioms(std::uint64_t seed, long extra_trials) {
  Rng rng(seed);
  double worst = 0.0;
  for (int d : {2, 3}) {
    for (const InversionKind kind : {InversionKind::Transpose, InversionKind::Adjoint}) {
      for (long t = 0; t < std::max(10L, extra_trials); ++t) {
        const Channel c = random_bistochastic_channel(d, 2, rng);
        const Channel e = random_bistochastic_channel(d, 3, rng);
        worst = std::max(worst, choi_distance(invert_channel(compose(e, c), kind),
                                              compose(invert_channel(c, kind),
                                                      invert_channel(e, kind))));
        worst = std::max(worst,
                         choi_distance(invert_channel(invert_channel(c, kind), kind), c));

        // mixture compatibility at the Choi level
        std::vector<ComplexMatrix> mixed;
        const double p = 0.3;
        for (const auto& k : c.kraus) mixed.push_back(std::sqrt(p) * k);
        for (const auto& k : e.kraus) mixed.push_back(std::sqrt(1 - p) * k);
        const Channel mixture(mixed, d, d);
        const ComplexMatrix lhs =
            choi_of_channel(invert_channel(mixture, kind)).matrix;
        const ComplexMatrix rhs =
            p * choi_of_channel(invert_channel(c, kind)).matrix +
            (1 - p) * choi_of_channel(invert_channel(e, kind)).matrix;
        worst = std::max(worst, (lhs - rhs).norm());
      }
      worst = std::max(worst, choi_distance(invert_channel(identity_channel(d), kind),
                                            identity_channel(d)));
    }

    // Kraus-representation independence of the time flip
    for (long t = 0; t < std::max(10L, extra_trials); ++t) {
      const Channel c = random_bistochastic_channel(d, 3, rng);
      const Channel remixed = remix_kraus(c, random_unitary(static_cast<int>(c.kraus.size()), rng));
      worst = std::max(worst, choi_distance(time_flip(c), time_flip(remixed)));
    }
  }
  return Check{worst, "max_residual=" + fmt(worst)};
}

// 12. the qubit adjoint extension flips double kets
Check g_extension(std::uint64_t seed, long extra_trials) {
  Rng rng(seed);
  const ComplexMatrix g = qubit_adjoint_extension_G();
  double worst = 0.0;
  for (long t = 0; t < std::max(100L, extra_trials); ++t) {
    const ComplexMatrix u = random_special_unitary(2, rng);
    worst = std::max(
        worst, (g * double_ket(u) + double_ket(ComplexMatrix(u.adjoint()))).norm());
  }
  return Check{worst, "max_residual=" + fmt(worst)};
}

}  // namespace

std::vector<CriterionResult> run_criteria(const std::vector<int>& indices,
                                          std::uint64_t seed,
                                          const SdpOptions& sdp_options,
                                          long extra_trials) {
  const auto wanted = [&indices](int i) {
    return indices.empty() || std::find(indices.begin(), indices.end(), i) != indices.end();
  };

  std::vector<CriterionResult> results;
  const auto run = [&](int i, const std::string& name, double threshold,
                       const std::function<Check()>& body) {
    if (wanted(i)) results.push_back(timed(i, name, threshold, body));
  };

  run(1, "minimax error bound 0.112149", 5e-4,
      [&] { return sdp_bound(sdp_options); });
  run(2, "perfect discrimination of built-in pairs", 1e-12, [] { return perfect_game(); });
  run(3, "teleportation realisation (prob and Choi, scaled)", 1.0,
      [&] { return teleport_realisation(seed, extra_trials); });
  run(4, "projection idempotence and channel decomposition", 1e-12,
      [&] { return projection_suite(seed, extra_trials); });
  run(5, "d=3 counterexample projection value -1/6", 1e-12,
      [] { return counterexample_d3(); });
  run(6, "d=2 projection preserves complete positivity", 1e-12,
      [&] { return qubit_positivity(seed, extra_trials); });
  run(7, "frame operator closed form (scaled)", 1.0, [] { return frame_operator_check(); });
  run(8, "unitary-span reconstruction via Clifford design", 1e-10,
      [&] { return unitary_span_reconstruction(seed, extra_trials); });
  run(9, "flip supermap normalization conditions", 1e-12,
      [] { return supermap_normalization(); });
  run(10, "two-copy operator inequalities (scaled)", 1.0,
      [] { return two_copy_inequalities(); });
  run(11, "inversion axioms and representation independence", 1e-12,
      [&] { return inversion_axioms(seed, extra_trials); });
  run(12, "adjoint extension G on random SU(2)", 1e-12,
      [&] { return g_extension(seed, extra_trials); });
  return results;
}

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed,
                                              const SdpOptions& sdp_options,
                                              long extra_trials) {
  return run_criteria({}, seed, sdp_options, extra_trials);
}

}  // namespace chronoflip
