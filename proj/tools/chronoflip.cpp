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

#include <CLI11.hpp>

#include <chronoflip/flip.hpp>
#include <chronoflip/game.hpp>
#include <chronoflip/haar.hpp>
#include <chronoflip/inversion.hpp>
#include <chronoflip/io.hpp>
#include <chronoflip/reproduce.hpp>
#include <chronoflip/teleport.hpp>
#include <chronoflip/tester.hpp>
#include <chronoflip/version.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>

namespace {

using namespace chronoflip;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct JsonSink {
  CLI::Option* option = nullptr;
  std::string path;  // empty = stdout

  bool enabled() const { return option != nullptr && option->count() > 0; }

  void emit(const json& j) const {
    if (!enabled()) return;
    if (path.empty())
      std::cout << j.dump(2) << "\n";
    else
      save_json_file(path, j);
  }
};

void add_json_option(CLI::App* app, JsonSink& sink) {
  sink.option = app->add_option("--json", sink.path,
                                "machine-readable output (to stdout, or to the given file)")
                    ->expected(0, 1);
}

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("CHRONOFLIP_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return fallback;
}

json report_header(std::uint64_t seed, double tol) {
  return json{{"version", kVersion}, {"seed", seed}, {"tolerance", tol}};
}

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int run_check(const std::string& path, double tol, const JsonSink& sink,
              std::uint64_t seed) {
  const auto t0 = Clock::now();
  const Channel c = load_channel(path);
  const ChoiOperator choi = choi_of_channel(c);
  const bool cptp = is_cptp(c, tol);
  const bool bistochastic = is_bistochastic(c, tol);
  const bool in_span =
      c.d_in == c.d_out && in_bistochastic_span(choi, tol);

  ComplexMatrix unit_sum = ComplexMatrix::Zero(c.d_in, c.d_in);
  for (const auto& k : c.kraus) unit_sum += k.adjoint() * k;
  const double tp_residual = (unit_sum - identity(c.d_in)).norm();
  ComplexMatrix unital_sum = ComplexMatrix::Zero(c.d_out, c.d_out);
  for (const auto& k : c.kraus) unital_sum += k * k.adjoint();
  const double unital_residual = (unital_sum - identity(c.d_out)).norm();

  std::cout << "d_in=" << c.d_in << " d_out=" << c.d_out
            << " kraus=" << c.kraus.size() << "\n"
            << "cptp: " << (cptp ? "true" : "false")
            << " (trace-preservation residual " << tp_residual << ")\n"
            << "bistochastic: " << (bistochastic ? "true" : "false")
            << " (unitality residual " << unital_residual << ")\n"
            << "bistochastic span: " << (in_span ? "true" : "false") << "\n";

  json j = report_header(seed, tol);
  j["channel"] = {{"d_in", c.d_in}, {"d_out", c.d_out}, {"kraus_count", c.kraus.size()}};
  j["cptp"] = cptp;
  j["bistochastic"] = bistochastic;
  j["in_bistochastic_span"] = in_span;
  j["trace_preservation_residual"] = tp_residual;
  j["unitality_residual"] = unital_residual;
  j["wall_ms"] = elapsed_ms(t0);
  sink.emit(j);
  return kExitOk;  // predicate results are data, not errors
}

int run_invert(const std::string& path, const std::string& kind_name, bool general,
               const std::string& out_path, double tol, const JsonSink& sink,
               std::uint64_t seed) {
  const auto t0 = Clock::now();
  const Channel c = load_channel(path);
  const InversionKind kind =
      kind_name == "adjoint" ? InversionKind::Adjoint : InversionKind::Transpose;
  Channel inverted = general ? invert_general(c, kind, tol) : invert_channel(c, kind);

  const json out = channel_to_json(inverted);
  if (!out_path.empty())
    save_json_file(out_path, out);
  else if (!sink.enabled())
    std::cout << out.dump(2) << "\n";

  json j = report_header(seed, tol);
  j["kind"] = kind_name;
  j["general"] = general;
  j["channel"] = out;
  j["wall_ms"] = elapsed_ms(t0);
  sink.emit(j);
  return kExitOk;
}

int run_flip(const std::string& path, const std::string& out_path, double tol,
             const JsonSink& sink, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const Channel flipped = time_flip(load_channel(path), tol);
  const json out = channel_to_json(flipped);
  if (!out_path.empty())
    save_json_file(out_path, out);
  else if (!sink.enabled())
    std::cout << out.dump(2) << "\n";
  json j = report_header(seed, tol);
  j["channel"] = out;
  j["wall_ms"] = elapsed_ms(t0);
  sink.emit(j);
  return kExitOk;
}

int run_supermap(const std::string& kind, const std::string& a_path,
                 const std::string& b_path, const std::string& out_path, double tol,
                 const JsonSink& sink, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const Channel a = load_channel(a_path);
  const Channel b = load_channel(b_path);
  Channel result = kind == "s1"   ? supermap_s1(a, b, tol)
                   : kind == "s2" ? supermap_s2(a, b, tol)
                                  : supermap_s3(a, b, tol);
  const json out = channel_to_json(result);
  if (!out_path.empty())
    save_json_file(out_path, out);
  else if (!sink.enabled())
    std::cout << out.dump(2) << "\n";
  json j = report_header(seed, tol);
  j["kind"] = kind;
  j["channel"] = out;
  j["wall_ms"] = elapsed_ms(t0);
  sink.emit(j);
  return kExitOk;
}

int run_teleport(const std::string& gate_path, int d, double alpha, double beta,
                 const JsonSink& sink, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const ComplexMatrix u = gate_path.empty() ? identity(d) : load_matrix(gate_path);
  ComplexVector psi = ComplexVector::Zero(u.rows());
  psi(0) = 1.0;
  const auto outcomes = simulate_flip_circuit(u, psi, Complex(alpha), Complex(beta));

  json table = json::array();
  for (const auto& o : outcomes)
    table.push_back(json{{"outcome", o.outcome_index},
                         {"probability", o.probability},
                         {"conditional_state", vector_to_json(o.conditional_state)}});
  json j = report_header(seed, kDefaultTol);
  j["alpha"] = alpha;
  j["beta"] = beta;
  j["d"] = static_cast<int>(u.rows());
  j["outcomes"] = table;
  j["wall_ms"] = elapsed_ms(t0);
  std::cout << j.dump(2) << "\n";
  sink.emit(j);
  return kExitOk;
}

int run_game(const std::string& u_path, const std::string& v_path, bool builtin,
             double tol, const JsonSink& sink, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const auto class_name = [](PromiseClass c) {
    return c == PromiseClass::Plus ? "plus" : c == PromiseClass::Minus ? "minus" : "none";
  };

  json j = report_header(seed, tol);
  int exit_code = kExitOk;
  if (builtin) {
    const BuiltinSets sets = builtin_sets();
    ComplexVector psi = ComplexVector::Zero(2);
    psi(0) = 1.0;
    json rows = json::array();
    double worst = 0.0;
    const auto play_set = [&](const std::vector<GamePair>& pairs, PromiseClass expected) {
      for (size_t i = 0; i < pairs.size(); ++i) {
        const GameOutcome out = strategy_probabilities(pairs[i].u, pairs[i].v, psi);
        const double wrong = expected == PromiseClass::Plus ? out.p_minus : out.p_plus;
        worst = std::max(worst, wrong);
        rows.push_back(json{{"set", class_name(expected)},
                            {"index", i},
                            {"classified", class_name(classify_pair(pairs[i].u, pairs[i].v, tol))},
                            {"wrong_outcome_probability", wrong}});
        std::cout << class_name(expected) << "[" << i << "] classified="
                  << class_name(classify_pair(pairs[i].u, pairs[i].v, tol))
                  << " wrong_outcome_probability=" << wrong << "\n";
      }
    };
    play_set(sets.plus_set, PromiseClass::Plus);
    play_set(sets.minus_set, PromiseClass::Minus);
    std::cout << "worst wrong-outcome probability: " << worst << "\n";
    j["pairs"] = rows;
    j["worst_wrong_outcome_probability"] = worst;
    if (worst > 1e-12) exit_code = kExitCheckFailed;
  } else {
    const ComplexMatrix u = load_matrix(u_path);
    const ComplexMatrix v = load_matrix(v_path);
    const PromiseClass promised = classify_pair(u, v, tol);
    j["promise"] = class_name(promised);
    if (promised == PromiseClass::None) {
      std::cout << "promise: none (the pair satisfies neither relation)\n";
      j["answer"] = "none";
      exit_code = kExitCheckFailed;
    } else {
      const PromiseClass answer = play_game(u, v, tol);
      std::cout << "promise: " << class_name(promised) << "\nanswer: " << class_name(answer)
                << "\n";
      j["answer"] = class_name(answer);
      if (answer != promised) exit_code = kExitCheckFailed;
    }
  }
  j["wall_ms"] = elapsed_ms(t0);
  sink.emit(j);
  return exit_code;
}

json bound_report_json(const BoundReport& report, std::uint64_t seed, double eps) {
  json j = report_header(seed, eps);
  j["objective"] = report.objective;
  j["dual_objective"] = report.dual_objective;
  j["gap"] = report.gap;
  j["primal_residual"] = report.primal_residual;
  j["dual_residual"] = report.dual_residual;
  j["psd_violation"] = report.psd_violation;
  j["tester_constraint_violation"] = report.constraint_violation;
  j["iterations"] = report.iterations;
  j["wall_ms"] = report.wall_ms;
  j["plus_set_errors"] = report.errors.plus_errors;
  j["minus_set_errors"] = report.errors.minus_errors;
  j["worst_error"] = report.errors.worst();
  return j;
}

int run_bound(double eps, long max_iter, const JsonSink& sink, std::uint64_t seed) {
  SdpOptions opts;
  opts.eps_gap = eps;
  opts.max_iter = max_iter;
  opts.seed = seed;
  const BoundReport report = optimal_error_bound(opts);
  std::cout << "objective " << report.objective << " (dual " << report.dual_objective
            << ", gap " << report.gap << ")\n"
            << "primal residual " << report.primal_residual << ", psd violation "
            << report.psd_violation << ", iterations " << report.iterations << ", "
            << report.wall_ms << " ms\n"
            << "worst recomputed error term " << report.errors.worst() << "\n";
  sink.emit(bound_report_json(report, seed, eps));
  return report.status == SdpStatus::Converged ? kExitOk : kExitCheckFailed;
}

int run_verify_frame(int d, const JsonSink& sink, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const ComplexMatrix closed = frame_operator_closed_form(d);
  json j = report_header(seed, d == 2 ? 1e-10 : 1e-9);
  double worst = 0.0;
  if (d == 2) {
    worst = (frame_operator(2, TwirlMethod::Design) - closed).norm();
    j["design_residual"] = worst;
  }
  const double wg = (frame_operator(d, TwirlMethod::Weingarten) - closed).norm();
  worst = std::max(worst, wg);
  j["weingarten_residual"] = wg;
  j["wall_ms"] = elapsed_ms(t0);
  const double tol = d == 2 ? 1e-10 : 1e-9;
  std::cout << "frame operator residual vs closed form: " << worst << " (tolerance " << tol
            << ")\n";
  sink.emit(j);
  return worst <= tol ? kExitOk : kExitCheckFailed;
}

int run_verify_two_copy(int d, const std::string& report_path, const JsonSink& sink,
                        std::uint64_t seed) {
  const auto t0 = Clock::now();
  json j = report_header(seed, d == 2 ? 1e-9 : 1e-8);
  bool pass = false;
  if (d == 2) {
    const ControlledUseQubitBound r = two_copy_inequality_qubit();
    pass = r.min_eigenvalue >= -1e-9 && r.marginal_distance <= 1e-12;
    j["min_eigenvalue"] = r.min_eigenvalue;
    j["marginal_distance"] = r.marginal_distance;
    j["rho_plus_trace"] = r.rho_plus_trace;
    j["rho_minus_trace"] = r.rho_minus_trace;
    std::cout << "min_eig(Choi_N ⊗ I − (6/5)Ω) = " << r.min_eigenvalue
              << ", marginal distance " << r.marginal_distance << "\n";
  } else {
    const ControlledUseBound r = two_copy_inequality(d);
    pass = r.min_eigenvalue >= -1e-8;
    j["min_eigenvalue"] = r.min_eigenvalue;
    j["rho_trace"] = r.rho_trace;
    std::cout << "min_eig((6/d²)ρ ⊗ I − Ω) = " << r.min_eigenvalue << ", Tr ρ = "
              << r.rho_trace << "\n";
  }
  j["wall_ms"] = elapsed_ms(t0);
  if (!report_path.empty()) save_json_file(report_path, j);
  sink.emit(j);
  std::cout << (pass ? "inequality holds" : "inequality FAILED") << "\n";
  return pass ? kExitOk : kExitCheckFailed;
}

int run_verify_supermap_norm(int d, const JsonSink& sink, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const SuperChoi s = flip_supermap_choi(d);
  const SupermapNormalizationReport direct = check_supermap_normalization(s);
  const SupermapNormalizationReport swapped = check_supermap_normalization_swapped(s);
  const double worst =
      std::max({direct.unit_output_residual, direct.structure_residual,
                swapped.unit_output_residual, swapped.structure_residual});
  std::cout << "unit-output residual " << direct.unit_output_residual
            << ", structure residual " << direct.structure_residual << "\n"
            << "with A_i/A_o exchanged: " << swapped.unit_output_residual << ", "
            << swapped.structure_residual << "\n";
  json j = report_header(seed, 1e-12);
  j["unit_output_residual"] = direct.unit_output_residual;
  j["structure_residual"] = direct.structure_residual;
  j["swapped_unit_output_residual"] = swapped.unit_output_residual;
  j["swapped_structure_residual"] = swapped.structure_residual;
  j["wall_ms"] = elapsed_ms(t0);
  sink.emit(j);
  return worst <= 1e-12 ? kExitOk : kExitCheckFailed;
}

int run_reproduce(std::uint64_t seed, double eps, long max_iter, long trials,
                  const std::vector<int>& only, const JsonSink& sink) {
  SdpOptions opts;
  opts.eps_gap = eps;
  opts.max_iter = max_iter;
  opts.seed = seed;
  const auto results = run_criteria(only, seed, opts, trials);

  json rows = json::array();
  bool all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    std::printf("[%2d] %s  %-52s measured=%.3e threshold=%.3e  (%.0f ms)\n", r.index,
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured, r.threshold,
                r.wall_ms);
    if (!r.detail.empty()) std::printf("      %s\n", r.detail.c_str());
    rows.push_back(json{{"index", r.index},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"measured", r.measured},
                        {"threshold", r.threshold},
                        {"detail", r.detail},
                        {"wall_ms", r.wall_ms}});
  }
  std::printf("%zu/%zu criteria passed\n",
              static_cast<size_t>(std::count_if(results.begin(), results.end(),
                                                [](const auto& r) { return r.passed; })),
              results.size());
  json j = report_header(seed, eps);
  j["criteria"] = rows;
  j["all_passed"] = all_passed;
  sink.emit(j);
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum operations with indefinite time direction", "chronoflip"};
  app.set_version_flag("--version", std::string(chronoflip::kVersion));
  app.require_subcommand(1);

  std::uint64_t seed = seed_from_env_or(42);
  app.add_option("--seed", seed, "RNG seed (default 42, env CHRONOFLIP_SEED)")
      ->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "channel predicates from a JSON file");
  std::string check_in;
  double check_tol = kDefaultTol;
  JsonSink check_sink;
  check->add_option("--in", check_in, "channel JSON file")->required();
  check->add_option("--tol", check_tol, "predicate tolerance")->capture_default_str();
  add_json_option(check, check_sink);

  // invert
  auto* invert = app.add_subcommand("invert", "input-output inversion of a channel");
  std::string invert_in, invert_out, invert_kind = "transpose";
  bool invert_general_flag = false;
  double invert_tol = kDefaultTol;
  JsonSink invert_sink;
  invert->add_option("--kind", invert_kind, "transpose|adjoint")
      ->check(CLI::IsMember({"transpose", "adjoint"}))
      ->capture_default_str();
  invert->add_option("--in", invert_in, "channel JSON file")->required();
  invert->add_option("--out", invert_out, "write the inverted channel here");
  invert->add_flag("--general", invert_general_flag,
                   "project onto the bistochastic span first");
  invert->add_option("--tol", invert_tol)->capture_default_str();
  add_json_option(invert, invert_sink);

  // flip
  auto* flip = app.add_subcommand("flip", "quantum time flip of a bistochastic channel");
  std::string flip_in, flip_out;
  double flip_tol = kDefaultTol;
  JsonSink flip_sink;
  flip->add_option("--in", flip_in, "channel JSON file")->required();
  flip->add_option("--out", flip_out, "write the flipped channel here");
  flip->add_option("--tol", flip_tol)->capture_default_str();
  add_json_option(flip, flip_sink);

  // supermap
  auto* supermap = app.add_subcommand("supermap", "bipartite supermaps s1|s2|s3");
  std::string sm_kind, sm_a, sm_b, sm_out;
  double sm_tol = kDefaultTol;
  JsonSink sm_sink;
  supermap->add_option("--kind", sm_kind)->check(CLI::IsMember({"s1", "s2", "s3"}))->required();
  supermap->add_option("--a", sm_a, "first channel JSON file")->required();
  supermap->add_option("--b", sm_b, "second channel JSON file")->required();
  supermap->add_option("--out", sm_out, "write the combined channel here");
  supermap->add_option("--tol", sm_tol)->capture_default_str();
  add_json_option(supermap, sm_sink);

  // teleport
  auto* teleport = app.add_subcommand("teleport", "teleportation realisation outcome table");
  std::string tp_gate;
  int tp_d = 2;
  double tp_alpha = 1.0 / std::sqrt(2.0), tp_beta = 1.0 / std::sqrt(2.0);
  JsonSink tp_sink;
  teleport->add_option("--u", tp_gate, "gate JSON file (default: identity)");
  teleport->add_option("--d", tp_d, "dimension when no gate file is given")
      ->capture_default_str();
  teleport->add_option("--alpha", tp_alpha, "control amplitude of |0⟩")->capture_default_str();
  teleport->add_option("--beta", tp_beta, "control amplitude of |1⟩")->capture_default_str();
  add_json_option(teleport, tp_sink);

  // game
  auto* game = app.add_subcommand("game", "two-box discrimination game");
  std::string game_u, game_v;
  bool game_builtin = false;
  double game_tol = kDefaultTol;
  JsonSink game_sink;
  game->add_option("--u", game_u, "first gate JSON file");
  game->add_option("--v", game_v, "second gate JSON file");
  game->add_flag("--builtin", game_builtin, "run the 21 built-in pairs");
  game->add_option("--tol", game_tol)->capture_default_str();
  add_json_option(game, game_sink);

  // bound solve
  auto* bound = app.add_subcommand("bound", "worst-case error bound programs");
  auto* bound_solve = bound->add_subcommand("solve", "solve the minimax tester program");
  double bound_eps = 1e-5;
  long bound_max_iter = 200000;
  JsonSink bound_sink;
  bound_solve->add_option("--eps", bound_eps, "target relative gap")->capture_default_str();
  bound_solve->add_option("--max-iter", bound_max_iter)->capture_default_str();
  add_json_option(bound_solve, bound_sink);
  bound->require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "numerical verification suites");
  verify->require_subcommand(1);
  auto* vframe = verify->add_subcommand("frame", "frame operator vs closed form");
  int vframe_d = 2;
  JsonSink vframe_sink;
  vframe->add_option("--d", vframe_d)->check(CLI::Range(2, 4))->capture_default_str();
  add_json_option(vframe, vframe_sink);

  auto* vtwocopy =
      verify->add_subcommand("appendix-d", "two-copy fidelity operator inequalities");
  int vtc_d = 2;
  std::string vtc_report;
  JsonSink vtc_sink;
  vtwocopy->add_option("--d", vtc_d)->check(CLI::IsMember({2, 3}))->capture_default_str();
  vtwocopy->add_option("--report", vtc_report, "write the JSON report here");
  add_json_option(vtwocopy, vtc_sink);

  auto* vnorm = verify->add_subcommand("supermap-norm",
                                       "flip supermap normalization conditions");
  int vnorm_d = 2;
  JsonSink vnorm_sink;
  vnorm->add_option("--d", vnorm_d)->check(CLI::Range(2, 4))->capture_default_str();
  add_json_option(vnorm, vnorm_sink);

  // reproduce-all
  auto* reproduce = app.add_subcommand("reproduce-all", "run every reproduction criterion");
  double rep_eps = 1e-5;
  long rep_max_iter = 200000;
  long rep_trials = 0;
  std::vector<int> rep_only;
  JsonSink rep_sink;
  reproduce->add_option("--eps", rep_eps, "SDP target gap")->capture_default_str();
  reproduce->add_option("--max-iter", rep_max_iter)->capture_default_str();
  reproduce->add_option("--trials", rep_trials,
                        "raise random instances per criterion (floor: pinned defaults)");
  reproduce->add_option("--only", rep_only, "subset of criterion indices");
  add_json_option(reproduce, rep_sink);

  // allow global options (--seed) after a subcommand name
  const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
    for (CLI::App* sub : node->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(check_in, check_tol, check_sink, seed);
    if (invert->parsed())
      return run_invert(invert_in, invert_kind, invert_general_flag, invert_out,
                        invert_tol, invert_sink, seed);
    if (flip->parsed()) return run_flip(flip_in, flip_out, flip_tol, flip_sink, seed);
    if (supermap->parsed())
      return run_supermap(sm_kind, sm_a, sm_b, sm_out, sm_tol, sm_sink, seed);
    if (teleport->parsed())
      return run_teleport(tp_gate, tp_d, tp_alpha, tp_beta, tp_sink, seed);
    if (game->parsed()) {
      if (!game_builtin && (game_u.empty() || game_v.empty())) {
        std::cerr << "game: provide --u and --v, or --builtin\n";
        return kExitUsage;
      }
      return run_game(game_u, game_v, game_builtin, game_tol, game_sink, seed);
    }
    if (bound_solve->parsed()) return run_bound(bound_eps, bound_max_iter, bound_sink, seed);
    if (vframe->parsed()) return run_verify_frame(vframe_d, vframe_sink, seed);
    if (vtwocopy->parsed()) return run_verify_two_copy(vtc_d, vtc_report, vtc_sink, seed);
    if (vnorm->parsed()) return run_verify_supermap_norm(vnorm_d, vnorm_sink, seed);
    if (reproduce->parsed())
      return run_reproduce(seed, rep_eps, rep_max_iter, rep_trials, rep_only, rep_sink);
  } catch (const NonPositiveProjectionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
