#include <chronoflip/haar.hpp>
#include <chronoflip/inversion.hpp>
#include <chronoflip/io.hpp>

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace chronoflip;
using nlohmann::json;

namespace {

const std::string kCli = CHRONOFLIP_CLI_PATH;

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run(const std::string& args) {
  const std::string out_path = "cli_test_stdout.txt";
  const int status =
      std::system((kCli + " " + args + " > " + out_path + " 2>&1").c_str());
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::remove(out_path.c_str());
  return CommandResult{WEXITSTATUS(status), buffer.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const json& content) : path(name) {
    save_json_file(path, content);
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check reports predicates") {
  Rng rng(91);
  TempFile unitary("cli_unitary.json",
                   channel_to_json(unitary_channel(random_unitary(2, rng))));
  const CommandResult ok = run("check --in " + unitary.path + " --json");
  CHECK(ok.exit_code == 0);
  const json report = json::parse(ok.output.substr(ok.output.find('{')));
  CHECK(report.at("bistochastic").get<bool>());
  CHECK(report.at("cptp").get<bool>());
  CHECK(report.at("seed").get<int>() == 42);

  ComplexMatrix ket0 = ComplexMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  TempFile constant("cli_constant.json", channel_to_json(constant_channel(ket0)));
  const CommandResult not_bisto = run("check --in " + constant.path + " --json");
  CHECK(not_bisto.exit_code == 0);  // predicate failure is data, not an error
  const json report2 = json::parse(not_bisto.output.substr(not_bisto.output.find('{')));
  CHECK_FALSE(report2.at("bistochastic").get<bool>());
}

TEST_CASE("malformed input exits with the usage code") {
  {
    std::ofstream bad("cli_bad.json");
    bad << "{not json";
  }
  CHECK(run("check --in cli_bad.json").exit_code == 2);
  std::remove("cli_bad.json");
  CHECK(run("check --in cli_missing_file.json").exit_code == 2);
  CHECK(run("definitely-not-a-subcommand").exit_code == 2);
  CHECK(run("game").exit_code == 2);
}

TEST_CASE("invert round trips and flags the obstruction") {
  Rng rng(92);
  const Channel u = unitary_channel(random_unitary(2, rng));
  TempFile in("cli_invert_in.json", channel_to_json(u));

  const CommandResult twice =
      run("invert --kind transpose --in " + in.path + " --out cli_inverted.json");
  CHECK(twice.exit_code == 0);
  const Channel once = load_channel("cli_inverted.json");
  TempFile again_in("cli_invert_again.json", channel_to_json(once));
  CHECK(run("invert --kind transpose --in cli_invert_again.json --out cli_double.json")
            .exit_code == 0);
  CHECK(choi_distance(load_channel("cli_double.json"), u) <= 1e-12);
  std::remove("cli_inverted.json");
  std::remove("cli_double.json");

  TempFile cex("cli_counterexample.json",
               channel_to_json(counterexample_channel(3)));
  const CommandResult blocked =
      run("invert --kind transpose --general --in " + cex.path);
  CHECK(blocked.exit_code == 1);
}

TEST_CASE("flip and supermap produce channels") {
  Rng rng(93);
  TempFile a("cli_flip_a.json",
             channel_to_json(random_bistochastic_channel(2, 2, rng)));
  TempFile b("cli_flip_b.json",
             channel_to_json(random_bistochastic_channel(2, 2, rng)));

  CHECK(run("flip --in " + a.path + " --out cli_flipped.json").exit_code == 0);
  const Channel flipped = load_channel("cli_flipped.json");
  CHECK(flipped.d_in == 4);
  CHECK(is_bistochastic(flipped, 1e-8));
  std::remove("cli_flipped.json");

  CHECK(run("supermap --kind s2 --a " + a.path + " --b " + b.path +
            " --out cli_switched.json")
            .exit_code == 0);
  CHECK(is_cptp(load_channel("cli_switched.json"), 1e-8));
  std::remove("cli_switched.json");

  ComplexMatrix ket0 = ComplexMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  TempFile constant("cli_flip_bad.json", channel_to_json(constant_channel(ket0)));
  CHECK(run("flip --in " + constant.path).exit_code == 2);
}

TEST_CASE("teleport outcome table") {
  TempFile gate("cli_gate.json", matrix_to_json(pauli_x()));
  const CommandResult result =
      run("teleport --u " + gate.path + " --alpha 0.6 --beta 0.8");
  CHECK(result.exit_code == 0);
  const json table = json::parse(result.output.substr(result.output.find('{')));
  REQUIRE(table.at("outcomes").size() == 4);
  for (const auto& o : table.at("outcomes"))
    CHECK(std::abs(o.at("probability").get<double>() - 0.25) <= 1e-12);
}

TEST_CASE("teleport reports are reproducible modulo wall time") {
  const auto strip = [](std::string text) {
    json j = json::parse(text.substr(text.find('{')));
    j.erase("wall_ms");
    return j;
  };
  const CommandResult a = run("teleport --d 3 --alpha 0.8 --beta 0.6 --seed 7");
  const CommandResult b = run("teleport --d 3 --alpha 0.8 --beta 0.6 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(strip(a.output) == strip(b.output));
}

TEST_CASE("game subcommand") {
  CHECK(run("game --builtin").exit_code == 0);

  TempFile u("cli_game_u.json", matrix_to_json(pauli_y()));
  TempFile v("cli_game_v.json", matrix_to_json(identity(2)));
  const CommandResult minus = run("game --u " + u.path + " --v " + v.path + " --json");
  CHECK(minus.exit_code == 0);
  const json j = json::parse(minus.output.substr(minus.output.find('{')));
  CHECK(j.at("answer").get<std::string>() == "minus");

  const ComplexMatrix mixed = (pauli_x() + pauli_y()) / std::sqrt(2.0);
  TempFile broken_u("cli_game_m.json", matrix_to_json(mixed));
  TempFile broken_v("cli_game_i.json", matrix_to_json(identity(2)));
  CHECK(run("game --u " + broken_u.path + " --v " + broken_v.path).exit_code == 1);
}

TEST_CASE("verify subcommands") {
  CHECK(run("verify supermap-norm").exit_code == 0);
  CHECK(run("verify frame --d 2").exit_code == 0);
  const CommandResult two_copy = run("verify appendix-d --d 2 --report cli_ineq.json");
  CHECK(two_copy.exit_code == 0);
  const json report = load_json_file("cli_ineq.json");
  CHECK(report.at("min_eigenvalue").get<double>() >= -1e-9);
  std::remove("cli_ineq.json");
}

TEST_CASE("bound solve emits the optimum") {
  const CommandResult result = run("bound solve --json");
  CHECK(result.exit_code == 0);
  const json j = json::parse(result.output.substr(result.output.find('{')));
  CHECK(std::abs(j.at("objective").get<double>() - 0.112149) <= 5e-4);
  CHECK(j.at("primal_residual").get<double>() <= 1e-7);
}

TEST_CASE("reproduce-all subset") {
  const CommandResult fast =
      run("reproduce-all --only 2 --only 5 --only 9 --only 12 --json");
  CHECK(fast.exit_code == 0);
  CHECK(fast.output.find("PASS") != std::string::npos);
  CHECK(fast.output.find("FAIL") == std::string::npos);

  const json report = json::parse(fast.output.substr(fast.output.find('{')));
  CHECK(report.at("all_passed").get<bool>());
  REQUIRE(report.at("criteria").size() == 4);
  for (const auto& row : report.at("criteria")) {
    CHECK(row.contains("index"));
    CHECK(row.contains("name"));
    CHECK(row.contains("passed"));
    CHECK(row.contains("measured"));
    CHECK(row.contains("threshold"));
    CHECK(row.contains("wall_ms"));
  }
}

TEST_CASE("reproduce-all fails loudly when a criterion cannot pass") {
  // starving the solver of iterations leaves the bound criterion red
  const CommandResult starved = run("reproduce-all --only 1 --max-iter 10");
  CHECK(starved.exit_code == 1);
  CHECK(starved.output.find("FAIL") != std::string::npos);
}

}  // TEST_SUITE
