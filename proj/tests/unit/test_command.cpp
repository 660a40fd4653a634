#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "grot/cli/command.hpp"
#include "json.hpp"

using grot::cli::run_command;

namespace {

grot::cli::CommandOutput run(std::vector<std::string> args) {
  args.insert(args.begin(), "grot");
  return run_command(args);
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

const std::string kSigma1 = "Std(rho[0..5],rho[1..8],rho[3..6],rho[4..9])";
const std::string kSigma2 = "Std(rho[0..9],rho[1..6],rho[3..8],rho[4..5])";

}  // namespace

TEST_CASE("order") {
  const auto r = run({"order", kSigma2, kSigma1});
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "true");
  CHECK(r.out.find("certificate (4 steps):") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"--json", "order", kSigma2, kSigma1}).out);
  CHECK(j["result"] == "true");
  CHECK(j["certificate"].size() == 4);
  CHECK(j["certificate"][0] == "rho[0..5] + rho[1..8] -> rho[0..8],rho[1..5],rho[3..6],rho[4..9]");

  const auto no = run({"order", kSigma1, kSigma2});
  CHECK(no.exit_code == 0);
  CHECK(no.out == "false\n");
  CHECK(run({"order", "Std(rho'{0;5},rho'{1;3},rho'{3;3},rho'{4;1})",
             "Std(rho'{0;3},rho'{1;4},rho'{3;2},rho'{4;3})"})
            .out == "false\n");
  CHECK(run({"order", "2*" + kSigma2, kSigma1}).exit_code == 2);
}

TEST_CASE("algebra commands") {
  CHECK(run({"dual", "Std(rho[0..1])"}).out == "Std(rho[0..1]) - Std(rho[0..0],rho[1..1])\n");
  CHECK(run({"lj", "Std(rho[0..0],rho[1..3])"}).out == "0\n");
  CHECK(run({"lj", "Std(rho[0..5])"}).out == "Std(rho'{0;3})\n");
  CHECK(run({"jl", "Std(rho'{0;3})"}).out == "Std(rho[0..5])\n");
  CHECK(run({"mul", "Std(rho[0..1])", "Std(rho[2..2])"}).out == "Std(rho[0..1],rho[2..2])\n");
  CHECK(run({"comul", "Std(rho[0..0])"}).out == "Std() (x) Std(rho[0..0]) + Std(rho[0..0]) (x) Std()\n");
  CHECK(run({"decompose", "Std(rho[0..0],rho[1..1])"}).out ==
        "Irr(rho[0..1]) + Irr(rho[0..0],rho[1..1])\n");
  CHECK(run({"express", "Irr(rho[0..0],rho[1..1])"}).out == "-Std(rho[0..1]) + Std(rho[0..0],rho[1..1])\n");
  CHECK(run({"dual", "Irr(rho[0..1])"}).out == "-Irr(rho[0..0],rho[1..1])\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"order", "Std(rho[0..1])"}).exit_code == 2);

  const auto syntax = run({"dual", "Std(rho[0..1]"});
  CHECK(syntax.exit_code == 2);
  CHECK(syntax.err == "error: syntax error at position 13: expected ')'\n");
  CHECK(run({"dual", "Std(sigma[0..1])"}).exit_code == 2);
  CHECK(run({"jl", "Std(rho[0..1])"}).exit_code == 2);
  CHECK(run({"lj", "Std(rho[0..0])"}).exit_code == 2);
  CHECK(run({"decompose", "Irr(rho[0..1])"}).exit_code == 2);
  CHECK(run({"check", "nonsense"}).exit_code == 2);
  CHECK(run({"check", "weyl", "--max-degree", "0"}).exit_code == 2);
  CHECK(run({"--scenario", "/nonexistent.json", "dual", "Std(rho[0..1])"}).exit_code == 2);
}

TEST_CASE("scenario flag") {
  const std::string path = "grot_test_scenario.json";
  {
    std::ofstream f(path);
    f << R"({"d":1,"families":[{"name":"pi","p":2,"s":1}]})";
  }
  const auto r = run({"--scenario", path, "--json", "jl", "Std(pi'{0;2})"});
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"] == "Std(pi[0..1])");
  CHECK(j["scenario"]["d"] == 1);
  CHECK(run({"jl", "Std(pi'{0;2})", "--scenario", path}).out == "Std(pi[0..1])\n");
  std::remove(path.c_str());

  {
    std::ofstream f(path);
    f << R"({"d":2,"families":[{"name":"rho","p":1,"s":3}]})";
  }
  const auto bad = run({"--scenario", path, "dual", "Std(rho[0..1])"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("families[0].s") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("check and fait") {
  const auto weyl = run({"check", "weyl"});
  CHECK(weyl.exit_code == 0);
  CHECK(first_line(weyl.out) == "pass");
  CHECK(weyl.out.find("|W((2,2),(2,2))_2| = 2") != std::string::npos);

  const auto transfer = run({"check", "transfer", "--max-degree", "4"});
  CHECK(transfer.exit_code == 0);
  CHECK(transfer.out.find("FAIL") == std::string::npos);

  const auto fait = run({"--json", "fait"});
  CHECK(fait.exit_code == 0);
  CHECK(fait.out == run({"fait", "--json"}).out);
  const auto j = nlohmann::ordered_json::parse(fait.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "scenario", "inputs", "result", "certificate", "checks"});
  CHECK(j["certificate"].size() == 4);
  CHECK(j["result"] == "pass");
}

TEST_CASE("determinism") {
  const std::vector<std::string> args{"--json", "check", "order", "--seed", "7"};
  const auto a = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == run(args).out);
  CHECK(a.out != run({"--json", "check", "order", "--seed", "8"}).out);
}
