#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "argonaut/cli.hpp"

using namespace argonaut;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(ARGONAUT_DATA_DIR) + "/" + name; }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// A KB file in the temp directory, removed with the object.
struct TempKb {
  explicit TempKb(const std::string& text) {
    static int counter = 0;
    path = (std::filesystem::temp_directory_path() /
            ("argonaut_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".kb"))
               .string();
    std::ofstream(path) << text;
  }
  ~TempKb() { std::filesystem::remove(path); }
  std::string path;
};

}  // namespace

TEST(Cli, EntailsMakinson) {
  CliResult r = run({"entails", data("makinson.kb"), "--query", "p", "--sem", "prf"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 5), "true\n");
  r = run({"entails", data("makinson.kb"), "--query", "p", "--sem", "prf", "--add-axiom", "p|q"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 6), "false\n");
}

TEST(Cli, EntailsResolvesRuleNames) {
  // Names sit in supports but no argument concludes one.
  CliResult r = run({"entails", data("makinson.kb"), "--query", "n(n0)", "--sem", "grd"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 6), "false\n");
  r = run({"entails", data("makinson.kb"), "--query", "n(zz)"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("unknown rule 'zz'"), std::string::npos) << r.err;
}

TEST(Cli, TwoCyclePreferredJson) {
  CliResult r = run({"extensions", data("twocycle.kb"), "--sem", "prf", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  ASSERT_TRUE(j["extensions"].contains("prf"));
  EXPECT_EQ(j["extensions"]["prf"].size(), 2u);
  r = run({"extensions", data("twocycle.kb"), "--sem", "grd", "--json"});
  j = json::parse(r.out);
  ASSERT_EQ(j["extensions"]["grd"].size(), 1u);
  EXPECT_TRUE(j["extensions"]["grd"][0].empty());
}

TEST(Cli, GraphMatchesGoldens) {
  CliResult r = run({"graph", data("makinson.kb"), "--dot", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(data("makinson.dot")));
  r = run({"graph", data("makinson.kb"), "--json", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(data("makinson.json")));
}

TEST(Cli, GraphOfSinglePremise) {
  TempKb kb("atoms p\npremise p\n");
  CliResult r = run({"graph", kb.path, "--json", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["arguments"].size(), 1u);
  EXPECT_TRUE(j["edges"].empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"entails", data("makinson.kb")}).code, kExitUsage);
  EXPECT_EQ(run({"entails", data("makinson.kb"), "--query", "p &"}).code, kExitUsage);
  EXPECT_EQ(run({"entails", data("makinson.kb"), "--query", "p", "--sem", "ideal"}).code, kExitUsage);
  EXPECT_EQ(run({"check", "--random", "seed=x", "--property", "cut"}).code, kExitUsage);
  EXPECT_EQ(run({"check", data("makinson.kb"), "--property", "cumulativity"}).code, kExitUsage);
}

TEST(Cli, KnowledgeBaseErrors) {
  CliResult r = run({"entails", "/nonexistent/kb.kb", "--query", "p"});
  EXPECT_EQ(r.code, kExitKb);
  TempKb bad("premise p & \n");
  r = run({"entails", bad.path, "--query", "p"});
  EXPECT_EQ(r.code, kExitKb);
  EXPECT_NE(r.err.find("line 1, column 12"), std::string::npos) << r.err;
  TempKb undeclared("atoms p\npremise q\n");
  EXPECT_EQ(run({"graph", undeclared.path, "--dot", "-"}).code, kExitKb);
}

TEST(Cli, CheckExitCodes) {
  TempKb lone("atoms a b\nassumption a\nsetting core=aba attack=native\n");
  CliResult pass = run({"check", lone.path, "--property", "cumulativity", "--phi", "a"});
  EXPECT_EQ(pass.code, 0) << pass.out << pass.err;
  // a is not entailed in the two-cycle, so there is nothing to check.
  CliResult skip = run({"check", data("twocycle.kb"), "--property", "cumulativity", "--phi", "a"});
  EXPECT_EQ(skip.code, 2) << skip.out << skip.err;
  CliResult fail = run({"check", data("makinson.kb"), "--property", "cumulativity", "--phi", "p | q",
                  "--sem", "prf"});
  EXPECT_EQ(fail.code, 1) << fail.out << fail.err;
  CliResult json_fail = run({"check", data("makinson.kb"), "--property", "cumulativity", "--phi",
                       "p | q", "--sem", "prf", "--json"});
  EXPECT_EQ(json::parse(json_fail.out)["verdict"], "fail");
}

TEST(Cli, CheckRandomIsReproducible) {
  std::vector<std::string> args{"check", "--random", "seed=7", "trials=5", "--property",
                                "non-interference", "--json"};
  CliResult a = run(args);
  CliResult b = run(args);
  EXPECT_EQ(a.code, 0) << a.out << a.err;
  EXPECT_EQ(a.out, b.out);
  json j = json::parse(a.out);
  EXPECT_EQ(j["seed"], 7);
  // One trial per instance and semantics; grd and prf by default.
  EXPECT_EQ(j["trials"], 10);
}

TEST(Cli, EmptyKbGraph) {
  TempKb empty("");
  CliResult r = run({"graph", empty.path, "--json", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(j["arguments"].empty());
  EXPECT_TRUE(j["edges"].empty());
}

TEST(Cli, AxiomIterationProbe) {
  TempKb cup("atoms p q\nsetting core=mcs-cup\n");
  CliResult r = run({"check", cup.path, "--property", "axiom-iteration", "--phi", "p"});
  EXPECT_EQ(r.code, 1) << r.out << r.err;
  TempKb top("atoms p q\nsetting core=cl-top\n");
  r = run({"check", top.path, "--property", "axiom-iteration", "--phi", "p"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(run({"check", "--random", "--property", "axiom-iteration"}).code, kExitUsage);
}
