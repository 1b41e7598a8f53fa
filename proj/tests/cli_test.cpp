#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cutscope_app.hpp"

using namespace cutscope;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "cutscope");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(CUTSCOPE_SAMPLE_GRAPHS) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, GensCountAndList) {
  const CliRun c4 = run({"gens", sample("c4.json"), "--count-only"});
  EXPECT_EQ(c4.code, 0);
  EXPECT_EQ(c4.out, "8\n");
  const CliRun k2 = run({"gens", "--graph", sample("k2.json")});
  EXPECT_EQ(k2.code, 0);
  EXPECT_EQ(parse_json_text(k2.out)["gens"], Json({"s1", "t1"}));
  EXPECT_TRUE(equals(ideal_from_json(parse_json_text(run({"gens", sample("c5.json")}).out)), cut_ideal(cycle(5))));
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"gens", temp_file("cutscope_one.json", R"({"vertices": 1, "edges": []})")}).code, 3);
  EXPECT_EQ(run({"gens", temp_file("cutscope_bad.json", "{oops")}).code, 2);
  EXPECT_EQ(run({"gens", "/nonexistent/graph.json"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "gens", sample("k2.json")}).code, 2);
  EXPECT_EQ(run({"betti", sample("c4.json"), "--method", "guess"}).code, 2);
  EXPECT_EQ(run({"betti", sample("c4.json"), "--field-prime", "4"}).code, 2);
}

TEST(Cli, BettiOracleOnTriangle) {
  const CliRun r = run({"betti", sample("triangle.json")});
  ASSERT_EQ(r.code, 0);
  const BettiTable t = betti_from_json(parse_json_text(r.out));
  EXPECT_EQ(t.at(0, 3), 4u);
  EXPECT_EQ(t.at(1, 5), 6u);
  EXPECT_EQ(t.at(2, 6), 3u);
  EXPECT_EQ(t.entries().size(), 3u);
}

TEST(Cli, CycleMethods) {
  for (const char* method : {"cycle-recursion", "cycle-closed", "quotients"}) {
    const CliRun r = run({"betti", sample("c5.json"), "--method", method, "--check"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = parse_json_text(r.out);
    EXPECT_EQ(betti_from_json(j).total(0), 16u);
    EXPECT_EQ(j["check"]["agrees"], true) << method;
  }
  const CliRun printed = run({"betti", sample("c5.json"), "--method", "cycle-closed", "--base", "4,6,4", "--check"});
  EXPECT_EQ(parse_json_text(printed.out)["check"]["agrees"], false);
  EXPECT_EQ(run({"betti", sample("p3.json"), "--method", "cycle-recursion"}).code, 4);
  EXPECT_EQ(run({"betti", sample("c4.json"), "--method", "cycle-closed", "--base", "1,2"}).code, 2);
}

TEST(Cli, BudgetExhaustionExitCode) {
  EXPECT_EQ(run({"--budget", "5", "betti", sample("c4.json")}).code, 5);
  EXPECT_EQ(run({"betti", sample("c4.json"), "--budget", "5"}).code, 5);
}

TEST(Cli, OutputDoesNotDependOnThreads) {
  for (const char* cmd : {"gens", "betti", "decompose", "poincare"}) {
    const CliRun one = run({"--threads", "1", cmd, sample("bowtie.json")});
    const CliRun four = run({"--threads", "4", cmd, sample("bowtie.json")});
    EXPECT_EQ(one.out, four.out) << cmd;
  }
}

TEST(Cli, PoincareProductOverBlocks) {
  const Json j = parse_json_text(run({"poincare", sample("bowtie.json")}).out);
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(j["blocks"], 2);
  EXPECT_EQ(j["direct"], "9x^4y^12 + 36x^3y^11 + 36x^2y^10 + 24x^2y^9 + 48xy^8 + 16y^6");
}

TEST(Cli, DecomposeAndFreiman) {
  const Json d = parse_json_text(run({"decompose", sample("c4.json")}).out);
  EXPECT_EQ(d["height"], 2);
  EXPECT_EQ(d["dim"], 6);
  const Json f = parse_json_text(run({"freiman", "--graph", sample("paw.json"), "--max-power", "3"}).out);
  EXPECT_EQ(f["freiman"], true);
  const Json c = parse_json_text(run({"freiman", "--classify", "--max-vertices", "4", "--max-edges", "4"}).out);
  EXPECT_EQ(c["partial"], false);
  for (const auto& g : c["freiman"]) EXPECT_NE(g["shape"], "unlisted");
  EXPECT_EQ(run({"freiman"}).code, 2);
}

TEST(Cli, TableFormat) {
  const CliRun r = run({"--format", "table", "betti", sample("triangle.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("total:"), std::string::npos);
}

TEST(Cli, VerifySuites) {
  const CliRun gens = run({"verify", "--suite", "generators"});
  EXPECT_EQ(gens.code, 0);
  EXPECT_EQ(parse_json_text(gens.out)["summary"]["fail"], 0);

  const Json cycle_ledger = parse_json_text(run({"verify", "--suite", "cycle"}).out);
  bool found = false;
  for (const auto& r : cycle_ledger["records"])
    if (r["id"] == "cycle.beta2-base") {
      found = true;
      EXPECT_EQ(r["status"], "adjudicated");
      const std::string details = r["details"];
      EXPECT_NE(details.find("(4,6,4)"), std::string::npos);
      EXPECT_NE(details.find("(4,6,3)"), std::string::npos);
    }
  EXPECT_TRUE(found);

  EXPECT_EQ(run({"verify", "--suite", "freiman"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
}
