#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "toporing/io.hpp"

using toporing::io::Json;
namespace fs = std::filesystem;

namespace {

const fs::path kData = TOPORING_DATA_DIR;

fs::path scratch() {
  const fs::path p = fs::temp_directory_path() / ("toporing_cli_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args) {
  const std::string cmd = std::string(TOPORING_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Runs a subcommand twice and returns the report, checking that both runs agree byte for byte.
Json report(const std::string& args) {
  const fs::path a = scratch() / "a.json", b = scratch() / "b.json";
  EXPECT_EQ(run(args + " --out " + a.string()), 0) << args;
  EXPECT_EQ(run(args + " --out " + b.string()), 0) << args;
  const std::string ta = slurp(a);
  EXPECT_EQ(ta, slurp(b)) << args;
  return toporing::io::parse_text(ta);
}

std::string data(const std::string& rel) { return (kData / rel).string(); }

}  // namespace

TEST(Cli, WedderburnOfGroupAlgebra) {
  const Json j = report("wedderburn " + data("algebras/f2_c3.json"));
  const Json expected = Json::parse(R"([{"matrix_size": 1, "residue_order": 2}, {"matrix_size": 1, "residue_order": 4}])");
  EXPECT_EQ(j["factors"], expected);
  EXPECT_TRUE(j["decomposition"]["verified"].get<bool>());
  EXPECT_EQ(j["seed"], 1);
}

TEST(Cli, ClassifyPerfectAdicTower) {
  const Json j = report("classify-perfect " + data("towers/adic_f2_d5.json") + " --depth 4 --seed 9");
  EXPECT_EQ(j["report"]["verdict"], "PERFECT");
  EXPECT_EQ(j["report"]["radical"]["radical"].size(), 5u);
  EXPECT_EQ(j["report"]["semisimple_quotient"]["factors"], Json::parse(R"([{"matrix_size": 1, "residue_order": 2}])"));
  EXPECT_EQ(j["seed"], 9);
}

TEST(Cli, EverySubcommandIsDeterministic) {
  report("radical " + data("algebras/t3_f2.json"));
  report("decompose-module " + data("modules/f2_x2_regular_plus_simple.json"));
  report("classify-tower " + data("towers/matrix_adic_f2_k2_d3.json"));
  report("lift-idempotents " + data("lifting/adic_f3_one_plus_x.json"));
  report("lift-idempotents " + data("lifting/matrix_adic_f2_family.json"));
  const Json m = report("matmul " + data("windowed/shift_f2_adic2.json") + " " + data("windowed/shift_transpose_f2_adic2.json"));
  EXPECT_EQ(m["rows_determined"], 6);
  report("transport " + data("modules/t2_f2_regular.json") + " --y 3");
  const Json c = report("contratensor " + data("modules/mat2_f2_simple.json") + " --y 2");
  EXPECT_TRUE(c["result"]["verified"].get<bool>());
  const Json b = report("bass-flat " + data("bass/f2_x2_by_x.json"));
  EXPECT_EQ(b["result"]["stabilization"], 2);
  report("bass-flat " + data("bass/t3_f2_sampled.json") + " --seed 4");
  const Json s = report("split-limit " + data("systems/uniserial_f2_6.json") + " --depth 6");
  EXPECT_EQ(s["result"]["verdict"], "NOT_SPLIT");
  EXPECT_EQ(report("split-limit " + data("systems/f2_c3_idempotent.json"))["result"]["verdict"], "SPLIT");
  report("coperfect " + data("modules/t2_f2_regular.json"));
  const Json br = report("bridge " + data("families/uniserial_f2_6.json"));
  EXPECT_TRUE(br["result"]["consistent"].get<bool>());
  EXPECT_TRUE(report("bridge " + data("modules/mat2_f2_simple_squared.json"))["result"]["consistent"].get<bool>());
}

TEST(Cli, VerifyPassesWithNonzeroCounts) {
  const Json j = report("verify");
  ASSERT_EQ(j["suites"].size(), 10u);
  for (const Json& s : j["suites"]) {
    EXPECT_TRUE(s["passed"].get<bool>()) << s["criterion"];
    EXPECT_GT(s["instances"].get<std::size_t>(), 0u) << s["criterion"];
  }
}

TEST(Cli, ExitCodes) {
  const fs::path dir = scratch();
  toporing::io::write_file(dir / "broken.json", "{\"format\": \"toporing.algebra\", ");
  toporing::io::write_file(dir / "nonunital.json",
                           R"({"format": "toporing.algebra", "field": {"p": 2}, "dim": 1, "constants": [], "unit": [1]})");
  toporing::io::write_file(dir / "missing.json", R"({"format": "toporing.algebra", "field": {"p": 2}})");
  EXPECT_EQ(run("radical " + (dir / "broken.json").string()), 2);
  EXPECT_EQ(run("radical " + (dir / "missing.json").string()), 2);
  EXPECT_EQ(run("radical " + data("algebras/f2.json") + " --bogus"), 2);
  EXPECT_EQ(run("radical " + data("algebras/f2.json") + " --depth 0"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("radical " + (dir / "nonunital.json").string()), 3);
  EXPECT_EQ(run("transport " + data("modules/t2_f2_regular.json") + " --contra"), 3);
  EXPECT_EQ(run("radical " + data("algebras/f2.json")), 0);
}

TEST(Cli, BundledFilesAreCanonical) {
  for (const char* sub : {"algebras", "towers", "families", "systems", "windowed"}) {
    for (const auto& e : fs::directory_iterator(kData / sub)) {
      const std::string text = slurp(e.path());
      const Json j = toporing::io::parse_text(text);
      EXPECT_EQ(toporing::io::canonical(j), text) << e.path();
      if (std::string(sub) == "algebras") {
        EXPECT_EQ(toporing::io::canonical(toporing::io::to_json(toporing::io::load_algebra(e.path()))), text) << e.path();
      }
      if (std::string(sub) == "towers" && !j.contains("builtin")) {
        EXPECT_EQ(toporing::io::canonical(toporing::io::to_json(toporing::io::load_tower(e.path()))), text) << e.path();
      }
    }
  }
}

TEST(Cli, CorpusMatchesGenerator) {
  const fs::path out = scratch() / "corpus";
  fs::remove_all(out);
  const std::string cmd = std::string(TOPORING_MAKE_CORPUS) + " " + out.string() + " >/dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::size_t files = 0;
  for (const auto& e : fs::recursive_directory_iterator(out)) {
    if (!e.is_regular_file()) continue;
    ++files;
    const fs::path rel = fs::relative(e.path(), out);
    EXPECT_EQ(slurp(e.path()), slurp(kData / rel)) << rel;
  }
  EXPECT_GT(files, 30u);
}
