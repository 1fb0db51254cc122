#include <iostream>

#include "CLI11.hpp"
#include "suites.hpp"

int main(int argc, char** argv) {
  using namespace toporing::acceptance;
  CLI::App app{"Acceptance criteria 1-10: one PASS/FAIL line per criterion"};
  SuiteContext ctx;
  std::string data = TOPORING_DATA_DIR;
  app.add_option("--data", data, "bundled corpus directory");
  app.add_option("--seed", ctx.seed, "base seed");
  CLI11_PARSE(app, argc, argv);
  ctx.data_dir = data;
  const std::vector<SuiteOutcome> all = run_all(ctx);
  bool ok = true;
  for (const SuiteOutcome& o : all) {
    std::cout << summary_line(o) << "\n";
    ok = ok && o.passed();
  }
  return ok ? 0 : 1;
}
