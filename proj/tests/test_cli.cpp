#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "test_data.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(DTEXACT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "dtexact_cli_test";
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  f << content;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("solve prints the size and honors exit codes") {
  fs::path dir = temp_dir();
  fs::path xo = dir / "xor.csv";
  write(xo, dtexact::testdata::xor_2x2().to_csv());

  RunResult dp = run("solve " + xo.string() + " --algo dp");
  CHECK(dp.status == 0);
  CHECK(dp.out == "3\n");

  RunResult fpt = run("solve " + xo.string() + " --algo fpt --max-size 10");
  CHECK(fpt.status == 0);
  CHECK(fpt.out == "3\n");

  RunResult oracle = run("solve " + xo.string() + " --algo oracle --max-size 4");
  CHECK(oracle.status == 0);
  CHECK(oracle.out == "3\n");

  fs::path pair = dir / "pair.csv";
  write(pair, dtexact::testdata::pair_1d().to_csv());
  RunResult none = run("solve " + pair.string() + " --algo fpt --max-size 0");
  CHECK(none.status == 1);
  CHECK(none.out == "none within budget\n");

  fs::path bad = dir / "bad.csv";
  write(bad, "1,red\n1,blue\n");
  CHECK(run("solve " + bad.string()).status == 2);
  CHECK(run("solve " + (dir / "missing.csv").string()).status == 2);
}

TEST_CASE("solve auto picks fpt when a budget is given") {
  fs::path dir = temp_dir();
  fs::path pair = dir / "pair_auto.csv";
  write(pair, dtexact::testdata::pair_1d().to_csv());
  CHECK(run("solve " + pair.string() + " --max-size 0").status == 1);
  CHECK(run("solve " + pair.string()).out == "1\n");
}

TEST_CASE("solve writes a tree that verify accepts") {
  fs::path dir = temp_dir();
  fs::path xo = dir / "xor_rt.csv";
  fs::path tree = dir / "xor_rt.tree.json";
  write(xo, dtexact::testdata::xor_2x2().to_csv());

  REQUIRE(run("solve " + xo.string() + " --algo dp --tree-out " + tree.string()).status == 0);
  RunResult verify = run("verify " + tree.string() + " " + xo.string());
  CHECK(verify.status == 0);
  CHECK(verify.out.find("size=3") != std::string::npos);
  CHECK(verify.out.find("valid") != std::string::npos);

  // A single-leaf tree misclassifies half of the grid.
  fs::path leaf = dir / "leaf.tree.json";
  write(leaf, "{\"class\": \"r\"}\n");
  CHECK(run("verify " + leaf.string() + " " + xo.string()).status == 1);

  // Out-of-range dimension is a format error.
  fs::path broken = dir / "broken.tree.json";
  write(broken,
        "{\"dim\": 5, \"thr\": \"0.5\", \"le\": {\"class\": \"r\"}, "
        "\"gt\": {\"class\": \"b\"}}\n");
  CHECK(run("verify " + broken.string() + " " + xo.string()).status == 2);
}

TEST_CASE("solve honors dimension restrictions and red-leaf budgets") {
  fs::path dir = temp_dir();
  fs::path xo = dir / "xor_flags.csv";
  write(xo, dtexact::testdata::xor_2x2().to_csv());

  CHECK(run("solve " + xo.string() + " --algo fpt --max-size 6 --dims 1").status == 1);
  CHECK(run("solve " + xo.string() + " --algo fpt --max-size 6 --dims 1,2").out == "3\n");
  CHECK(run("solve " + xo.string() + " --algo fpt --max-size 6 --dims 3").status == 2);

  CHECK(run("solve " + xo.string() + " --algo fpt --red-leaves 2").out == "3\n");
  CHECK(run("solve " + xo.string() + " --algo fpt --red-leaves 2 --red-class b").out == "3\n");
  CHECK(run("solve " + xo.string() + " --algo fpt --red-leaves 2 --red-class nope").status == 2);

  fs::path three = dir / "three_class.csv";
  write(three, dtexact::testdata::three_class_1d().to_csv());
  CHECK(run("solve " + three.string() + " --algo fpt --red-leaves 1").status == 2);
}

TEST_CASE("bench marks timed-out runs") {
  fs::path dir = temp_dir() / "timeout_corpus";
  fs::create_directories(dir);
  write(dir / "xor.csv", dtexact::testdata::xor_2x2().to_csv());
  fs::path report = temp_dir() / "timeout_report.csv";
  RunResult r = run("bench --corpus " + dir.string() +
                    " --algos dp --timeout-ms 0 --omit-millis --out " + report.string());
  CHECK(r.status == 0);
  CHECK(slurp(report).find("xor.csv,dp,-,-,timeout") != std::string::npos);
}

TEST_CASE("dp refuses four dimensions without force") {
  fs::path dir = temp_dir();
  fs::path wide = dir / "wide.csv";
  write(wide, "0,0,0,0,a\n1,1,1,1,b\n");
  CHECK(run("solve " + wide.string() + " --algo dp").status == 2);
  RunResult forced = run("solve " + wide.string() + " --algo dp --force");
  CHECK(forced.status == 0);
  CHECK(forced.out == "1\n");
}

TEST_CASE("generators are deterministic") {
  fs::path dir = temp_dir();
  fs::path a = dir / "rand_a.csv";
  fs::path b = dir / "rand_b.csv";
  REQUIRE(run("gen-random --seed 7 --n 9 --d 2 --k 2 --out " + a.string()).status == 0);
  REQUIRE(run("gen-random --seed 7 --n 9 --d 2 --k 2 --out " + b.string()).status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());

  fs::path xo = dir / "gen_xor.csv";
  REQUIRE(run("gen-xor --grid 2 --out " + xo.string()).status == 0);
  CHECK(slurp(xo) == dtexact::testdata::xor_2x2().to_csv());
}

TEST_CASE("gen-psi writes the dataset and the budget") {
  fs::path dir = temp_dir();
  fs::path in = dir / "psi.txt";
  fs::path out = dir / "psi.csv";
  fs::path budget = dir / "psi.budget";
  write(in,
        "colors 2\n"
        "vertex 11 1\nvertex 12 1\nvertex 21 2\nvertex 22 2\n"
        "gedge 11 21\ngedge 12 22\n"
        "hedge 1 2\n");
  REQUIRE(run("gen-psi --in " + in.string() + " --out " + out.string() +
              " --budget-out " + budget.string())
              .status == 0);
  CHECK(slurp(budget) == "8\n");
  auto ds = dtexact::Dataset::parse_csv_text(slurp(out), false);
  CHECK(ds.dims() == 4);
  CHECK(ds.size() == 26);

  // An instance that is already reduce-ready must not be inflated by
  // normalization: one candidate stays at d = 4 with budget 2.
  fs::path single = dir / "psi_single.txt";
  write(single, "colors 2\nvertex 1 1\nvertex 2 2\ngedge 1 2\nhedge 1 2\n");
  REQUIRE(run("gen-psi --in " + single.string() + " --out " + out.string() +
              " --budget-out " + budget.string())
              .status == 0);
  CHECK(slurp(budget) == "2\n");
  CHECK(dtexact::Dataset::parse_csv_text(slurp(out), false).dims() == 4);

  write(in, "colors 2\nvertex 1 1\n");
  CHECK(run("gen-psi --in " + in.string() + " --out " + out.string()).status == 2);
}

TEST_CASE("bench reports per-instance agreement") {
  fs::path dir = temp_dir() / "corpus";
  fs::create_directories(dir);
  write(dir / "a.csv", dtexact::testdata::pair_1d().to_csv());
  write(dir / "b.csv", dtexact::testdata::xor_2x2().to_csv());

  fs::path report = temp_dir() / "report.csv";
  RunResult r = run("bench --corpus " + dir.string() + " --algos dp,fpt,oracle --out " +
                    report.string() + " --omit-millis");
  CHECK(r.status == 0);
  CHECK(r.out.find("a.csv") != std::string::npos);
  CHECK(r.out.find("OK") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);

  std::string csv = slurp(report);
  CHECK(csv.find("instance,algo,size,millis,status") == 0);
  CHECK(csv.find("a.csv,dp,1,-,ok") != std::string::npos);
  CHECK(csv.find("b.csv,oracle,3,-,ok") != std::string::npos);

  // Identical flags give identical reports.
  fs::path report2 = temp_dir() / "report2.csv";
  run("bench --corpus " + dir.string() + " --algos dp,fpt,oracle --out " +
      report2.string() + " --omit-millis");
  CHECK(slurp(report2) == csv);

  // An empty corpus is fine.
  fs::path empty = temp_dir() / "empty_corpus";
  fs::create_directories(empty);
  CHECK(run("bench --corpus " + empty.string()).status == 0);
}
