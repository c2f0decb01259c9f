#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dtexact/dp_solver.hpp"
#include "dtexact/fpt_solver.hpp"
#include "dtexact/generators.hpp"
#include "dtexact/oracle.hpp"
#include "dtexact/psi.hpp"
#include "dtexact/tree_json.hpp"

namespace {

using namespace dtexact;

constexpr int kExitSolved = 0;
constexpr int kExitNone = 1;
constexpr int kExitError = 2;

Dataset load_dataset(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open '" + path + "'");
  return Dataset::parse_csv(in, has_header);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

std::vector<int> parse_dims(const std::vector<int>& dims_1based, const Dataset& ds) {
  std::vector<int> dims;
  for (int dim : dims_1based) {
    if (dim < 1 || dim > ds.dims())
      throw std::runtime_error("--dims entry " + std::to_string(dim) +
                               " out of range 1.." + std::to_string(ds.dims()));
    dims.push_back(dim - 1);
  }
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  return dims;
}

struct SolveArgs {
  std::string input;
  std::string algo = "auto";
  bool header = false;
  bool force = false;
  std::optional<long long> max_size;
  std::optional<int> red_leaves;
  std::string red_class;
  std::vector<int> dims;
  std::string tree_out;
  bool dp_shrink = false;
  bool dp_prune = false;
  bool fpt_cache = false;
};

int run_solve(const SolveArgs& args) {
  Dataset ds = load_dataset(args.input, args.header);

  std::string algo = args.algo;
  if (algo == "auto") algo = (args.max_size || args.red_leaves) ? "fpt" : "dp";

  std::optional<std::vector<int>> dims;
  if (!args.dims.empty()) dims = parse_dims(args.dims, ds);

  auto finish = [&](std::optional<int> size,
                    const std::optional<DecisionTree>& tree) -> int {
    if (!size) {
      std::cout << "none within budget\n";
      return kExitNone;
    }
    std::cout << *size << "\n";
    if (!args.tree_out.empty() && tree) write_file(args.tree_out, tree_to_json(*tree, ds));
    return kExitSolved;
  };

  if (algo == "dp") {
    if (args.red_leaves) throw std::runtime_error("--red-leaves needs --algo fpt");
    if (ds.dims() >= 4 && !args.force)
      throw std::runtime_error(
          "dp on " + std::to_string(ds.dims()) +
          " dimensions is expected to blow up; pass --force to run anyway");
    if (dims) throw std::runtime_error("--dims is only supported by fpt and oracle");
    DpOptions opt;
    opt.shrink_boxes = args.dp_shrink;
    opt.prune_empty_sides = args.dp_prune;
    DpResult result = dp_min_size(ds, opt);
    if (args.max_size && result.min_size > *args.max_size)
      return finish(std::nullopt, std::nullopt);
    return finish(result.min_size, std::move(result.witness));
  }
  if (algo == "fpt") {
    FptOptions opt;
    opt.memoize = args.fpt_cache;
    std::optional<DecisionTree> tree;
    if (args.red_leaves) {
      if (dims) throw std::runtime_error("--red-leaves does not combine with --dims");
      if (!args.red_class.empty()) {
        auto red = ds.class_by_name(args.red_class);
        if (!red) throw std::runtime_error("unknown class '" + args.red_class + "'");
        tree = solve_with_red_leaf_bound(ds, *args.red_leaves, *red, opt);
      } else {
        tree = solve_min_leaf_class(ds, *args.red_leaves, opt);
      }
    } else {
      if (!args.max_size) throw std::runtime_error("fpt needs --max-size or --red-leaves");
      tree = solve_bounded(ds, *args.max_size, dims, opt);
    }
    if (!tree) return finish(std::nullopt, std::nullopt);
    return finish(tree->size(), tree);
  }
  if (algo == "oracle") {
    if (!args.tree_out.empty())
      throw std::runtime_error("the oracle reports sizes only, no witness tree");
    OracleLimits lim;
    lim.max_size = static_cast<int>(args.max_size.value_or(6));
    if (dims) lim.dims_allowed = *dims;
    return finish(brute_min_size(ds, lim), std::nullopt);
  }
  throw std::runtime_error("unknown algorithm '" + algo + "'");
}

int run_verify(const std::string& tree_path, const std::string& data_path, bool header) {
  Dataset ds = load_dataset(data_path, header);
  std::ifstream in(tree_path);
  if (!in) throw std::runtime_error("cannot open '" + tree_path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  DecisionTree tree = tree_from_json(text, ds);

  bool ok = validate(tree, ds);
  std::cout << "size=" << tree.size() << "\n";
  for (ClassId c = 0; c < ds.classes(); ++c) {
    TreeStats st = tree_stats(tree, ds, c);
    std::cout << "class " << ds.class_name(c) << ": leaves=" << st.leaves_per_class[c]
              << " essential=" << st.essential_count
              << " max_nonessential_run=" << st.max_nonessential_run << "\n";
  }
  std::cout << (ok ? "valid" : "invalid") << "\n";
  return ok ? kExitSolved : kExitNone;
}

int run_gen_psi(const std::string& in_path, const std::string& out_path,
                const std::string& budget_path) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open '" + in_path + "'");
  PsiInstance p = parse_psi(in);
  if (!is_normalized(p)) p = normalize_psi(p);
  ReducedInstance reduced = reduce(p);
  write_file(out_path, reduced.dataset.to_csv());
  if (!budget_path.empty())
    write_file(budget_path, std::to_string(reduced.budget) + "\n");
  std::cerr << "d=" << reduced.dataset.dims() << " examples=" << reduced.dataset.size()
            << " budget=" << reduced.budget << "\n";
  return kExitSolved;
}

struct BenchArgs {
  std::string corpus;
  std::vector<std::string> algos = {"dp", "fpt"};
  std::optional<long long> timeout_ms;
  std::string out;
  bool omit_millis = false;
  bool header = false;
};

struct BenchCell {
  std::string status;  // ok | none | timeout | error
  std::optional<int> size;
  long long millis = 0;
};

BenchCell bench_run(const std::string& algo, const Dataset& ds,
                    const std::optional<long long>& timeout_ms) {
  SolveDeadline deadline;
  SolveDeadline* deadline_ptr = nullptr;
  if (timeout_ms) {
    deadline = SolveDeadline::after(std::chrono::milliseconds(*timeout_ms));
    deadline_ptr = &deadline;
  }

  BenchCell cell;
  auto start = std::chrono::steady_clock::now();
  try {
    if (algo == "dp") {
      DpOptions opt;
      opt.deadline = deadline_ptr;
      cell.size = dp_min_size(ds, opt).min_size;
    } else if (algo == "fpt") {
      FptOptions opt;
      opt.deadline = deadline_ptr;
      auto tree = solve_bounded(ds, static_cast<long long>(ds.size()) * ds.dims(),
                                std::nullopt, opt);
      if (tree) cell.size = tree->size();
    } else if (algo == "oracle") {
      OracleLimits lim;
      lim.deadline = deadline_ptr;
      cell.size = brute_min_size(ds, lim);
    } else {
      throw std::runtime_error("unknown bench algorithm '" + algo + "'");
    }
    cell.status = cell.size ? "ok" : "none";
  } catch (const SolveTimeout&) {
    cell.status = "timeout";
    cell.size.reset();
  }
  cell.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return cell;
}

int run_bench(const BenchArgs& args) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(args.corpus))
    if (entry.is_regular_file() && entry.path().extension() == ".csv")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::ostringstream csv;
  csv << "instance,algo,size,millis,status\n";

  std::cout << "instance";
  for (const auto& algo : args.algos) std::cout << "\t" << algo;
  std::cout << "\tagreement\n";

  for (const auto& file : files) {
    std::string name = file.filename().string();
    std::cout << name;

    std::optional<Dataset> ds;
    try {
      ds = load_dataset(file.string(), args.header);
    } catch (const DatasetError& e) {
      std::cerr << name << ": " << e.what() << "\n";
    }

    std::vector<std::optional<int>> ok_sizes;
    for (const auto& algo : args.algos) {
      BenchCell cell = ds ? bench_run(algo, *ds, args.timeout_ms)
                          : BenchCell{"error", std::nullopt, 0};
      csv << name << "," << algo << ","
          << (cell.size ? std::to_string(*cell.size) : "-") << ","
          << (args.omit_millis ? "-" : std::to_string(cell.millis)) << ","
          << cell.status << "\n";
      std::cout << "\t" << (cell.size ? std::to_string(*cell.size) : cell.status);
      if (cell.status == "ok") ok_sizes.push_back(cell.size);
    }

    std::string agreement = "-";
    if (ok_sizes.size() >= 2) {
      agreement = "OK";
      for (const auto& s : ok_sizes)
        if (*s != *ok_sizes.front()) agreement = "MISMATCH";
    }
    std::cout << "\t" << agreement << "\n";
  }

  if (!args.out.empty())
    write_file(args.out, csv.str());
  return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum-size decision tree solvers"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "compute the minimum tree size for a CSV dataset");
  solve->add_option("input", solve_args.input, "input CSV")->required();
  solve->add_option("--algo", solve_args.algo, "dp | fpt | oracle | auto")
      ->check(CLI::IsMember({"dp", "fpt", "oracle", "auto"}));
  solve->add_flag("--header", solve_args.header, "input has a header line");
  solve->add_flag("--force", solve_args.force, "run dp even on >= 4 dimensions");
  solve->add_option("--max-size", solve_args.max_size, "size budget");
  solve->add_option("--red-leaves", solve_args.red_leaves,
                    "leaf bound R for the designated class (two-class data)");
  solve->add_option("--red-class", solve_args.red_class,
                    "class designated as red; both are tried when omitted");
  solve->add_option("--dims", solve_args.dims, "1-based dimensions allowed for cuts")
      ->delimiter(',');
  solve->add_option("--tree-out", solve_args.tree_out, "write the witness tree JSON here");
  solve->add_flag("--dp-shrink-boxes", solve_args.dp_shrink,
                  "dp: normalize boxes to example bounding boxes");
  solve->add_flag("--dp-prune-empty", solve_args.dp_prune,
                  "dp: skip cuts with an empty side");
  solve->add_flag("--fpt-cache", solve_args.fpt_cache, "fpt: cache subset results");

  std::string verify_tree, verify_data;
  bool verify_header = false;
  auto* verify = app.add_subcommand("verify", "validate a tree JSON against a dataset");
  verify->add_option("tree", verify_tree, "tree JSON file")->required();
  verify->add_option("data", verify_data, "dataset CSV")->required();
  verify->add_flag("--header", verify_header, "dataset has a header line");

  int xor_grid = 2;
  std::string xor_out;
  auto* gen_xor = app.add_subcommand("gen-xor", "write a checkerboard grid dataset");
  gen_xor->add_option("--grid", xor_grid, "grid side length")->required();
  gen_xor->add_option("--out", xor_out, "output CSV")->required();

  std::uint64_t rnd_seed = 0;
  int rnd_n = 8, rnd_d = 2, rnd_k = 2, rnd_coord_max = 5;
  std::string rnd_out;
  auto* gen_random = app.add_subcommand("gen-random", "write a seeded random dataset");
  gen_random->add_option("--seed", rnd_seed, "rng seed")->required();
  gen_random->add_option("--n", rnd_n, "example count");
  gen_random->add_option("--d", rnd_d, "dimensions");
  gen_random->add_option("--k", rnd_k, "classes");
  gen_random->add_option("--coord-max", rnd_coord_max, "coordinates in [0, coord-max]");
  gen_random->add_option("--out", rnd_out, "output CSV")->required();

  std::string psi_in, psi_out, psi_budget_out;
  auto* gen_psi = app.add_subcommand("gen-psi",
                                     "reduce a subgraph-isomorphism instance to a dataset");
  gen_psi->add_option("--in", psi_in, "instance file")->required();
  gen_psi->add_option("--out", psi_out, "output CSV")->required();
  gen_psi->add_option("--budget-out", psi_budget_out, "write the size budget here");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "run solvers over a corpus directory");
  bench->add_option("--corpus", bench_args.corpus, "directory of CSV instances")->required();
  bench->add_option("--algos", bench_args.algos, "algorithms to run")->delimiter(',');
  bench->add_option("--timeout-ms", bench_args.timeout_ms, "per-solve timeout");
  bench->add_option("--out", bench_args.out, "report CSV path");
  bench->add_flag("--omit-millis", bench_args.omit_millis,
                  "write '-' for timings (stable output)");
  bench->add_flag("--header", bench_args.header, "instances have header lines");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (verify->parsed()) return run_verify(verify_tree, verify_data, verify_header);
    if (gen_xor->parsed()) {
      write_file(xor_out, make_xor_grid(xor_grid).to_csv());
      return kExitSolved;
    }
    if (gen_random->parsed()) {
      write_file(rnd_out,
                 make_random_dataset(rnd_seed, rnd_n, rnd_d, rnd_k, rnd_coord_max).to_csv());
      return kExitSolved;
    }
    if (gen_psi->parsed()) return run_gen_psi(psi_in, psi_out, psi_budget_out);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
