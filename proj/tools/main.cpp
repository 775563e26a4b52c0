// sgi: spectral graph isomorphism testing from the command line.
//
//   sgi check A.dimacs B.dimacs [--perm-out pi.txt]
//   sgi bench paley 17 --trials 100 --seed 1
//   sgi gen lattice 4 -o lattice4.dimacs
//   sgi dump-cost A.dimacs B.dimacs --rounds 2 -o masks/
//
// Exit codes for `check`: 0 isomorphic, 1 not isomorphic, 2 inconclusive,
// 3 bad input, 4 internal error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sgi/graph_io.hpp"

namespace {

struct SolverFlags {
  std::optional<double> eps;
  std::size_t max_backtrack = sgi::SolverOptions{}.max_backtrack_steps;
  bool no_skip_assigned = false;
  bool no_early_exit = false;
  bool weight_offset = false;
  bool jacobi = false;

  void attach(CLI::App* app) {
    app->add_option("--eps", eps, "Eigenvalue and assignment tolerance (default 1e-6, env SGI_EPS)")
        ->check(CLI::PositiveNumber);
    app->add_option("--max-backtrack", max_backtrack, "Backtracking step cap before giving up");
    app->add_flag("--no-skip-assigned", no_skip_assigned,
                  "Scan already-assigned vertices of the second graph too");
    app->add_flag("--no-early-exit", no_early_exit, "Do not stop on a unique zero-cost assignment");
    app->add_flag("--weight-offset", weight_offset, "Use self-loop weights n+1, n+2, ... instead of 1, 2, ...");
    app->add_flag("--jacobi", jacobi, "Use the Jacobi eigensolver instead of tridiagonal QR");
  }

  sgi::SolverOptions resolve() const {
    sgi::SolverOptions opts = sgi::cli::default_options();
    if (eps) opts.epsilon = *eps;
    opts.max_backtrack_steps = max_backtrack;
    opts.skip_assigned = !no_skip_assigned;
    opts.unique_early_exit = !no_early_exit;
    opts.offset_weights = weight_offset;
    if (jacobi) opts.backend = sgi::EigenBackend::jacobi;
    return opts;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral graph isomorphism testing by iterative self-loop perturbation"};
  app.require_subcommand(1);

  SolverFlags flags;

  std::string check_a, check_b;
  std::optional<std::string> perm_out;
  auto* check = app.add_subcommand("check", "Test two graph files for isomorphism");
  check->add_option("A", check_a, "First graph")->required();
  check->add_option("B", check_b, "Second graph")->required();
  check->add_option("--perm-out", perm_out, "Write the permutation (1-based images) to this file");
  flags.attach(check);

  std::vector<std::string> bench_source;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t graph_seed = 0;
  unsigned jobs = 1;
  std::optional<std::string> records_out;
  auto* bench = app.add_subcommand("bench", "Solve randomly permuted copies of one graph");
  bench->add_option("source", bench_source, "Graph file or generator spec, e.g. 'paley 17'")
      ->required();
  bench->add_option("--trials,-n", trials, "Number of random permutations")->check(CLI::PositiveNumber);
  bench->add_option("--seed,-s", seed, "Base seed; trial t uses seed + t");
  bench->add_option("--graph-seed", graph_seed, "Seed for random_gnp sources");
  bench->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--records", records_out, "Write per-trial JSON lines to this file");
  flags.attach(bench);

  std::string gen_family;
  std::size_t gen_param = 0;
  std::uint64_t gen_seed = 0;
  std::optional<std::string> gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated graph in DIMACS format");
  gen->add_option("family", gen_family,
                  "cycle | paley | lattice | triangular | complete | path | star | random_gnp")
      ->required();
  gen->add_option("param", gen_param, "Family parameter")->required();
  gen->add_option("--seed", gen_seed, "Seed for random_gnp");
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  std::string dump_a, dump_b, dump_dir;
  std::size_t rounds = 0;
  auto* dump = app.add_subcommand("dump-cost", "Write epsilon-masks of the cost matrices per round");
  dump->add_option("A", dump_a, "First graph")->required();
  dump->add_option("B", dump_b, "Second graph")->required();
  dump->add_option("--rounds,-r", rounds, "Number of accepted assignments to dump");
  dump->add_option("-o,--out", dump_dir, "Output directory")->required();
  flags.attach(dump);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return sgi::cli::cmd_check(check_a, check_b, flags.resolve(), perm_out, std::cout);
    if (*bench) {
      const auto source = sgi::cli::resolve_bench_source(bench_source, graph_seed);
      const auto report =
          sgi::cli::cmd_bench(source, trials, seed, flags.resolve(), jobs, std::cout, records_out);
      return report.failures == 0 ? 0 : 1;
    }
    if (*gen) {
      const auto family = sgi::parse_family(gen_family);
      if (!family) throw std::invalid_argument("unknown family '" + gen_family + "'");
      sgi::GeneratorSpec spec{*family, gen_param, gen_seed};
      sgi::cli::cmd_gen(spec, gen_out, std::cout);
      return 0;
    }
    if (*dump) {
      const auto files = sgi::cli::cmd_dump_cost(dump_a, dump_b, rounds, dump_dir, flags.resolve());
      for (const auto& f : files) std::cout << f.string() << '\n';
      return 0;
    }
  } catch (const sgi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return sgi::cli::kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sgi::cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sgi::cli::kInternalError;
  }
  return sgi::cli::kInternalError;
}
