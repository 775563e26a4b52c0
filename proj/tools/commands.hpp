#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sgi/bench.hpp"
#include "sgi/graph.hpp"
#include "sgi/solver.hpp"
#include "sgi/testkit.hpp"

namespace sgi::cli {

enum ExitCode : int {
  kIsomorphic = 0,
  kNotIsomorphic = 1,
  kInconclusive = 2,
  kInputError = 3,
  kInternalError = 4,
};

/// Environment variable that overrides the default epsilon.
inline constexpr const char* kEpsilonEnv = "SGI_EPS";

/// Solver defaults with epsilon taken from SGI_EPS when it is set.
SolverOptions default_options();

int exit_code(Outcome outcome);

/// Prints the outcome and, for isomorphic pairs, the permutation as a
/// two-row table and as a single machine-readable line. Writes the
/// permutation file when `perm_out` is given.
int cmd_check(const std::filesystem::path& file_a, const std::filesystem::path& file_b,
              const SolverOptions& opts, const std::optional<std::filesystem::path>& perm_out,
              std::ostream& out);

struct BenchSource {
  std::string name;
  Graph graph;
};

/// A graph file path, or a generator spec such as "paley 17" or "lattice(4)".
BenchSource resolve_bench_source(const std::vector<std::string>& words, std::uint64_t graph_seed = 0);

BenchReport cmd_bench(const BenchSource& source, std::size_t trials, std::uint64_t seed,
                      const SolverOptions& opts, unsigned jobs, std::ostream& out,
                      const std::optional<std::filesystem::path>& records_out);

/// Writes mask_round_<r>.csv and mask_round_<r>.pgm for the root (r = 0) and
/// each of the first `rounds` accepted assignments. Returns the CSV paths in
/// round order. Throws std::runtime_error, before writing anything, when the
/// root spectra differ.
std::vector<std::filesystem::path> cmd_dump_cost(const std::filesystem::path& file_a,
                                                 const std::filesystem::path& file_b,
                                                 std::size_t rounds,
                                                 const std::filesystem::path& out_dir,
                                                 const SolverOptions& opts);

/// DIMACS text of the generated graph to `out_path`, or to `out` if absent.
void cmd_gen(const GeneratorSpec& spec, const std::optional<std::filesystem::path>& out_path,
             std::ostream& out);

std::string mask_to_csv(const ZeroMask& mask);
std::string mask_to_pgm(const ZeroMask& mask);

}  // namespace sgi::cli
