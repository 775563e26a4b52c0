#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sgi/graph.hpp"
#include "sgi/solver.hpp"

namespace sgi {

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Outcome outcome = Outcome::inconclusive;
  bool verified = false;  // isomorphic with a permutation that passes the exact check
  std::size_t backtrack_steps = 0;
  std::size_t decompositions = 0;
  std::size_t lap_solves = 0;
  std::size_t search_trials = 0;
  bool early_exit = false;
  double seconds = 0.0;
};

struct BenchReport {
  std::string name;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t nbt = 0;       // verified without backtracking
  std::size_t bt = 0;        // verified after backtracking
  std::size_t failures = 0;  // inconclusive, rejected or unverified
  double avg_steps = 0.0;    // mean backtrack steps over the bt trials
  double avg_time_seconds = 0.0;
  std::vector<TrialRecord> records;
};

/// Trial t solves (g, P_t^T g P_t) with P_t = random_permutation(n, seed + t).
/// Trials are split across `jobs` worker threads; results do not depend on
/// the thread count.
BenchReport run_bench(const Graph& g, const std::string& name, std::size_t trials,
                      std::uint64_t seed, const SolverOptions& opts, unsigned jobs = 1);

/// Header plus one row per report: Name, n, nBT, BT, steps (avg), time.
std::string format_bench_table(const std::vector<BenchReport>& reports);

/// One JSON object per trial followed by a summary object, newline separated.
std::string format_bench_records(const BenchReport& report);

}  // namespace sgi
