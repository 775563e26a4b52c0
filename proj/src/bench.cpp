#include "sgi/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace sgi {
namespace {

TrialRecord run_trial(const Graph& g, std::size_t t, std::uint64_t seed, const SolverOptions& opts) {
  TrialRecord rec;
  rec.trial = t;
  rec.seed = seed + t;
  const Graph permuted = apply_permutation(g, random_permutation(g.order(), rec.seed));
  const auto start = std::chrono::steady_clock::now();
  const SolveReport report = is_isomorphic(g, permuted, opts);
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rec.outcome = report.outcome;
  rec.verified = report.outcome == Outcome::isomorphic && report.permutation &&
                 is_exact_isomorphism(g, permuted, *report.permutation);
  rec.backtrack_steps = report.backtrack_steps;
  rec.decompositions = report.decompositions;
  rec.lap_solves = report.lap_solves;
  rec.search_trials = report.trials;
  rec.early_exit = report.early_exit;
  return rec;
}

}  // namespace

BenchReport run_bench(const Graph& g, const std::string& name, std::size_t trials,
                      std::uint64_t seed, const SolverOptions& opts, unsigned jobs) {
  if (trials == 0) throw std::invalid_argument("bench needs at least one trial");
  BenchReport report;
  report.name = name;
  report.n = g.order();
  report.trials = trials;
  report.records.resize(trials);

  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(trials));
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t t = w; t < trials; t += jobs) report.records[t] = run_trial(g, t, seed, opts);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  double steps = 0.0;
  double seconds = 0.0;
  for (const auto& rec : report.records) {
    seconds += rec.seconds;
    if (!rec.verified) {
      ++report.failures;
    } else if (rec.backtrack_steps == 0) {
      ++report.nbt;
    } else {
      ++report.bt;
      steps += static_cast<double>(rec.backtrack_steps);
    }
  }
  report.avg_steps = report.bt ? steps / static_cast<double>(report.bt) : 0.0;
  report.avg_time_seconds = seconds / static_cast<double>(trials);
  return report;
}

std::string format_bench_table(const std::vector<BenchReport>& reports) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %5s %5s %5s %8s %6s %12s\n", "Name", "n", "nBT", "BT",
                "steps", "fail", "time");
  out << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-20s %5zu %5zu %5zu %8.2f %6zu %12.6f\n", r.name.c_str(), r.n,
                  r.nbt, r.bt, r.avg_steps, r.failures, r.avg_time_seconds);
    out << line;
  }
  return out.str();
}

std::string format_bench_records(const BenchReport& report) {
  std::ostringstream out;
  for (const auto& rec : report.records) {
    nlohmann::json j{{"type", "trial"},
                     {"name", report.name},
                     {"trial", rec.trial},
                     {"seed", rec.seed},
                     {"outcome", to_string(rec.outcome)},
                     {"verified", rec.verified},
                     {"backtrack_steps", rec.backtrack_steps},
                     {"decompositions", rec.decompositions},
                     {"lap_solves", rec.lap_solves},
                     {"search_trials", rec.search_trials},
                     {"early_exit", rec.early_exit},
                     {"seconds", rec.seconds}};
    out << j.dump() << '\n';
  }
  nlohmann::json summary{{"type", "summary"},
                         {"name", report.name},
                         {"n", report.n},
                         {"trials", report.trials},
                         {"nBT", report.nbt},
                         {"BT", report.bt},
                         {"failures", report.failures},
                         {"avg_steps", report.avg_steps},
                         {"avg_time_seconds", report.avg_time_seconds}};
  out << summary.dump() << '\n';
  return out.str();
}

}  // namespace sgi
