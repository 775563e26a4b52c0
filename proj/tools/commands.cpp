#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sgi/graph_io.hpp"

namespace sgi::cli {
namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string describe_rejection(const SolveReport& r) {
  char buf[128];
  switch (r.root_rejection) {
    case Rejection::spectra_differ:
      if (std::isinf(r.root_error)) return "vertex counts differ";
      std::snprintf(buf, sizeof buf, "spectra differ (eigenvalue distance %.3e)", r.root_error);
      return buf;
    case Rejection::group_mismatch: return "spectra differ (eigenvalue multiplicities)";
    case Rejection::assignment:
      std::snprintf(buf, sizeof buf, "cospectral, but projector cost %.3e admits no assignment",
                    r.root_error);
      return buf;
    case Rejection::none: break;
  }
  return "perturbation search exhausted (heuristic rejection)";
}

}  // namespace

SolverOptions default_options() {
  SolverOptions opts;
  if (const char* env = std::getenv(kEpsilonEnv); env && *env) {
    char* end = nullptr;
    const double eps = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(eps > 0.0)) {
      throw std::invalid_argument(std::string(kEpsilonEnv) + " must be a positive number");
    }
    opts.epsilon = eps;
  }
  return opts;
}

int exit_code(Outcome outcome) {
  switch (outcome) {
    case Outcome::isomorphic: return kIsomorphic;
    case Outcome::not_isomorphic: return kNotIsomorphic;
    case Outcome::inconclusive: return kInconclusive;
  }
  return kInternalError;
}

int cmd_check(const fs::path& file_a, const fs::path& file_b, const SolverOptions& opts,
              const std::optional<fs::path>& perm_out, std::ostream& out) {
  const Graph a = read_graph_file(file_a);
  const Graph b = read_graph_file(file_b);
  const SolveReport report = is_isomorphic(a, b, opts);

  out << "outcome: " << to_string(report.outcome) << '\n';
  if (report.outcome == Outcome::not_isomorphic) out << "reason: " << describe_rejection(report) << '\n';
  if (report.outcome == Outcome::inconclusive) {
    out << "reason: backtracking cap of " << opts.max_backtrack_steps << " steps reached\n";
  }
  out << "backtrack_steps: " << report.backtrack_steps << '\n'
      << "decompositions: " << report.decompositions << '\n'
      << "lap_solves: " << report.lap_solves << '\n';
  if (report.permutation) {
    out << "pi =\n" << format_permutation_table(*report.permutation);
    out << "permutation: " << format_permutation(*report.permutation);
    if (perm_out) write_file(*perm_out, format_permutation(*report.permutation));
  }
  return exit_code(report.outcome);
}

BenchSource resolve_bench_source(const std::vector<std::string>& words, std::uint64_t graph_seed) {
  if (words.empty()) throw std::invalid_argument("bench needs a graph file or generator spec");
  if (words.size() == 1 && fs::is_regular_file(words[0])) {
    return {fs::path(words[0]).stem().string(), read_graph_file(words[0])};
  }
  std::string joined;
  for (const auto& w : words) joined += (joined.empty() ? "" : " ") + w;
  GeneratorSpec spec = parse_generator_spec(joined);
  spec.seed = graph_seed;
  return {to_string(spec), generate(spec)};
}

BenchReport cmd_bench(const BenchSource& source, std::size_t trials, std::uint64_t seed,
                      const SolverOptions& opts, unsigned jobs, std::ostream& out,
                      const std::optional<fs::path>& records_out) {
  BenchReport report = run_bench(source.graph, source.name, trials, seed, opts, jobs);
  out << format_bench_table({report});
  if (records_out) write_file(*records_out, format_bench_records(report));
  return report;
}

std::string mask_to_csv(const ZeroMask& mask) {
  std::string s;
  for (Eigen::Index i = 0; i < mask.rows(); ++i) {
    for (Eigen::Index j = 0; j < mask.cols(); ++j) {
      if (j) s += ',';
      s += mask(i, j) ? '1' : '0';
    }
    s += '\n';
  }
  return s;
}

// Plain PGM with maxval 1: white (1) marks an admissible assignment.
std::string mask_to_pgm(const ZeroMask& mask) {
  std::string s = "P2\n" + std::to_string(mask.cols()) + ' ' + std::to_string(mask.rows()) + "\n1\n";
  for (Eigen::Index i = 0; i < mask.rows(); ++i) {
    for (Eigen::Index j = 0; j < mask.cols(); ++j) {
      if (j) s += ' ';
      s += mask(i, j) ? '1' : '0';
    }
    s += '\n';
  }
  return s;
}

std::vector<fs::path> cmd_dump_cost(const fs::path& file_a, const fs::path& file_b,
                                    std::size_t rounds, const fs::path& out_dir,
                                    const SolverOptions& opts) {
  const Graph a = read_graph_file(file_a);
  const Graph b = read_graph_file(file_b);
  if (a.order() != b.order()) throw std::runtime_error("graphs differ in vertex count");

  SolverOptions dump_opts = opts;
  dump_opts.unique_early_exit = false;
  dump_opts.record_masks = true;
  const SolveReport report = is_isomorphic(a, b, dump_opts);
  if (!report.root_mask) {
    throw std::runtime_error("root spectra differ; no cost matrix to dump");
  }

  std::vector<const ZeroMask*> masks{&*report.root_mask};
  for (std::size_t r = 0; r < rounds && r < report.rounds.size(); ++r) {
    masks.push_back(&*report.rounds[r].mask);
  }

  fs::create_directories(out_dir);
  std::vector<fs::path> written;
  for (std::size_t r = 0; r < masks.size(); ++r) {
    char stem[32];
    std::snprintf(stem, sizeof stem, "mask_round_%02zu", r);
    const fs::path csv = out_dir / (std::string(stem) + ".csv");
    write_file(csv, mask_to_csv(*masks[r]));
    write_file(out_dir / (std::string(stem) + ".pgm"), mask_to_pgm(*masks[r]));
    written.push_back(csv);
  }
  return written;
}

void cmd_gen(const GeneratorSpec& spec, const std::optional<fs::path>& out_path, std::ostream& out) {
  const Graph g = generate(spec);
  const std::string text = format_dimacs(g, to_string(spec));
  if (out_path) {
    write_file(*out_path, text);
  } else {
    out << text;
  }
}

}  // namespace sgi::cli
