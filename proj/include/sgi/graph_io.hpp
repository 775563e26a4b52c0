#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sgi/graph.hpp"

namespace sgi {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Two input formats are accepted, both with 1-based vertex indices:
//
//   DIMACS-style     c <comment>
//                    p edge <n> <m>
//                    e <u> <v>
//
//   plain edge list  <n>
//                    <u> <v>
//
// The format is chosen by the first non-blank line. Blank lines are
// skipped everywhere; `c` comment lines are only meaningful in DIMACS.
// Duplicate edges collapse; self-loops are rejected.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// DIMACS-style text, edges listed once with u < v.
std::string format_dimacs(const Graph& g, std::string_view comment = {});
void write_graph_file(const std::filesystem::path& path, const Graph& g,
                      std::string_view comment = {});

/// One line of n space-separated 1-based images.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

/// Two aligned rows, domain on top and images below, both 1-based.
std::string format_permutation_table(const Permutation& p);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace sgi
