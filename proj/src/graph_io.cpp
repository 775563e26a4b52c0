#include "sgi/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace sgi {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t to_index(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_ws(text.substr(pos, end - pos));
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return lines;
}

Edge to_edge(std::string_view u, std::string_view v, std::size_t n, std::size_t line) {
  const std::size_t a = to_index(u, line);
  const std::size_t b = to_index(v, line);
  if (a < 1 || a > n || b < 1 || b > n) {
    throw ParseError(line, "vertex index out of range 1.." + std::to_string(n));
  }
  if (a == b) throw ParseError(line, "self-loop on vertex " + std::to_string(a));
  return {a - 1, b - 1};
}

Graph parse_dimacs(const std::vector<Line>& lines) {
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  for (const auto& [number, tok] : lines) {
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(number, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError(number, "expected 'p edge <n> <m>'");
      }
      n = to_index(tok[2], number);
      to_index(tok[3], number);
      if (n == 0) throw ParseError(number, "graph needs at least one vertex");
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(number, "edge line before problem line");
      if (tok.size() != 3) throw ParseError(number, "expected 'e <u> <v>'");
      edges.push_back(to_edge(tok[1], tok[2], n, number));
    } else {
      throw ParseError(number, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing problem line");
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list(const std::vector<Line>& lines) {
  const auto& head = lines.front();
  if (head.tokens.size() != 1) throw ParseError(head.number, "expected vertex count");
  const std::size_t n = to_index(head.tokens[0], head.number);
  if (n == 0) throw ParseError(head.number, "graph needs at least one vertex");
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [number, tok] = lines[k];
    if (tok.size() != 2) throw ParseError(number, "expected '<u> <v>'");
    edges.push_back(to_edge(tok[0], tok[1], n, number));
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty graph document");
  const auto first = lines.front().tokens[0];
  if (first == "c" || first == "p" || first == "e") return parse_dimacs(lines);
  return parse_edge_list(lines);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

std::string format_dimacs(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << '\n';
  const auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_dimacs(g, comment);
}

Permutation parse_permutation(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError(lines.empty() ? 0 : lines[1].number, "expected one line");
  const auto& [number, tok] = lines.front();
  std::vector<std::size_t> map;
  map.reserve(tok.size());
  for (auto t : tok) {
    const std::size_t img = to_index(t, number);
    if (img < 1 || img > tok.size()) throw ParseError(number, "image out of range");
    map.push_back(img - 1);
  }
  try {
    return Permutation(std::move(map));
  } catch (const std::invalid_argument& e) {
    throw ParseError(number, e.what());
  }
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i] + 1;
  out << '\n';
  return out.str();
}

std::string format_permutation_table(const Permutation& p) {
  const int width = static_cast<int>(std::to_string(p.size()).size());
  std::ostringstream top;
  std::ostringstream bottom;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) {
      top << ' ';
      bottom << ' ';
    }
    top.width(width);
    top << i + 1;
    bottom.width(width);
    bottom << p[i] + 1;
  }
  return top.str() + '\n' + bottom.str() + '\n';
}

}  // namespace sgi
