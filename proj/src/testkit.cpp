#include "sgi/testkit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <random>
#include <stdexcept>

namespace sgi {
namespace {

constexpr std::array<std::pair<std::string_view, Family>, 11> kFamilyNames{{
    {"cycle", Family::cycle},
    {"paley", Family::paley},
    {"lattice", Family::lattice},
    {"rook", Family::lattice},
    {"triangular", Family::triangular},
    {"complete", Family::complete},
    {"path", Family::path},
    {"star", Family::star},
    {"random_gnp", Family::random_gnp},
    {"gnp", Family::random_gnp},
    {"random", Family::random_gnp},
}};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_spec(std::string_view text) {
  throw std::invalid_argument("invalid generator spec '" + std::string(text) + "'");
}

Graph paley(std::size_t q) {
  if (!is_prime(q) || q % 4 != 1) {
    throw std::invalid_argument("paley order must be a prime congruent to 1 mod 4, got " +
                                std::to_string(q));
  }
  std::vector<bool> square(q, false);
  for (std::size_t x = 1; x < q; ++x) square[(x * x) % q] = true;
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < q; ++u)
    for (std::size_t v = u + 1; v < q; ++v)
      if (square[(v - u) % q]) edges.emplace_back(u, v);
  return Graph::from_edges(q, edges);
}

Graph lattice(std::size_t k) {
  if (k < 2) throw std::invalid_argument("lattice needs k >= 2");
  std::vector<Edge> edges;
  const std::size_t n = k * k;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (u / k == v / k || u % k == v % k) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph triangular(std::size_t k) {
  if (k < 3) throw std::invalid_argument("triangular needs k >= 3");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x + 1; y < k; ++y) pairs.emplace_back(x, y);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < pairs.size(); ++u) {
    for (std::size_t v = u + 1; v < pairs.size(); ++v) {
      const auto [a, b] = pairs[u];
      const auto [c, d] = pairs[v];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(pairs.size(), edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph star(std::size_t n) {
  if (n < 2) throw std::invalid_argument("star needs n >= 2");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [key, family] : kFamilyNames)
    if (key == name) return family;
  return std::nullopt;
}

std::string_view family_name(Family family) {
  for (const auto& [key, f] : kFamilyNames)
    if (f == family) return key;
  return "unknown";
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  const std::string_view s = trim(text);
  std::string_view name;
  std::string_view param;
  if (const auto open = s.find('('); open != std::string_view::npos) {
    if (s.back() != ')') bad_spec(text);
    name = s.substr(0, open);
    param = s.substr(open + 1, s.size() - open - 2);
  } else if (const auto sep = s.find_first_of(": \t"); sep != std::string_view::npos) {
    name = s.substr(0, sep);
    param = s.substr(sep + 1);
  } else {
    bad_spec(text);
  }
  name = trim(name);
  param = trim(param);
  const auto family = parse_family(name);
  if (!family || param.empty()) bad_spec(text);
  GeneratorSpec spec;
  spec.family = *family;
  const auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), spec.parameter);
  if (ec != std::errc() || ptr != param.data() + param.size()) bad_spec(text);
  return spec;
}

std::string to_string(const GeneratorSpec& spec) {
  return std::string(family_name(spec.family)) + "(" + std::to_string(spec.parameter) + ")";
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::cycle: return cycle(spec.parameter);
    case Family::paley: return paley(spec.parameter);
    case Family::lattice: return lattice(spec.parameter);
    case Family::triangular: return triangular(spec.parameter);
    case Family::complete: return complete(spec.parameter);
    case Family::path: return path(spec.parameter);
    case Family::star: return star(spec.parameter);
    case Family::random_gnp: return random_gnp(spec.parameter, spec.edge_probability, spec.seed);
  }
  throw std::invalid_argument("unknown generator family");
}

namespace {

class BruteForce {
 public:
  BruteForce(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.order()) {
    deg_a_ = a.degrees();
    deg_b_ = b.degrees();
    sig_a_ = signatures(a, deg_a_);
    sig_b_ = signatures(b, deg_b_);
  }

  std::optional<Permutation> run() {
    auto da = deg_a_, db = deg_b_;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    map_.assign(n_, n_);
    used_.assign(n_, false);
    if (!extend(0)) return std::nullopt;
    return Permutation(map_);
  }

 private:
  static std::vector<std::vector<std::size_t>> signatures(const Graph& g,
                                                          const std::vector<std::size_t>& deg) {
    std::vector<std::vector<std::size_t>> sig(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
      for (std::size_t u = 0; u < g.order(); ++u)
        if (g.has_edge(v, u)) sig[v].push_back(deg[u]);
      std::sort(sig[v].begin(), sig[v].end());
    }
    return sig;
  }

  bool extend(std::size_t v) {
    if (v == n_) return true;
    for (std::size_t w = 0; w < n_; ++w) {
      if (used_[w] || deg_a_[v] != deg_b_[w] || sig_a_[v] != sig_b_[w]) continue;
      bool consistent = true;
      for (std::size_t u = 0; u < v && consistent; ++u)
        consistent = a_.has_edge(u, v) == b_.has_edge(map_[u], w);
      if (!consistent) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(v + 1)) return true;
      used_[w] = false;
    }
    map_[v] = n_;
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::size_t n_;
  std::vector<std::size_t> deg_a_, deg_b_;
  std::vector<std::vector<std::size_t>> sig_a_, sig_b_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Permutation> brute_force_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() > kBruteForceLimit || b.order() > kBruteForceLimit) {
    throw std::invalid_argument("brute-force oracle limited to 10 vertices");
  }
  if (a.order() != b.order()) return std::nullopt;
  return BruteForce(a, b).run();
}

std::pair<Graph, Graph> cospectral_fixture() {
  const std::vector<Edge> four_cycle{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return {star(5), Graph::from_edges(5, four_cycle)};
}

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_graphs supports 1 <= n <= 6");
  std::vector<Edge> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  const std::uint64_t count = std::uint64_t{1} << slots.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1U) edges.push_back(slots[s]);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

}  // namespace sgi
