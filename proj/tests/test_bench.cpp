#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "sgi/bench.hpp"
#include "sgi/testkit.hpp"

using namespace sgi;

TEST_CASE("bench on cycle(6)") {
  const auto r = run_bench(generate({Family::cycle, 6}), "cycle(6)", 10, 1, {});
  CHECK(r.trials == 10);
  CHECK(r.failures == 0);
  CHECK(r.nbt + r.bt + r.failures == r.trials);
  CHECK(r.records.size() == 10);
  CHECK(r.records[3].seed == 4);
}

TEST_CASE("bench is reproducible and independent of the thread count") {
  const Graph g = generate({Family::paley, 13});
  const auto one = run_bench(g, "paley(13)", 12, 42, {}, 1);
  const auto four = run_bench(g, "paley(13)", 12, 42, {}, 4);
  CHECK(one.nbt == four.nbt);
  CHECK(one.bt == four.bt);
  CHECK(one.failures == four.failures);
  CHECK(one.avg_steps == four.avg_steps);
  for (std::size_t t = 0; t < 12; ++t) {
    CHECK(one.records[t].backtrack_steps == four.records[t].backtrack_steps);
    CHECK(one.records[t].decompositions == four.records[t].decompositions);
  }
}

TEST_CASE("bench output formats") {
  const auto r = run_bench(generate({Family::lattice, 3}), "lattice(3)", 3, 5, {});
  const std::string table = format_bench_table({r});
  CHECK(table.find("nBT") != std::string::npos);
  CHECK(table.find("lattice(3)") != std::string::npos);

  std::istringstream lines(format_bench_records(r));
  std::string line;
  std::size_t trials = 0;
  nlohmann::json last;
  while (std::getline(lines, line)) {
    last = nlohmann::json::parse(line);
    if (last["type"] == "trial") ++trials;
  }
  CHECK(trials == 3);
  CHECK(last["type"] == "summary");
  CHECK(last["trials"] == 3);
  CHECK(last["failures"] == 0);
}

TEST_CASE("bench rejects zero trials") {
  CHECK_THROWS_AS(run_bench(Graph(2), "x", 0, 0, {}), std::invalid_argument);
}
