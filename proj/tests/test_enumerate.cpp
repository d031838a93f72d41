#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wordrep/cycles.hpp"
#include "wordrep/enumerate.hpp"
#include "wordrep/graphcheck.hpp"

using namespace wordrep;

namespace {

EnumerationReport run(const Graph& g, std::size_t n, bool collect = false,
                      unsigned workers = 1) {
  EnumerateOptions opts;
  opts.collect_words = collect;
  opts.workers = workers;
  return enumerate_representations(g, n, opts);
}

}  // namespace

TEST_CASE("single vertex") {
  EnumerationReport r = run(Graph({"1"}, {}), 1, true);
  CHECK(r.total_scanned == 1);
  CHECK(r.matches == 1);
  CHECK(r.words == std::vector<std::string>{"1 1"});
}

TEST_CASE("two vertices, with and without the edge") {
  EnumerationReport edge = run(Graph({"1", "2"}, {{"1", "2"}}), 2, true);
  CHECK(edge.total_scanned == 6);
  CHECK(edge.matches == 2);
  CHECK(edge.words == std::vector<std::string>{"1 2 1 2", "2 1 2 1"});

  EnumerationReport noedge = run(Graph({"1", "2"}, {}), 2, true);
  CHECK(noedge.total_scanned == 6);
  CHECK(noedge.matches == 4);
}

TEST_CASE("triangle representants are the doubled permutations") {
  EnumerationReport r = run(cycle_graph(3), 3, true);
  CHECK(r.total_scanned == 90);
  CHECK(r.matches == 6);
  CHECK(r.words == std::vector<std::string>{"1 2 3 1 2 3", "1 3 2 1 3 2", "2 1 3 2 1 3",
                                            "2 3 1 2 3 1", "3 1 2 3 1 2", "3 2 1 3 2 1"});
}

TEST_CASE("census agrees with a full brute-force sweep at n = 3") {
  std::mt19937 rng(1);
  Graph target = alternation_graph(oracle::random_2uniform(rng, 3));
  std::int64_t expected = 0;
  for (const Word& w : oracle::all_2uniform(3))
    if (graph_check_naive(w, target).matches) ++expected;
  EnumerationReport r = run(target, 3);
  CHECK(r.total_scanned == 90);
  CHECK(r.matches == expected);
}

TEST_CASE("the 4-cycle has exactly its orbit") {
  EnumerationReport r = run(cycle_graph(4), 4, true);
  CHECK(r.total_scanned == 2520);
  CHECK(r.matches == 16);
  std::vector<std::string> expected;
  for (const Word& w : orbit(4)) expected.push_back(w.str());
  CHECK(r.words == expected);
}

TEST_CASE("the 5-cycle has exactly its orbit") {
  EnumerationReport r = run(cycle_graph(5), 5, true);
  CHECK(r.total_scanned == 113400);
  CHECK(r.matches == 20);
  std::vector<std::string> expected;
  for (const Word& w : orbit(5)) expected.push_back(w.str());
  CHECK(r.words == expected);
}

TEST_CASE("worker fan-out does not change the report") {
  EnumerationReport one = run(cycle_graph(4), 4, true, 1);
  EnumerationReport four = run(cycle_graph(4), 4, true, 4);
  CHECK(one.total_scanned == four.total_scanned);
  CHECK(one.matches == four.matches);
  CHECK(one.words == four.words);
}

TEST_CASE("guardrail and input validation") {
  CHECK_THROWS_AS(run(Graph({"1"}, {}), 0), std::invalid_argument);
  Graph c7 = cycle_graph(7);
  CHECK_THROWS_AS(run(c7, 7), std::invalid_argument);
  EnumerateOptions with_override;
  with_override.override_limit = true;
  Graph c8 = cycle_graph(8);
  CHECK_THROWS_AS(enumerate_representations(c8, 8, with_override), std::invalid_argument);
  // Vertex set must be {1..n}.
  CHECK_THROWS_AS(run(Graph({"a", "b"}, {}), 2), std::invalid_argument);
  CHECK_THROWS_AS(run(cycle_graph(4), 5), std::invalid_argument);
}

TEST_CASE("words stay empty unless collection is requested") {
  EnumerationReport r = run(cycle_graph(4), 4, false);
  CHECK(r.matches == 16);
  CHECK(r.words.empty());
}

TEST_CASE("report_text and report_json") {
  EnumerationReport r = run(Graph({"1", "2"}, {{"1", "2"}}), 2, true);
  std::string text = report_text(r);
  CHECK(text.find("n: 2\n") != std::string::npos);
  CHECK(text.find("total_scanned: 6\n") != std::string::npos);
  CHECK(text.find("matches: 2\n") != std::string::npos);
  CHECK(text.find("word: 1 2 1 2\n") != std::string::npos);
  std::string json = report_json(r);
  CHECK(json.find("\"matches\": 2") != std::string::npos);
  CHECK(json.find("\"1 2 1 2\"") != std::string::npos);
}
