#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "wordrep/cycles.hpp"
#include "wordrep/graphcheck.hpp"

using namespace wordrep;

TEST_CASE("count_alternating_pairs on cycle words") {
  CHECK(count_alternating_pairs(gen_cycle_word(4)) == 4);
  CHECK(count_alternating_pairs(gen_cycle_word(5)) == 5);
  CHECK(count_alternating_pairs(gen_cycle_word(100)) == 100);
  CHECK(count_alternating_pairs(Word::from_compact("1212")) == 1);
  CHECK(count_alternating_pairs(Word::from_compact("1122")) == 0);
  CHECK(count_alternating_pairs(Word::from_compact("1221")) == 0);
  CHECK_THROWS_AS(count_alternating_pairs(Word::from_compact("121")), std::invalid_argument);
  CHECK_THROWS_AS(count_alternating_pairs(Word()), std::invalid_argument);
}

TEST_CASE("count_alternating_pairs equals the brute-force crossing count") {
  std::mt19937 rng(7);
  for (int round = 0; round < 500; ++round) {
    std::size_t n = 1 + rng() % 12;
    Word w = oracle::random_2uniform(rng, n);
    REQUIRE(count_alternating_pairs(w) == oracle::crossing_count(w));
  }
}

TEST_CASE("graph_check accepts the cycle word against its cycle") {
  CheckResult r = graph_check(gen_cycle_word(5), cycle_graph(5));
  CHECK(r.matches);
  CHECK(r.edgecount == 5);
  CHECK_FALSE(r.failing_edge.has_value());
}

TEST_CASE("graph_check rejects on edge count with no failing edge named") {
  // C_5 plus the chord (1,3): six edges against five alternating pairs.
  Graph g({"1", "2", "3", "4", "5"},
          {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}, {"1", "3"}});
  CheckResult r = graph_check(gen_cycle_word(5), g);
  CHECK_FALSE(r.matches);
  CHECK(r.edgecount == 5);
  CHECK_FALSE(r.failing_edge.has_value());
}

TEST_CASE("graph_check names the first non-alternating edge in declaration order") {
  // Same edge count as C_5 but (2,3) replaced by the chord (1,3).
  Graph g({"1", "2", "3", "4", "5"},
          {{"1", "2"}, {"1", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}});
  CheckResult r = graph_check(gen_cycle_word(5), g);
  CHECK_FALSE(r.matches);
  CHECK(r.edgecount == 5);
  REQUIRE(r.failing_edge.has_value());
  CHECK(*r.failing_edge == std::pair<Letter, Letter>{"1", "3"});
}

TEST_CASE("graph_check validates its inputs") {
  CHECK_THROWS_AS(graph_check(Word::from_compact("121"), cycle_graph(3)), std::invalid_argument);
  CHECK_THROWS_AS(graph_check(Word(), cycle_graph(3)), std::invalid_argument);
  // Alphabet {1,2,3,4} vs vertices {1,2,3}.
  CHECK_THROWS_AS(graph_check(gen_cycle_word(4), cycle_graph(3)), std::invalid_argument);
  Graph renamed({"a", "b", "c", "d"}, {});
  CHECK_THROWS_AS(graph_check(gen_cycle_word(4), renamed), std::invalid_argument);
}

TEST_CASE("the 14-letter figure word represents the 7-path, not the 7-cycle") {
  // Alternating pairs of 12132546576734: all (k, k+1), but 1 and 7 do not
  // alternate (residual 1 1 7 7 7 ... -> 1 1 7 7). Frozen after checking
  // the residuals by hand and against the naive oracle.
  Word w = Word::from_compact("12132546576734");
  CHECK(count_alternating_pairs(w) == 6);

  CheckResult vs_cycle = graph_check(w, cycle_graph(7));
  CHECK_FALSE(vs_cycle.matches);
  CHECK(vs_cycle.edgecount == 6);

  std::vector<Letter> verts = {"1", "2", "3", "4", "5", "6", "7"};
  std::vector<std::pair<Letter, Letter>> path_edges;
  for (int k = 1; k < 7; ++k)
    path_edges.emplace_back(std::to_string(k), std::to_string(k + 1));
  Graph p7(verts, path_edges);
  CheckResult vs_path = graph_check(w, p7);
  CHECK(vs_path.matches);
  CHECK(graph_check_naive(w, p7).matches);
  CHECK_FALSE(graph_check_naive(w, cycle_graph(7)).matches);
}

TEST_CASE("alternation_graph matches the definition") {
  Word w = Word::from_compact("bcabadc");
  Graph g = alternation_graph(w);
  CHECK(g.vertices() == std::vector<Letter>{"b", "c", "a", "d"});
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge("a", "b"));
  CHECK(g.has_edge("b", "c"));
  CHECK(g.has_edge("c", "d"));

  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    std::size_t n = 1 + rng() % 10;
    Word r = oracle::random_2uniform(rng, n);
    Graph got = alternation_graph(r);
    auto want = oracle::alternation_edges(r);
    REQUIRE(got.edge_count() == want.size());
    for (const auto& [u, v] : want) REQUIRE(got.has_edge(u, v));
  }
}

TEST_CASE("alternation_graph handles non-uniform words") {
  // abbcabc: a,c alternate; a,b and b,c do not.
  Graph g = alternation_graph(Word::from_compact("abbcabc"));
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge("a", "c"));
  CHECK(alternation_graph(Word()).vertex_count() == 0);
  CHECK(alternation_graph(Word::from_compact("aaa")).vertex_count() == 1);
}

TEST_CASE("graph_check_naive agrees with its own graph and flags mismatches") {
  Word w = Word::from_compact("abbcabc");
  Graph right({"a", "b", "c"}, {{"a", "c"}});
  Graph wrong({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  CHECK(graph_check_naive(w, right).matches);
  CheckResult r = graph_check_naive(w, wrong);
  CHECK_FALSE(r.matches);
  CHECK(r.edgecount == 1);
  REQUIRE(r.failing_edge.has_value());
  CHECK(*r.failing_edge == std::pair<Letter, Letter>{"b", "c"});

  // Mismatch caused only by a missing edge in g: no failing edge to name.
  CheckResult missing = graph_check_naive(w, Graph({"a", "b", "c"}, {}));
  CHECK_FALSE(missing.matches);
  CHECK_FALSE(missing.failing_edge.has_value());

  CHECK(graph_check_naive(Word(), Graph({}, {})).matches);
  CHECK_THROWS_AS(graph_check_naive(w, cycle_graph(3)), std::invalid_argument);
}

TEST_CASE("fenwick and naive checks agree on randomized graphs") {
  std::mt19937 rng(23);
  for (int round = 0; round < 300; ++round) {
    std::size_t n = 2 + rng() % 10;
    Word w = oracle::random_2uniform(rng, n);
    Graph gw = alternation_graph(w);
    CHECK(graph_check(w, gw).matches);
    CHECK(graph_check_naive(w, gw).matches);

    Graph mutated = oracle::mutate_one_edge(gw, rng);
    CheckResult fast = graph_check(w, mutated);
    CheckResult naive = graph_check_naive(w, mutated);
    REQUIRE_FALSE(fast.matches);
    REQUIRE_FALSE(naive.matches);
    REQUIRE(fast.edgecount == naive.edgecount);
  }
}

TEST_CASE("the scan stays within its fenwick operation budget") {
  Word w = gen_cycle_word(50);  // length 100, 50 letters
  detail::PairScan scan(w.length(), w.alphabet_size());
  std::vector<PositionPair> pairs(w.alphabet_size());
  std::int64_t count = scan.run(w.ids(), pairs);
  CHECK(count == 50);
  CHECK(scan.marks.update_count() == 100);  // two marks per letter
  CHECK(scan.marks.query_count() == 50);    // one range query per close
}
