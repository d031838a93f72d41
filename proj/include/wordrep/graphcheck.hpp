#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "wordrep/fenwick.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

struct CheckResult {
  bool matches = false;
  // Number of alternating letter pairs found in w, i.e. |E(G(w))|.
  // Reported even when matches is false.
  std::int64_t edgecount = 0;
  // First edge of g (in declaration order) whose letters do not alternate
  // in w, when such an edge exists.
  std::optional<std::pair<Letter, Letter>> failing_edge;
};

namespace detail {

// Scratch state for the marking scan, reusable across many words of the
// same length and alphabet size (the enumerator reruns it millions of
// times).
struct PairScan {
  PairScan(std::size_t word_length, std::size_t alphabet_size);

  // One left-to-right pass over a 2-uniform id word. When a letter closes
  // at position j with first occurrence i, the number of unmarked
  // positions strictly inside (i, j) is added to the running count and
  // both i and j are marked. Each alternating pair is counted exactly
  // once, at whichever of its letters closes first; nested and disjoint
  // pairs contribute nothing. Fills pairs[id] with each letter's
  // occurrence pair. The caller guarantees ids is 2-uniform.
  std::int64_t run(std::span<const std::int32_t> ids,
                   std::span<PositionPair> pairs);

  FenwickTree marks;
  std::vector<std::int32_t> first_seen;
};

}  // namespace detail

// |E(G(w))| for a 2-uniform word, via the single marking scan.
// Throws std::invalid_argument if w is empty or not 2-uniform.
std::int64_t count_alternating_pairs(const Word& w);

// Decides G(w) = g in O(V log V + E): the scan above yields |E(G(w))|; if
// it equals |E(g)|, every edge of g is checked in O(1) via occurrence-pair
// interleaving. Requires w 2-uniform and alphabet(w) = vertices(g); a
// mismatch is an error, not a false answer.
CheckResult graph_check(const Word& w, const Graph& g);

// G(w) by definition: vertices are w's alphabet, with an edge for every
// alternating pair. Every pair of distinct letters is tested on its
// residual letter sequence (read off the precomputed occurrence lists).
// This is the trusted naive oracle; w may have any multiplicities.
Graph alternation_graph(const Word& w);

// Oracle-based check: builds alternation_graph(w) and compares with g by
// labeled equality. Same alphabet/vertex-set requirement as graph_check;
// w need not be uniform.
CheckResult graph_check_naive(const Word& w, const Graph& g);

}  // namespace wordrep
