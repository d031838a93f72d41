// Brute-force reference implementations used only by tests. Each one works
// straight from a definition and deliberately shares no logic with the
// library code it is checking.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace oracle {

// Strict alternation of a and b read off the letter sequence: keep only
// their occurrences and reject equal neighbors. Callers guarantee both
// letters occur.
inline bool alternates(const std::vector<std::string>& letters, const std::string& a,
                       const std::string& b) {
  const std::string* last = nullptr;
  for (const auto& t : letters) {
    if (t != a && t != b) continue;
    if (last != nullptr && t == *last) return false;
    last = &t;
  }
  return last != nullptr;
}

// Edge set of G(w) from the definition, as canonical (min, max) pairs.
inline std::set<std::pair<std::string, std::string>> alternation_edges(const wordrep::Word& w) {
  const std::vector<std::string> letters = w.letters();
  const std::vector<std::string>& alpha = w.alphabet();
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      if (alternates(letters, alpha[i], alpha[j]))
        out.insert(std::minmax(alpha[i], alpha[j]));
  return out;
}

// Chord crossings of a 2-uniform word, counted pairwise: chords a and b
// cross iff exactly one of b's endpoints lies strictly between a's.
inline std::int64_t crossing_count(const wordrep::Word& w) {
  const std::vector<std::string> letters = w.letters();
  const std::vector<std::string>& alpha = w.alphabet();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j) {
      std::vector<std::size_t> pa, pb;
      for (std::size_t k = 0; k < letters.size(); ++k) {
        if (letters[k] == alpha[i]) pa.push_back(k);
        if (letters[k] == alpha[j]) pb.push_back(k);
      }
      int between = 0;
      for (std::size_t p : pb)
        if (pa[0] < p && p < pa[1]) ++between;
      if (between == 1) ++count;
    }
  return count;
}

// Plain-array stand-in for FenwickTree on legal, possibly empty ranges.
struct SlowPrefix {
  explicit SlowPrefix(std::size_t n) : cells(n, 0) {}
  void update(std::size_t i, std::int64_t d) { cells[i] += d; }
  std::int64_t rangesum(std::size_t lo, std::size_t hi) const {
    std::int64_t s = 0;
    for (std::size_t i = lo; i <= hi && i < cells.size(); ++i) s += cells[i];
    return s;
  }
  std::vector<std::int64_t> cells;
};

// Uniformly random 2-uniform word on the alphabet {"1".."n"}.
inline wordrep::Word random_2uniform(std::mt19937& rng, std::size_t n) {
  std::vector<std::string> letters;
  letters.reserve(2 * n);
  for (std::size_t v = 1; v <= n; ++v) {
    letters.push_back(std::to_string(v));
    letters.push_back(std::to_string(v));
  }
  std::shuffle(letters.begin(), letters.end(), rng);
  return wordrep::Word(letters);
}

// Every 2-uniform word on {"1".."n"} by multiset permutation. Practical
// for n <= 4 ((2n)!/2^n grows fast).
inline std::vector<wordrep::Word> all_2uniform(std::size_t n) {
  std::vector<int> ids;
  for (std::size_t v = 0; v < n; ++v) {
    ids.push_back(static_cast<int>(v));
    ids.push_back(static_cast<int>(v));
  }
  std::vector<wordrep::Word> out;
  do {
    std::vector<std::string> letters;
    letters.reserve(ids.size());
    for (int id : ids) letters.push_back(std::to_string(id + 1));
    out.emplace_back(letters);
  } while (std::next_permutation(ids.begin(), ids.end()));
  return out;
}

// Flips one uniformly chosen vertex pair: removes the edge if present,
// inserts it otherwise.
inline wordrep::Graph mutate_one_edge(const wordrep::Graph& g, std::mt19937& rng) {
  const auto& verts = g.vertices();
  std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
  std::size_t i = pick(rng), j = pick(rng);
  while (j == i) j = pick(rng);
  const std::string &u = verts[i], &v = verts[j];

  std::vector<std::pair<std::string, std::string>> edges;
  bool removed = false;
  for (const auto& [a, b] : g.edges()) {
    if ((a == u && b == v) || (a == v && b == u)) {
      removed = true;
      continue;
    }
    edges.emplace_back(a, b);
  }
  if (!removed) edges.emplace_back(u, v);
  return wordrep::Graph(verts, edges);
}

}  // namespace oracle
