#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Census of the 2-uniform words on {"1".."n"} that represent a target
// graph. total_scanned equals (2n)!/2^n when the full space is covered.
struct EnumerationReport {
  std::size_t n = 0;
  std::int64_t total_scanned = 0;
  std::int64_t matches = 0;
  // Matching words (space-separated tokens), sorted; filled on request.
  std::vector<std::string> words;
  std::int64_t elapsed_ms = 0;
};

struct EnumerateOptions {
  bool collect_words = false;
  // Raises the n guardrail from 6 to 7 (the n = 7 space has ~6.8e8
  // candidates).
  bool override_limit = false;
  // 0 means use available hardware parallelism.
  unsigned workers = 0;
};

// Exhaustively generates every 2-uniform word on {"1".."n"} (assigning
// letters to position pairs, so each word appears exactly once) and tests
// each with the two-phase check used by graph_check. The candidate space
// is partitioned over worker threads; the merged report is deterministic.
// Throws std::invalid_argument if g's vertex set is not {"1".."n"} or n
// exceeds the guardrail.
EnumerationReport enumerate_representations(const Graph& g, std::size_t n,
                                            const EnumerateOptions& opts = {});

// "key: value" lines, followed by one "word: ..." line per collected word.
std::string report_text(const EnumerationReport& r);
// JSON document with fields n, total_scanned, matches, words, elapsed_ms.
std::string report_json(const EnumerationReport& r);

}  // namespace wordrep
