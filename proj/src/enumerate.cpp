#include "wordrep/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "wordrep/graphcheck.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

namespace {

constexpr std::size_t kDefaultLimit = 6;
constexpr std::size_t kOverrideLimit = 7;

// Edges of the target as 0-based letter values.
std::vector<std::pair<int, int>> target_edges(const Graph& g, std::size_t n) {
  if (g.vertex_count() != n)
    throw std::invalid_argument("enumerate_representations: graph vertex set is not {1..n}");
  for (std::size_t v = 1; v <= n; ++v)
    if (g.vertex_index(std::to_string(v)) < 0)
      throw std::invalid_argument("enumerate_representations: graph vertex set is not {1..n}");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges())
    edges.emplace_back(std::stoi(u) - 1, std::stoi(v) - 1);
  return edges;
}

struct WorkerState {
  WorkerState(std::size_t n, const std::vector<std::pair<int, int>>& edges,
              bool collect)
      : n(n),
        len(2 * n),
        edges(edges),
        collect(collect),
        ids(len, -1),
        chords(n),
        scratch(n),
        scan(len, n) {}

  std::size_t n;
  std::size_t len;
  const std::vector<std::pair<int, int>>& edges;
  bool collect;

  std::vector<std::int32_t> ids;  // position -> letter value, -1 when free
  std::uint32_t used = 0;         // letter bitmask
  std::vector<PositionPair> chords;
  std::vector<PositionPair> scratch;
  detail::PairScan scan;

  std::int64_t scanned = 0;
  std::int64_t matched = 0;
  std::vector<std::string> words;

  void test_candidate() {
    ++scanned;
    std::int64_t count = scan.run(ids, scratch);
    if (count != static_cast<std::int64_t>(edges.size())) return;
    for (const auto& [u, v] : edges)
      if (!pairs_interleave(chords[static_cast<std::size_t>(u)],
                            chords[static_cast<std::size_t>(v)]))
        return;
    ++matched;
    if (collect) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) {
        if (i > 0) s += ' ';
        s += std::to_string(ids[i] + 1);
      }
      words.push_back(std::move(s));
    }
  }

  void assign(std::size_t p, std::size_t q, int letter) {
    ids[p] = letter;
    ids[q] = letter;
    used |= 1u << letter;
    chords[static_cast<std::size_t>(letter)] =
        PositionPair{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)};
  }

  void unassign(std::size_t p, std::size_t q, int letter) {
    ids[p] = -1;
    ids[q] = -1;
    used &= ~(1u << letter);
  }

  // Pairs the lowest free position with every free partner and every
  // unused letter; each 2-uniform word is produced exactly once.
  void recurse(std::size_t from) {
    std::size_t p = from;
    while (p < len && ids[p] >= 0) ++p;
    if (p == len) {
      test_candidate();
      return;
    }
    for (std::size_t q = p + 1; q < len; ++q) {
      if (ids[q] >= 0) continue;
      for (int letter = 0; letter < static_cast<int>(n); ++letter) {
        if (used & (1u << letter)) continue;
        assign(p, q, letter);
        recurse(p + 1);
        unassign(p, q, letter);
      }
    }
  }
};

}  // namespace

EnumerationReport enumerate_representations(const Graph& g, std::size_t n,
                                            const EnumerateOptions& opts) {
  if (n == 0) throw std::invalid_argument("enumerate_representations: need n >= 1");
  const std::size_t limit = opts.override_limit ? kOverrideLimit : kDefaultLimit;
  if (n > limit)
    throw std::invalid_argument(
        "enumerate_representations: n = " + std::to_string(n) + " exceeds the guardrail (" +
        std::to_string(limit) + "); the candidate space grows as (2n)!/2^n");
  std::vector<std::pair<int, int>> edges = target_edges(g, n);

  const auto t0 = std::chrono::steady_clock::now();

  unsigned workers = opts.workers != 0 ? opts.workers
                                       : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t len = 2 * n;
  // Top-level branches: the partner and letter choices for position 0.
  const std::size_t branches = (len - 1) * n;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, branches));

  std::vector<WorkerState> states;
  states.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) states.emplace_back(n, edges, opts.collect_words);

  std::atomic<std::size_t> next{0};
  auto body = [&](WorkerState& st) {
    for (;;) {
      std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= branches) break;
      std::size_t q = 1 + b / n;
      int letter = static_cast<int>(b % n);
      st.assign(0, q, letter);
      st.recurse(1);
      st.unassign(0, q, letter);
    }
  };

  if (workers == 1) {
    body(states[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) threads.emplace_back(body, std::ref(states[i]));
    for (auto& t : threads) t.join();
  }

  EnumerationReport rep;
  rep.n = n;
  for (auto& st : states) {
    rep.total_scanned += st.scanned;
    rep.matches += st.matched;
    for (auto& w : st.words) rep.words.push_back(std::move(w));
  }
  std::sort(rep.words.begin(), rep.words.end());
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

std::string report_text(const EnumerationReport& r) {
  std::string out;
  out += "n: " + std::to_string(r.n) + "\n";
  out += "total_scanned: " + std::to_string(r.total_scanned) + "\n";
  out += "matches: " + std::to_string(r.matches) + "\n";
  out += "elapsed_ms: " + std::to_string(r.elapsed_ms) + "\n";
  for (const auto& w : r.words) out += "word: " + w + "\n";
  return out;
}

std::string report_json(const EnumerationReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["total_scanned"] = r.total_scanned;
  j["matches"] = r.matches;
  j["words"] = r.words;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2);
}

}  // namespace wordrep
