#include "wordrep/graphcheck.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace wordrep {

namespace detail {

PairScan::PairScan(std::size_t word_length, std::size_t alphabet_size)
    : marks(word_length == 0 ? 1 : word_length),
      first_seen(alphabet_size, -1) {}

std::int64_t PairScan::run(std::span<const std::int32_t> ids,
                           std::span<PositionPair> pairs) {
  marks.reset();
  std::fill(first_seen.begin(), first_seen.end(), -1);
  std::int64_t edgecount = 0;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const auto id = static_cast<std::size_t>(ids[k]);
    if (first_seen[id] < 0) {
      first_seen[id] = static_cast<std::int32_t>(k);
    } else {
      const std::size_t i = static_cast<std::size_t>(first_seen[id]);
      const std::size_t j = k;
      edgecount += static_cast<std::int64_t>(j - i) - marks.rangesum(i + 1, j - 1) - 1;
      marks.update(i, 1);
      marks.update(j, 1);
      pairs[id] = PositionPair{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
    }
  }
  return edgecount;
}

}  // namespace detail

namespace {

void require_2uniform(const Word& w, const char* who) {
  if (w.empty()) throw std::invalid_argument(std::string(who) + ": word is empty");
  if (!is_k_uniform(w, 2))
    throw std::invalid_argument(std::string(who) + ": word is not 2-uniform");
}

// Canonical decimal label ("1".."n" style, no leading zeros) as a value,
// capped so the direct table below stays small.
bool numeric_label(std::string_view t, std::size_t cap, std::size_t& out) {
  if (t.empty() || t.size() > 7 || t[0] == '0') return false;
  std::size_t v = 0;
  for (char c : t) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  if (v > cap) return false;
  out = v;
  return true;
}

// Word letter id for every graph vertex index. Rejects any
// alphabet/vertex-set difference. Fully numeric alphabets (every cycle
// graph and every enumerator target) resolve through a direct value table;
// anything else goes through the hash map.
std::vector<std::int32_t> map_vertices_to_ids(const Word& w, const Graph& g,
                                              const char* who) {
  if (w.alphabet_size() != g.vertex_count())
    throw std::invalid_argument(std::string(who) +
                                ": word alphabet and graph vertex set differ in size");
  const auto& verts = g.vertices();
  std::vector<std::int32_t> ids(verts.size());
  auto missing = [&](const Letter& v) {
    return std::invalid_argument(std::string(who) + ": graph vertex '" + v +
                                 "' does not occur in the word");
  };

  const std::size_t cap = 2 * verts.size() + 1;
  std::vector<std::int32_t> byvalue(cap + 1, -1);
  bool numeric = true;
  for (std::size_t id = 0; id < w.alphabet_size(); ++id) {
    std::size_t v;
    if (!numeric_label(w.token_of(static_cast<std::int32_t>(id)), cap, v)) {
      numeric = false;
      break;
    }
    byvalue[v] = static_cast<std::int32_t>(id);  // canonical numerals never collide
  }
  if (numeric) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
      std::size_t v;
      if (!numeric_label(verts[i], cap, v) || byvalue[v] < 0) throw missing(verts[i]);
      ids[i] = byvalue[v];
    }
    return ids;
  }

  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::int32_t id = w.id_of(verts[i]);
    if (id < 0) throw missing(verts[i]);
    ids[i] = id;
  }
  return ids;
}

// Strict alternation of two occurrence lists, read as the residual word.
bool occurrences_alternate(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
  std::size_t ia = 0, ib = 0;
  int last = -1;  // 0 = from a, 1 = from b
  while (ia < a.size() || ib < b.size()) {
    int src = (ib == b.size() || (ia < a.size() && a[ia] < b[ib])) ? 0 : 1;
    if (src == last) return false;
    last = src;
    if (src == 0)
      ++ia;
    else
      ++ib;
  }
  return last != -1;
}

}  // namespace

std::int64_t count_alternating_pairs(const Word& w) {
  require_2uniform(w, "count_alternating_pairs");
  detail::PairScan scan(w.length(), w.alphabet_size());
  std::vector<PositionPair> pairs(w.alphabet_size());
  return scan.run(w.ids(), pairs);
}

CheckResult graph_check(const Word& w, const Graph& g) {
  require_2uniform(w, "graph_check");
  std::vector<std::int32_t> vid = map_vertices_to_ids(w, g, "graph_check");

  detail::PairScan scan(w.length(), w.alphabet_size());
  std::vector<PositionPair> pairs(w.alphabet_size());
  CheckResult res;
  res.edgecount = scan.run(w.ids(), pairs);

  if (res.edgecount != static_cast<std::int64_t>(g.edge_count())) {
    res.matches = false;
    return res;
  }
  for (const auto& [u, v] : g.edge_indices()) {
    if (!pairs_interleave(pairs[static_cast<std::size_t>(vid[u])],
                          pairs[static_cast<std::size_t>(vid[v])])) {
      res.matches = false;
      res.failing_edge = {g.vertices()[u], g.vertices()[v]};
      return res;
    }
  }
  res.matches = true;
  return res;
}

Graph alternation_graph(const Word& w) {
  const std::size_t m = w.alphabet_size();
  std::vector<std::pair<Letter, Letter>> edges;

  bool uniform2 = is_k_uniform(w, 2);
  if (uniform2 && m > 0) {
    // All occurrence lists have length two; the alternation test reduces
    // to occurrence-pair interleaving.
    std::vector<std::uint32_t> first(m), second(m);
    for (std::size_t id = 0; id < m; ++id) {
      const auto& occ = w.occurrences(static_cast<std::int32_t>(id));
      first[id] = occ[0];
      second[id] = occ[1];
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        bool cross = (first[a] < first[b] && first[b] < second[a] && second[a] < second[b]) ||
                     (first[b] < first[a] && first[a] < second[b] && second[b] < second[a]);
        if (cross)
          edges.emplace_back(w.token_of(static_cast<std::int32_t>(a)),
                             w.token_of(static_cast<std::int32_t>(b)));
      }
  } else {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (occurrences_alternate(w.occurrences(static_cast<std::int32_t>(a)),
                                  w.occurrences(static_cast<std::int32_t>(b))))
          edges.emplace_back(w.token_of(static_cast<std::int32_t>(a)),
                             w.token_of(static_cast<std::int32_t>(b)));
  }
  return Graph(w.alphabet(), edges);
}

CheckResult graph_check_naive(const Word& w, const Graph& g) {
  if (w.empty() && g.vertex_count() == 0) return CheckResult{true, 0, {}};
  (void)map_vertices_to_ids(w, g, "graph_check_naive");

  Graph gw = alternation_graph(w);
  CheckResult res;
  res.edgecount = static_cast<std::int64_t>(gw.edge_count());
  res.matches = graph_equal(gw, g);
  if (!res.matches) {
    for (const auto& [u, v] : g.edges()) {
      if (!occurrences_alternate(w.occurrences(w.id_of(u)), w.occurrences(w.id_of(v)))) {
        res.failing_edge = {u, v};
        break;
      }
    }
  }
  return res;
}

}  // namespace wordrep
