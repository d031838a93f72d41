#include "wordrep/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>

namespace wordrep {

namespace {

std::pair<std::uint32_t, std::uint32_t> normalized(std::uint32_t u, std::uint32_t v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Graph::Graph(std::vector<Letter> vertices,
             const std::vector<std::pair<Letter, Letter>>& edges) {
  vertices_ = std::move(vertices);
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_valid_letter(vertices_[i]))
      throw std::invalid_argument("invalid vertex label: '" + vertices_[i] + "'");
    auto [it, inserted] = index_.try_emplace(vertices_[i], static_cast<std::int32_t>(i));
    if (!inserted)
      throw std::invalid_argument("duplicate vertex: '" + vertices_[i] + "'");
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& [a, b] : edges) {
    std::int32_t ia = vertex_index(a);
    std::int32_t ib = vertex_index(b);
    if (ia < 0) throw std::invalid_argument("unknown vertex in edge: '" + a + "'");
    if (ib < 0) throw std::invalid_argument("unknown vertex in edge: '" + b + "'");
    if (ia == ib) throw std::invalid_argument("self-loop on vertex: '" + a + "'");
    auto key = normalized(static_cast<std::uint32_t>(ia), static_cast<std::uint32_t>(ib));
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate edge: " + a + " " + b);
    edges_.emplace_back(static_cast<std::uint32_t>(ia), static_cast<std::uint32_t>(ib));
  }
}

std::int32_t Graph::vertex_index(std::string_view token) const {
  auto it = index_.find(token);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<Letter, Letter>> Graph::edges() const {
  std::vector<std::pair<Letter, Letter>> out;
  out.reserve(edges_.size());
  for (const auto& [u, v] : edges_) out.emplace_back(vertices_[u], vertices_[v]);
  return out;
}

bool Graph::has_edge(std::string_view u, std::string_view v) const {
  std::int32_t iu = vertex_index(u);
  std::int32_t iv = vertex_index(v);
  if (iu < 0 || iv < 0 || iu == iv) return false;
  auto key = normalized(static_cast<std::uint32_t>(iu), static_cast<std::uint32_t>(iv));
  for (const auto& [a, b] : edges_)
    if (normalized(a, b) == key) return true;
  return false;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<Letter> verts;
  verts.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) verts.push_back(std::to_string(k));
  std::vector<std::pair<Letter, Letter>> edges;
  edges.reserve(n);
  for (std::size_t k = 1; k < n; ++k)
    edges.emplace_back(std::to_string(k), std::to_string(k + 1));
  edges.emplace_back(std::to_string(n), "1");
  return Graph(std::move(verts), edges);
}

bool graph_equal(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  std::vector<Letter> va = a.vertices(), vb = b.vertices();
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  if (va != vb) return false;
  auto canonical_edges = [](const Graph& g) {
    std::vector<std::pair<Letter, Letter>> es = g.edges();
    for (auto& [u, v] : es)
      if (v < u) std::swap(u, v);
    std::sort(es.begin(), es.end());
    return es;
  };
  return canonical_edges(a) == canonical_edges(b);
}

Graph parse_graph(std::string_view text) {
  std::vector<Letter> verts;
  std::set<Letter> vert_set;
  std::vector<std::pair<Letter, Letter>> edges;
  std::set<std::pair<Letter, Letter>> edge_set;
  bool have_header = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    bool last = eol == std::string_view::npos;
    if (last) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++lineno;
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<std::string> toks = split_ws(line);
    if (!toks.empty()) {
      if (!have_header) {
        if (toks[0] != "vertices:")
          parse_fail(lineno, "expected 'vertices:' header, got '" + toks[0] + "'");
        for (std::size_t i = 1; i < toks.size(); ++i) {
          if (!is_valid_letter(toks[i]))
            parse_fail(lineno, "invalid vertex label '" + toks[i] + "'");
          if (!vert_set.insert(toks[i]).second)
            parse_fail(lineno, "duplicate vertex '" + toks[i] + "'");
          verts.push_back(toks[i]);
        }
        have_header = true;
      } else {
        if (toks.size() != 2)
          parse_fail(lineno, "malformed edge line (expected two tokens)");
        const Letter& u = toks[0];
        const Letter& v = toks[1];
        if (vert_set.find(u) == vert_set.end()) parse_fail(lineno, "unknown vertex '" + u + "'");
        if (vert_set.find(v) == vert_set.end()) parse_fail(lineno, "unknown vertex '" + v + "'");
        if (u == v) parse_fail(lineno, "self-loop '" + u + " " + v + "'");
        auto key = u < v ? std::pair{u, v} : std::pair{v, u};
        if (!edge_set.insert(key).second)
          parse_fail(lineno, "duplicate edge '" + u + " " + v + "'");
        edges.emplace_back(u, v);
      }
    }
    if (last) break;
  }
  if (!have_header) throw std::runtime_error("missing 'vertices:' header line");
  return Graph(std::move(verts), edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out = "vertices:";
  for (const auto& v : g.vertices()) {
    out += ' ';
    out += v;
  }
  out += '\n';
  for (const auto& [u, v] : g.edges()) {
    out += u;
    out += ' ';
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace wordrep
