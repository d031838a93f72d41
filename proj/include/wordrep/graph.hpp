#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wordrep/word.hpp"

namespace wordrep {

// Labeled undirected simple graph. Vertex labels are letter tokens. Edges
// are kept in declaration order (diagnostics report the first offending
// edge in that order); equality is set-based on labels.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Letter> vertices,
        const std::vector<std::pair<Letter, Letter>>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Letter>& vertices() const { return vertices_; }
  // Index of a vertex label, or -1 if absent.
  std::int32_t vertex_index(std::string_view token) const;

  // Edges in declaration order, endpoints as declared.
  std::vector<std::pair<Letter, Letter>> edges() const;
  std::span<const std::pair<std::uint32_t, std::uint32_t>> edge_indices() const {
    return edges_;
  }
  bool has_edge(std::string_view u, std::string_view v) const;

 private:
  std::vector<Letter> vertices_;
  detail::TokenIndex index_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

// The cycle graph on vertices "1".."n" with edges (k, k+1) and (n, 1).
// Throws std::invalid_argument for n < 3.
Graph cycle_graph(std::size_t n);

// Labeled equality: identical vertex sets and identical edge sets
// (unordered pairs). No isomorphism testing.
bool graph_equal(const Graph& a, const Graph& b);

// Edge-list text format:
//   # comment
//   vertices: 1 2 3 4
//   1 2
//   2 3
// The first significant line declares the vertex set; every following line
// declares one undirected edge. Malformed lines, unknown vertices,
// self-loops and duplicate edges raise std::runtime_error with the line
// number.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace wordrep
