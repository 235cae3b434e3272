#pragma once

#include <utility>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/face.hpp"

namespace shiftlab {

// A simple undirected graph on {0, ..., n-1} with bitmask adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adjacency_.size()); }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adjacency_[u].contains(v); }
  Face neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return adjacency_[v].size(); }
  std::vector<std::pair<int, int>> edges() const;
  bool is_independent(Face set) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<Face> adjacency_;
};

// Facets are the maximal independent sets.
Complex independence_complex(const Graph& graph);

}  // namespace shiftlab
