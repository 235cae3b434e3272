#include "shiftlab/graph.hpp"

#include <string>

#include "shiftlab/error.hpp"

namespace shiftlab {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "graph order " + std::to_string(n));
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) throw Error(ErrorCode::VertexOutOfRange, "edge endpoint");
  if (u == v) throw Error(ErrorCode::BadSize, "loops are not allowed");
  adjacency_[u] = adjacency_[u].with(v);
  adjacency_[v] = adjacency_[v].with(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u)
    adjacency_[u].for_each_vertex([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

bool Graph::is_independent(Face set) const {
  bool ok = true;
  set.for_each_vertex([&](int v) { ok = ok && !adjacency_[v].meets(set); });
  return ok;
}

namespace {

// Bron-Kerbosch with pivoting on the complement: maximal cliques there are the maximal
// independent sets here.
void maximal_independent(const Graph& g, Face chosen, Face candidates, Face excluded, std::vector<Face>& out) {
  if (candidates.empty() && excluded.empty()) {
    out.push_back(chosen);
    return;
  }
  const Face all = Face::prefix(g.n());
  auto non_neighbors = [&](int v) { return (all - g.neighbors(v)).without(v); };
  const int pivot = (candidates | excluded).min();
  const Face branch = candidates - non_neighbors(pivot);
  branch.for_each_vertex([&](int v) {
    const Face nn = non_neighbors(v);
    maximal_independent(g, chosen.with(v), candidates & nn, excluded & nn, out);
    candidates = candidates.without(v);
    excluded = excluded.with(v);
  });
}

}  // namespace

Complex independence_complex(const Graph& graph) {
  std::vector<Face> facets;
  maximal_independent(graph, Face{}, Face::prefix(graph.n()), Face{}, facets);
  return Complex::from_facets(std::move(facets), graph.n());
}

}  // namespace shiftlab
