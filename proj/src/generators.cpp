#include "shiftlab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "shiftlab/error.hpp"

namespace shiftlab {

ChordalGraph gen_chordal(int n, int extra_isolated, std::uint64_t seed) {
  if (n < 1 || extra_isolated < 0) throw Error(ErrorCode::BadSize, "gen_chordal needs n >= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5), fresh_component(0.2);
  Graph g(n + extra_isolated);
  for (int i = 1; i < n; ++i) {
    if (fresh_component(rng)) continue;
    const int u = std::uniform_int_distribution<int>(0, i - 1)(rng);
    Face clique = Face{}.with(u);
    std::vector<int> others(static_cast<std::size_t>(i));
    std::iota(others.begin(), others.end(), 0);
    std::shuffle(others.begin(), others.end(), rng);
    for (int x : others) {
      if (clique.contains(x)) continue;
      if (clique.is_subset_of(g.neighbors(x)) && coin(rng)) clique = clique.with(x);
    }
    clique.for_each_vertex([&](int x) { g.add_edge(i, x); });
  }
  ChordalGraph out{g, {}};
  // Reverse insertion order: the earlier neighbours of each vertex form a clique.
  for (int i = n + extra_isolated - 1; i >= 0; --i) out.elimination_order.push_back(i);
  return out;
}

Graph gen_disjoint_union(const std::vector<GraphPart>& parts) {
  int total = 0;
  for (const auto& p : parts) {
    if (p.size < 1 || (p.kind == PartKind::Cycle && p.size < 3))
      throw Error(ErrorCode::BadSize, "component of size " + std::to_string(p.size));
    total += p.size;
  }
  Graph g(total);
  int base = 0;
  for (const auto& p : parts) {
    switch (p.kind) {
      case PartKind::Path:
        for (int i = 0; i + 1 < p.size; ++i) g.add_edge(base + i, base + i + 1);
        break;
      case PartKind::Cycle:
        for (int i = 0; i < p.size; ++i) g.add_edge(base + i, base + (i + 1) % p.size);
        break;
      case PartKind::Complete:
        for (int i = 0; i < p.size; ++i)
          for (int j = i + 1; j < p.size; ++j) g.add_edge(base + i, base + j);
        break;
    }
    base += p.size;
  }
  return g;
}

ThresholdGraph gen_threshold(const std::vector<ThresholdStep>& creation_word) {
  const int n = static_cast<int>(creation_word.size());
  Graph built(n);
  for (int i = 1; i < n; ++i)
    if (creation_word[i] == ThresholdStep::Dominating)
      for (int j = 0; j < i; ++j) built.add_edge(i, j);
  std::vector<int> by_degree(static_cast<std::size_t>(n));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) { return built.degree(a) < built.degree(b); });
  ThresholdGraph out{Graph(n), creation_word, std::vector<int>(static_cast<std::size_t>(n))};
  for (int pos = 0; pos < n; ++pos) out.label[by_degree[pos]] = pos;
  for (auto [u, v] : built.edges()) out.graph.add_edge(out.label[u], out.label[v]);
  return out;
}

Complex gen_uniform_matroid(int n, int k, int coloops) {
  if (k < 0 || k > n || coloops < 0) throw Error(ErrorCode::BadRank, "rank " + std::to_string(k) + " on " + std::to_string(n) + " points");
  const int total = n + coloops;
  if (total > kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "too many vertices");
  const Face apex = Face::prefix(coloops);
  std::vector<Face> facets;
  for (Face s : subsets_of_size(Face(Face::prefix(n).mask() << coloops), k)) facets.push_back(s | apex);
  return Complex::from_facets(std::move(facets), total);
}

Complex gen_cone(const Complex& base, int t) {
  if (t < 0) throw Error(ErrorCode::BadSize, "negative cone count");
  const int total = base.n_vertices() + t;
  if (total > kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "too many vertices");
  std::vector<Face> facets;
  for (Face f : base.facets()) facets.push_back(Face(f.mask() << t) | Face::prefix(t));
  return Complex::from_facets(std::move(facets), total);
}

Complex gen_borg_shape(int t, const std::vector<int>& simplex_sizes) {
  if (simplex_sizes.empty()) throw Error(ErrorCode::BadSize, "need at least one simplex");
  int total = 0;
  std::vector<Face> facets;
  for (int s : simplex_sizes) {
    if (s < 1) throw Error(ErrorCode::BadSize, "simplex size " + std::to_string(s));
    facets.push_back(Face(Face::prefix(s).mask() << total));
    total += s;
  }
  return gen_cone(Complex::from_facets(std::move(facets), total), t);
}

Complex gen_random_complex(int n, int dim, double density, std::uint64_t seed, bool allow_empty) {
  if (dim < -1 || dim >= n) throw Error(ErrorCode::BadSize, "dimension out of range");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
  std::vector<Face> facets;
  for (Face s : subsets_of_size(Face::prefix(n), dim + 1))
    if (keep(rng)) facets.push_back(s);
  if (facets.empty()) {
    if (allow_empty) return Complex::from_facets({Face{}}, n);
    throw Error(ErrorCode::EmptyInput, "no facets drawn");
  }
  return Complex::from_facets(std::move(facets), n);
}

std::vector<int> maximum_cardinality_search(const Graph& graph) {
  const int n = graph.n();
  std::vector<int> weight(static_cast<std::size_t>(n), 0), order;
  Face numbered;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!numbered.contains(v) && (best < 0 || weight[v] > weight[best])) best = v;
    numbered = numbered.with(best);
    order.push_back(best);
    (graph.neighbors(best) - numbered).for_each_vertex([&](int u) { ++weight[u]; });
  }
  return order;
}

bool is_perfect_elimination_order(const Graph& graph, const std::vector<int>& order) {
  Face eliminated;
  for (int v : order) {
    const Face later = graph.neighbors(v) - eliminated;
    bool clique = true;
    later.for_each_vertex([&](int u) { clique = clique && later.without(u).is_subset_of(graph.neighbors(u)); });
    if (!clique) return false;
    eliminated = eliminated.with(v);
  }
  return true;
}

bool is_chordal(const Graph& graph) {
  auto order = maximum_cardinality_search(graph);
  std::reverse(order.begin(), order.end());
  return is_perfect_elimination_order(graph, order);
}

}  // namespace shiftlab
