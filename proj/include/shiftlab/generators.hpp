#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/graph.hpp"

namespace shiftlab {

// Chordal graph with the elimination order that certifies it.
struct ChordalGraph {
  Graph graph;
  // Perfect elimination ordering: each vertex's later neighbours form a clique.
  std::vector<int> elimination_order;
};

// Random chordal graph on n vertices built by inserting vertices whose earlier
// neighbourhood is a clique, followed by `extra_isolated` isolated vertices.
ChordalGraph gen_chordal(int n, int extra_isolated, std::uint64_t seed);

enum class PartKind { Path, Cycle, Complete };

struct GraphPart {
  PartKind kind;
  int size;
};

// Throws BadSize for sizes below 1 (below 3 for cycles).
Graph gen_disjoint_union(const std::vector<GraphPart>& parts);

enum class ThresholdStep { Isolated, Dominating };

struct ThresholdGraph {
  Graph graph;
  std::vector<ThresholdStep> creation_word;
  // label[i] is the output vertex of the i-th created vertex; labels ascend by degree so
  // the independence complex is shifted in the ambient order.
  std::vector<int> label;
};

ThresholdGraph gen_threshold(const std::vector<ThresholdStep>& creation_word);

// Coloops are vertices 0..coloops-1; facets are every k-subset of the remaining n
// vertices joined with all coloops. Throws BadRank unless 0 <= k <= n.
Complex gen_uniform_matroid(int n, int k, int coloops);

// t new apex vertices 0..t-1 joined to every facet; old vertex v becomes v + t.
Complex gen_cone(const Complex& base, int t);
// t-fold cone over the disjoint union of simplices with the given vertex counts.
Complex gen_borg_shape(int t, const std::vector<int>& simplex_sizes);

// Each (dim+1)-subset of n vertices is a facet with probability `density`. If nothing is
// drawn, returns {∅} when allow_empty and throws EmptyInput otherwise.
Complex gen_random_complex(int n, int dim, double density, std::uint64_t seed, bool allow_empty = false);

// Maximum cardinality search order (reverse is a PEO iff the graph is chordal).
std::vector<int> maximum_cardinality_search(const Graph& graph);
bool is_perfect_elimination_order(const Graph& graph, const std::vector<int>& order);
bool is_chordal(const Graph& graph);

}  // namespace shiftlab
