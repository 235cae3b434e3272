#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "shiftlab/face.hpp"

namespace shiftlab {

// A finite nonempty simplicial complex on the vertex universe {0, ..., n-1}, stored by
// its facets. Immutable; face lists per cardinality are built lazily and shared between
// copies.
class Complex {
 public:
  // Keeps the inclusion-maximal sets. Throws EmptyInput on an empty list and
  // VertexOutOfRange for indices >= n_vertices.
  static Complex from_facets(std::vector<Face> sets, int n_vertices);
  static Complex simplex(int n_vertices);
  // The boundary of the simplex on `n_vertices` vertices.
  static Complex simplex_boundary(int n_vertices);

  int n_vertices() const { return n_; }
  // Facets in lexicographic order.
  const std::vector<Face>& facets() const { return facets_; }
  int dim() const;
  // Union of all faces.
  Face vertex_set() const;
  int min_facet_size() const;

  bool contains(Face face) const;
  bool is_simplex() const { return facets_.size() == 1; }

  // F_k: the k-element faces in lexicographic order. Empty for k beyond dim + 1.
  const std::vector<Face>& faces(int k) const;
  std::size_t f(int k) const { return faces(k).size(); }
  // (f_0, ..., f_{dim+1}) with f_0 = 1.
  std::vector<std::size_t> f_vector() const;
  // Every face, grouped by cardinality.
  std::vector<Face> all_faces() const;

  bool operator==(const Complex& o) const { return n_ == o.n_ && facets_ == o.facets_; }

 private:
  struct Cache;
  Complex(std::vector<Face> facets, int n);

  int n_ = 0;
  std::vector<Face> facets_;
  std::shared_ptr<Cache> cache_;
};

Complex link(const Complex& complex, Face face);
Complex deletion(const Complex& complex, int vertex);
// Faces of dimension at most d.
Complex skeleton(const Complex& complex, int d);
int min_facet_size(const Complex& complex);

// Closure under inclusion of an arbitrary list of faces.
Complex closure(std::span<const Face> faces, int n_vertices);

// Whether A \ w u v_i is a member for every member A, prefix vertex v_i not in A and
// w in A outside {v_1, ..., v_i}. With the full vertex order this is ordinary
// shiftedness.
bool is_shifted_wrt(const SetFamily& family, const VertexPrefix& prefix);
bool is_shifted_wrt(const Complex& complex, const VertexPrefix& prefix);
bool is_shifted(const SetFamily& family);
bool is_shifted(const Complex& complex);

bool is_near_cone(const Complex& complex, int apex);
// Near-cone at v_1 whose deletion and link at v_1 are (t-1)-fold near-cones on the
// remaining prefix.
bool is_t_fold_near_cone(const Complex& complex, const VertexPrefix& prefix);
std::vector<int> near_cone_apexes(const Complex& complex);
// Longest t such that the complex is shifted with respect to {0 < ... < t-1}.
int maximal_shifted_prefix(const Complex& complex);

// All (r-1)-subsets of the members of an r-uniform family (r >= 1).
SetFamily shadow(const SetFamily& family);
// Lexicographically least (k+1)-set all of whose k-subsets belong to the k-uniform
// family, if any.
std::optional<Face> spans_simplex_boundary(const SetFamily& family);

// The k-faces of a complex as a uniform family.
SetFamily face_family(const Complex& complex, int k);

}  // namespace shiftlab
