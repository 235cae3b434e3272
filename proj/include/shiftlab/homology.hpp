#pragma once

#include <optional>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/fp.hpp"

namespace shiftlab {

// Reduced boundary map from k-element faces to (k-1)-element faces: rows are F_{k-1},
// columns F_k, both in lexicographic order; the entry for removing the vertex in
// position j (0-based, ascending) is (-1)^j. k = 1 is the augmentation row.
// Throws OutOfRange unless 1 <= k <= dim + 1.
FpMatrix boundary_matrix(const Complex& complex, int k, PrimeField field = PrimeField());

// dim H~_i(complex; F_p) for i = -1 .. dim; index 0 of the result holds i = -1.
std::vector<std::size_t> reduced_betti_numbers(const Complex& complex, PrimeField field = PrimeField());
// Zero for i outside [-1, dim].
std::size_t reduced_betti(const Complex& complex, int i, PrimeField field = PrimeField());

bool is_cohen_macaulay(const Complex& complex, PrimeField field = PrimeField());

struct DepthWitness {
  Face face;
  int index;  // least i with H~_i(link face) != 0
};

// Depth follows the face-ring-free convention: the dimension of the largest
// Cohen-Macaulay skeleton (commutative-algebra depth is this plus one). {∅} has depth -1.
struct DepthReport {
  int depth = -1;
  bool is_cm = true;
  std::optional<DepthWitness> witness;
  int min_facet_dim = -1;
  bool has_facet_depth = true;
};

// Minimum over faces A of |A| + (least i with H~_i(link A) != 0), capped at dim.
int depth_by_links(const Complex& complex, PrimeField field = PrimeField(), std::optional<DepthWitness>* witness = nullptr);
// Largest d with the d-skeleton Cohen-Macaulay.
int depth_by_skeleta(const Complex& complex, PrimeField field = PrimeField());

// Uses the link formula and cross-checks it against the skeleton definition when
// `cross_check` is set (throws std::logic_error on disagreement).
DepthReport depth(const Complex& complex, PrimeField field = PrimeField(), bool cross_check = true);

bool has_facet_depth(const Complex& complex, PrimeField field = PrimeField());

// Preorder shedding certificate: a vertex v is followed by the certificate of del v and
// then that of link v; kSimplexLeaf marks a simplex.
struct VdResult {
  static constexpr int kSimplexLeaf = -1;
  bool decomposable = false;
  std::vector<int> certificate;
};

// v is a shedding vertex iff every facet F containing v admits w not in F with
// F \ v u w a face.
bool is_shedding_vertex(const Complex& complex, int v);
VdResult is_vertex_decomposable(const Complex& complex);
// Replays a certificate against the definition.
bool verify_vd_certificate(const Complex& complex, const std::vector<int>& certificate);

}  // namespace shiftlab
