#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/fp.hpp"
#include "shiftlab/shifting.hpp"

namespace shiftlab {

struct SearchLimits {
  std::size_t max_faces = 2000;          // intersecting-family search
  std::uint64_t node_budget = 400'000'000;
  std::size_t cross_max_faces = 24;      // exhaustive cross-intersecting enumeration
};

// Number of r-faces containing v, i.e. f_{r-1}(link v).
std::size_t star_size(const Complex& complex, int v, int r);

struct IntersectingResult {
  std::size_t size = 0;
  // Lexicographically least maximum family (families compared as sorted face lists).
  SetFamily witness;
  std::uint64_t nodes = 0;
};

// Exact maximum pairwise-intersecting subfamily of F_r; with require_empty_common only
// families with empty common intersection count. Throws ResourceLimit past the limits.
IntersectingResult max_intersecting(const Complex& complex, int r, bool require_empty_common,
                                    const SearchLimits& limits = {});

struct EkrReport {
  int r = 0;
  std::size_t max_size = 0;
  std::size_t star_bound = 0;
  int best_star_vertex = -1;
  bool holds_ekr = false;
  std::optional<bool> strict;
  std::optional<std::size_t> nonstar_max_size;
  std::vector<SetFamily> witnesses;  // maximum family, then the best non-star family
};

EkrReport check_ekr(const Complex& complex, int r, bool strict, const SearchLimits& limits = {});

// r-faces containing prefix[0] and no other prefix vertex.
std::size_t beta_count(const Complex& complex, int r, const VertexPrefix& prefix);
// k-faces containing no prefix vertex.
std::size_t gamma_count(const Complex& complex, int k, const VertexPrefix& prefix);

struct StabilityReport {
  bool hypotheses_hold = true;
  std::vector<std::string> violated;
  std::size_t beta = 0;
  std::size_t hm_bound = 0;
  std::size_t observed_max_nonstar = 0;
  SetFamily observed_witness;
  // {v_2..v_{r+1}} with every r-face through v_1 meeting it; empty if that set is no face.
  SetFamily extremal_family;
  bool extremal_valid = false;  // intersecting with empty common intersection
  bool holds() const { return observed_max_nonstar <= hm_bound; }
};

// Throws HypothesisViolated unless r >= 2, |prefix| = r + 1, the complex is shifted with
// respect to the prefix and depth >= 2r - 1. With enforce_hypotheses = false the search
// still runs and the report records which hypotheses failed.
StabilityReport check_stability(const Complex& complex, int r, const VertexPrefix& prefix, const SearchLimits& limits = {},
                                bool enforce_hypotheses = true);

struct CrossReport {
  bool hypotheses_hold = true;
  std::vector<std::string> violated;
  std::size_t gamma = 0;
  std::size_t bound = 0;
  std::size_t observed_max_sum = 0;
  SetFamily witness_a;
  SetFamily witness_b;
  bool holds() const { return observed_max_sum <= bound; }
};

// Nonempty cross-intersecting A, B of r-faces; bound f_r - gamma + 1.
CrossReport check_cross_classic(const Complex& complex, int r, const VertexPrefix& prefix, const SearchLimits& limits = {},
                                bool enforce_hypotheses = true);
// A of (r-1)-faces, B of r-faces, shadow(B) within A; bound f_{r-1} - gamma + 1.
CrossReport check_cross_shadow(const Complex& complex, int r, const VertexPrefix& prefix, const SearchLimits& limits = {},
                               bool enforce_hypotheses = true);

struct HallViolator {
  std::vector<Face> left;          // |left| > |neighbourhood|
  std::vector<Face> neighbourhood;
};

struct HibiResult {
  std::optional<std::vector<std::pair<Face, Face>>> injection;  // (A, psi(A)) with A inside psi(A)
  std::optional<HallViolator> violator;
};

// Maximum matching between F_s and F_r along inclusion.
HibiResult hibi_injection(const Complex& complex, int s, int r);

// Replaces each member smaller than r by a distinct r-face containing it. Throws
// HypothesisViolated for non-faces or members larger than r, AugmentationImpossible
// when no injective augmentation exists.
SetFamily augment_sperner(const SetFamily& family, const Complex& complex, int r);

enum class ReductionOutcome { BoundarySpanned, BlockedShift };

struct ReductionTrace {
  ShiftTrace shifting;
  ReductionOutcome outcome = ReductionOutcome::BoundarySpanned;
  // Spanned outcome: the (r+1)-set a u A and the algebraic shift of the stabilized family.
  std::optional<Face> boundary_witness;
  std::optional<SetFamily> algebraic_shift;
  bool algebraic_shift_keeps_empty_common = false;
  // Blocked outcome: the family just before the blocking Shift_{a<-v}.
  std::optional<ShiftPair> blocking_pair;
  std::vector<std::pair<Face, Face>> phi;  // A -> A \ a or A \ v
  bool phi_injective = false;
  bool phi_into_link = false;
  std::optional<Face> facet;               // T
  std::optional<Face> missing_subset;      // (r-1)-subset of T \ {a, v} outside the image
  std::size_t b_t_size = 0;
  std::size_t c_t_size = 0;
  bool b_t_c_t_cross_intersecting = false;
  std::size_t link_face_count = 0;         // f_{r-1}(link a)

  bool verified() const;
};

// Throws HypothesisViolated unless the complex is a near-cone at `apex` and the family
// is a uniform intersecting family of faces with empty common intersection.
ReductionTrace reduction_trace(const Complex& complex, const SetFamily& family, int apex,
                               const std::vector<std::uint64_t>& seeds, PrimeField field = PrimeField());

// (F(n), F(not n)): members through `last` with it removed, and members avoiding it.
std::pair<SetFamily, SetFamily> restrict_at_last(const SetFamily& family, int last);

}  // namespace shiftlab
