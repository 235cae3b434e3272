#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/fp.hpp"

namespace shiftlab {

// Shift_{v<-w}: each member A with w in A and v not in A becomes A \ w u v unless that
// set is already a member. Cardinality is preserved.
SetFamily comb_shift(const SetFamily& family, int v, int w);

struct ComplexShift {
  Complex complex;
  // True when the degree-wise shifted faces were not already closed under inclusion.
  bool reclosed = false;
};

// Applies Shift_{v<-w} to every F_k(complex) and closes the union under inclusion.
ComplexShift comb_shift_complex(const Complex& complex, int v, int w);

using ShiftPair = std::pair<int, int>;  // (v, w) for Shift_{v<-w}

std::vector<ShiftPair> all_increasing_pairs(int n);
// (v_i, w) for every prefix vertex v_i and w outside {v_1, ..., v_i}.
std::vector<ShiftPair> prefix_pairs(const VertexPrefix& prefix, int n);

struct ShiftStep {
  std::string tag;  // "Shift_{v<-w}" or "algebraic(seed)"
  std::size_t family_size = 0;
  std::size_t changed = 0;
};

struct ShiftTrace {
  std::vector<ShiftStep> steps;
  SetFamily outcome;
  std::optional<Face> boundary_witness;
  std::optional<ShiftPair> blocking_pair;
};

// Sweeps the allowed pairs in lexicographic order until a full sweep changes nothing.
// With stop_on_common_intersection, halts before the first application whose result has
// a nonempty common intersection and records that pair. Only effective applications are
// recorded as steps. Throws NonTerminating if a family state repeats.
ShiftTrace stabilize(const SetFamily& family, std::vector<ShiftPair> allowed, bool stop_on_common_intersection);

// Exterior algebraic shift of a k-uniform family with respect to the basis change g:
// k-subsets T are scanned in lexicographic order and kept when the row
// (det g[S rows, T cols] for S in family) is independent of the rows kept before.
// Throws SingularBasis if g is not invertible and NotUniform for mixed families.
SetFamily alg_shift_family(const SetFamily& family, const FpMatrix& g);

// Shifts every F_k with one shared basis change.
Complex alg_shift_complex(const Complex& complex, const FpMatrix& g);
Complex alg_shift_complex(const Complex& complex, std::uint64_t seed, PrimeField field = PrimeField());

template <typename T>
struct SeedConsensus {
  T value;
  std::vector<std::uint64_t> seeds_used;
  bool unanimous = true;
};

// Runs the shift for each seed. On disagreement two extra seeds are tried and a strict
// majority wins; otherwise throws GenericityFailure.
SeedConsensus<Complex> alg_shift_complex_consensus(const Complex& complex, const std::vector<std::uint64_t>& seeds,
                                                   PrimeField field = PrimeField());
SeedConsensus<SetFamily> alg_shift_family_consensus(const SetFamily& family, const std::vector<std::uint64_t>& seeds,
                                                    PrimeField field = PrimeField());

}  // namespace shiftlab
