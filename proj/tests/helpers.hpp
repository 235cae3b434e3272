#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "shiftlab/complex.hpp"

namespace testing_support {

// Random complex with facets of mixed sizes; always nonvoid.
inline shiftlab::Complex random_mixed_complex(std::mt19937_64& rng, int n, int max_size, int facets) {
  std::uniform_int_distribution<int> size_dist(1, max_size);
  std::vector<shiftlab::Face> out;
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) verts[i] = i;
  for (int i = 0; i < facets; ++i) {
    std::shuffle(verts.begin(), verts.end(), rng);
    const int s = std::min(size_dist(rng), n);
    out.push_back(shiftlab::Face::of(std::span<const int>(verts.data(), static_cast<std::size_t>(s))));
  }
  return shiftlab::Complex::from_facets(out, n);
}

inline oracle::Sets faces_of(const shiftlab::Complex& c) {
  std::vector<oracle::Set> facets;
  for (auto f : c.facets()) facets.push_back(f.vertices());
  return oracle::all_faces(facets);
}

inline std::vector<oracle::Set> lex_sets(const std::vector<shiftlab::Face>& faces) {
  std::vector<oracle::Set> out;
  for (auto f : faces) out.push_back(f.vertices());
  return out;
}

}  // namespace testing_support
