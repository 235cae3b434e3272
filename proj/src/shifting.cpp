#include "shiftlab/shifting.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "shiftlab/error.hpp"

namespace shiftlab {

SetFamily comb_shift(const SetFamily& family, int v, int w) {
  if (v == w) throw Error(ErrorCode::OutOfRange, "Shift_{v<-w} needs v != w");
  std::vector<Face> out;
  out.reserve(family.size());
  for (Face a : family) {
    if (!a.contains(w) || a.contains(v) || family.contains(a.swapped(w, v))) {
      out.push_back(a);
    } else {
      out.push_back(a.swapped(w, v));
    }
  }
  if (family.is_uniform()) return SetFamily::uniform(std::move(out), family.rank(), family.universe());
  return SetFamily(std::move(out), family.universe());
}

ComplexShift comb_shift_complex(const Complex& complex, int v, int w) {
  std::vector<Face> faces;
  for (int k = 0; k <= complex.dim() + 1; ++k) {
    const SetFamily shifted = comb_shift(face_family(complex, k), v, w);
    faces.insert(faces.end(), shifted.begin(), shifted.end());
  }
  ComplexShift out{closure(faces, complex.n_vertices()), false};
  std::size_t total = 0;
  for (std::size_t f : out.complex.f_vector()) total += f;
  out.reclosed = total != faces.size();
  return out;
}

std::vector<ShiftPair> all_increasing_pairs(int n) {
  std::vector<ShiftPair> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<ShiftPair> prefix_pairs(const VertexPrefix& prefix, int n) {
  std::vector<ShiftPair> out;
  Face earlier;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    earlier = earlier.with(prefix[i]);
    for (int w = 0; w < n; ++w)
      if (!earlier.contains(w)) out.emplace_back(prefix[i], w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string shift_tag(ShiftPair p) { return "Shift_{" + std::to_string(p.first) + "<-" + std::to_string(p.second) + "}"; }

std::vector<Face::Mask> state_key(const SetFamily& f) {
  std::vector<Face::Mask> key;
  key.reserve(f.size());
  for (Face a : f) key.push_back(a.mask());
  return key;
}

}  // namespace

ShiftTrace stabilize(const SetFamily& family, std::vector<ShiftPair> allowed, bool stop_on_common_intersection) {
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  ShiftTrace trace;
  SetFamily current = family;
  std::set<std::vector<Face::Mask>> seen{state_key(current)};
  bool changed = true;
  while (changed && !trace.blocking_pair) {
    changed = false;
    for (const ShiftPair& p : allowed) {
      SetFamily next = comb_shift(current, p.first, p.second);
      if (next == current) continue;
      if (stop_on_common_intersection && !next.empty() && !next.common_intersection().empty()) {
        trace.blocking_pair = p;
        break;
      }
      std::size_t moved = 0;
      for (Face a : current)
        if (!next.contains(a)) ++moved;
      trace.steps.push_back({shift_tag(p), next.size(), moved});
      current = std::move(next);
      if (!seen.insert(state_key(current)).second) throw Error(ErrorCode::NonTerminating, "shift sequence revisits a family");
      changed = true;
    }
  }
  if (current.is_uniform()) trace.boundary_witness = spans_simplex_boundary(current);
  trace.outcome = std::move(current);
  return trace;
}

SetFamily alg_shift_family(const SetFamily& family, const FpMatrix& g) {
  if (!family.is_uniform()) throw Error(ErrorCode::NotUniform, "algebraic shifting needs a uniform family");
  const int n = family.universe();
  if (g.rows() < static_cast<std::size_t>(n) || g.cols() < static_cast<std::size_t>(n))
    throw Error(ErrorCode::SizeMismatch, "basis change smaller than the vertex universe");
  const int k = family.rank();
  std::vector<Face> out;
  if (family.empty()) return SetFamily::uniform(std::move(out), k, n);
  RankTracker tracker(family.size(), g.field());
  std::vector<std::uint32_t> row(family.size());
  for (Face t : subsets_of_size(Face::prefix(n), k)) {
    for (std::size_t j = 0; j < family.size(); ++j) row[j] = minor(g, family[j], t);
    if (tracker.offer(row)) out.push_back(t);
    if (tracker.rank() == family.size()) break;
  }
  if (out.size() != family.size()) throw Error(ErrorCode::SingularBasis, "basis change is not invertible");
  return SetFamily::uniform(std::move(out), k, n);
}

Complex alg_shift_complex(const Complex& complex, const FpMatrix& g) {
  std::vector<Face> faces;
  for (int k = 0; k <= complex.dim() + 1; ++k) {
    const SetFamily shifted = alg_shift_family(face_family(complex, k), g);
    faces.insert(faces.end(), shifted.begin(), shifted.end());
  }
  return closure(faces, complex.n_vertices());
}

Complex alg_shift_complex(const Complex& complex, std::uint64_t seed, PrimeField field) {
  return alg_shift_complex(complex, random_invertible(static_cast<std::size_t>(complex.n_vertices()), seed, field));
}

namespace {

template <typename T, typename Run>
SeedConsensus<T> consensus(const std::vector<std::uint64_t>& seeds, Run&& run) {
  if (seeds.empty()) throw Error(ErrorCode::OutOfRange, "at least one seed is required");
  std::vector<T> results;
  SeedConsensus<T> out{run(seeds.front()), {seeds.front()}, true};
  results.push_back(out.value);
  for (std::size_t i = 1; i < seeds.size(); ++i) {
    results.push_back(run(seeds[i]));
    out.seeds_used.push_back(seeds[i]);
    if (!(results.back() == results.front())) out.unanimous = false;
  }
  if (out.unanimous) return out;
  const std::uint64_t top = *std::max_element(seeds.begin(), seeds.end());
  for (std::uint64_t extra = top + 1; extra <= top + 2; ++extra) {
    results.push_back(run(extra));
    out.seeds_used.push_back(extra);
  }
  for (const T& candidate : results) {
    const auto votes = std::count(results.begin(), results.end(), candidate);
    if (2 * static_cast<std::size_t>(votes) > results.size()) {
      out.value = candidate;
      return out;
    }
  }
  throw Error(ErrorCode::GenericityFailure, "algebraic shift disagrees across " + std::to_string(results.size()) + " seeds");
}

}  // namespace

SeedConsensus<Complex> alg_shift_complex_consensus(const Complex& complex, const std::vector<std::uint64_t>& seeds,
                                                   PrimeField field) {
  return consensus<Complex>(seeds, [&](std::uint64_t s) { return alg_shift_complex(complex, s, field); });
}

SeedConsensus<SetFamily> alg_shift_family_consensus(const SetFamily& family, const std::vector<std::uint64_t>& seeds,
                                                    PrimeField field) {
  return consensus<SetFamily>(seeds, [&](std::uint64_t s) {
    return alg_shift_family(family, random_invertible(static_cast<std::size_t>(family.universe()), s, field));
  });
}

}  // namespace shiftlab
