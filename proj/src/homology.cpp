#include "shiftlab/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "shiftlab/error.hpp"

namespace shiftlab {

FpMatrix boundary_matrix(const Complex& complex, int k, PrimeField field) {
  if (k < 1 || k > complex.dim() + 1) throw Error(ErrorCode::OutOfRange, "boundary cardinality " + std::to_string(k));
  const auto& lower = complex.faces(k - 1);
  const auto& upper = complex.faces(k);
  FpMatrix m(lower.size(), upper.size(), field);
  for (std::size_t c = 0; c < upper.size(); ++c) {
    int position = 0;
    upper[c].for_each_vertex([&](int v) {
      const Face sub = upper[c].without(v);
      const auto it = std::lower_bound(lower.begin(), lower.end(), sub, LexLess{});
      const auto row = static_cast<std::size_t>(it - lower.begin());
      m(row, c) = (position % 2 == 0) ? 1 : field.neg(1);
      ++position;
    });
  }
  return m;
}

std::vector<std::size_t> reduced_betti_numbers(const Complex& complex, PrimeField field) {
  const int top = complex.dim() + 1;  // largest face cardinality
  // ranks[k] = rank of the boundary out of k-element chains; zero at k = 0 and k = top + 1
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int k = 1; k <= top; ++k) ranks[k] = rank(boundary_matrix(complex, k, field));
  std::vector<std::size_t> betti;
  for (int c = 0; c <= top; ++c) betti.push_back(complex.f(c) - ranks[c] - ranks[c + 1]);
  return betti;
}

std::size_t reduced_betti(const Complex& complex, int i, PrimeField field) {
  if (i < -1 || i > complex.dim()) return 0;
  return reduced_betti_numbers(complex, field)[static_cast<std::size_t>(i + 1)];
}

namespace {

// Least i with H~_i != 0, or nullopt when the complex is acyclic.
std::optional<int> first_homology(const Complex& complex, const PrimeField& field) {
  const auto betti = reduced_betti_numbers(complex, field);
  for (std::size_t j = 0; j < betti.size(); ++j)
    if (betti[j] != 0) return static_cast<int>(j) - 1;
  return std::nullopt;
}

}  // namespace

bool is_cohen_macaulay(const Complex& complex, PrimeField field) {
  for (Face a : complex.all_faces()) {
    const Complex lk = link(complex, a);
    const auto first = first_homology(lk, field);
    if (first && *first < lk.dim()) return false;
  }
  return true;
}

int depth_by_links(const Complex& complex, PrimeField field, std::optional<DepthWitness>* witness) {
  int best = complex.dim();
  std::optional<DepthWitness> found;
  for (Face a : complex.all_faces()) {
    const auto first = first_homology(link(complex, a), field);
    if (!first) continue;
    const int value = a.size() + *first;
    if (value < best) {
      best = value;
      found = DepthWitness{a, *first};
    }
  }
  if (witness) *witness = found;
  return best;
}

int depth_by_skeleta(const Complex& complex, PrimeField field) {
  int best = -1;
  for (int d = 0; d <= complex.dim(); ++d)
    if (is_cohen_macaulay(skeleton(complex, d), field)) best = d;
  return best;
}

DepthReport depth(const Complex& complex, PrimeField field, bool cross_check) {
  DepthReport report;
  report.depth = depth_by_links(complex, field, &report.witness);
  if (cross_check) {
    const int reference = depth_by_skeleta(complex, field);
    if (reference != report.depth)
      throw std::logic_error("depth paths disagree: links " + std::to_string(report.depth) + ", skeleta " + std::to_string(reference));
  }
  report.is_cm = report.depth == complex.dim();
  report.min_facet_dim = complex.min_facet_size() - 1;
  report.has_facet_depth = report.depth == report.min_facet_dim;
  return report;
}

bool has_facet_depth(const Complex& complex, PrimeField field) {
  return depth_by_links(complex, field) == complex.min_facet_size() - 1;
}

bool is_shedding_vertex(const Complex& complex, int v) {
  const Face outside = Face::prefix(complex.n_vertices());
  for (Face f : complex.facets()) {
    if (!f.contains(v)) continue;
    const Face base = f.without(v);
    bool exchange = false;
    (outside - f).for_each_vertex([&](int w) {
      if (!exchange && complex.contains(base.with(w))) exchange = true;
    });
    if (!exchange) return false;
  }
  return true;
}

namespace {

struct Canonical {
  std::vector<Face::Mask> key;
  std::vector<int> original;  // canonical index -> original vertex
};

// Relabels used vertices by (facet degree, sizes of facets through the vertex) so that
// isomorphic subproblems often collide. Only speed depends on how well this works.
Canonical canonicalize(const Complex& complex) {
  std::vector<int> verts = complex.vertex_set().vertices();
  std::vector<std::vector<int>> signature(static_cast<std::size_t>(complex.n_vertices()));
  for (Face f : complex.facets()) f.for_each_vertex([&](int v) { signature[v].push_back(f.size()); });
  for (auto& s : signature) std::sort(s.begin(), s.end());
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
    if (signature[a].size() != signature[b].size()) return signature[a].size() > signature[b].size();
    return signature[a] > signature[b];
  });
  std::vector<int> to_canonical(static_cast<std::size_t>(complex.n_vertices()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) to_canonical[verts[i]] = static_cast<int>(i);
  Canonical out;
  out.original = verts;
  for (Face f : complex.facets()) {
    Face::Mask m = 0;
    f.for_each_vertex([&](int v) { m |= Face::Mask{1} << to_canonical[v]; });
    out.key.push_back(m);
  }
  std::sort(out.key.begin(), out.key.end());
  return out;
}

class VdSearch {
 public:
  std::optional<std::vector<int>> run(const Complex& complex) {
    if (complex.is_simplex()) return std::vector<int>{VdResult::kSimplexLeaf};
    const Canonical canon = canonicalize(complex);
    if (const auto it = memo_.find(canon.key); it != memo_.end()) {
      if (!it->second) return std::nullopt;
      std::vector<int> cert = *it->second;
      for (int& v : cert)
        if (v != VdResult::kSimplexLeaf) v = canon.original[v];
      return cert;
    }
    std::optional<std::vector<int>> result;
    for (int v : complex.vertex_set().vertices()) {
      if (!is_shedding_vertex(complex, v)) continue;
      auto del = run(deletion(complex, v));
      if (!del) continue;
      auto lk = run(link(complex, Face{}.with(v)));
      if (!lk) continue;
      std::vector<int> cert{v};
      cert.insert(cert.end(), del->begin(), del->end());
      cert.insert(cert.end(), lk->begin(), lk->end());
      result = std::move(cert);
      break;
    }
    std::optional<std::vector<int>> stored;
    if (result) {
      std::vector<int> to_canonical(static_cast<std::size_t>(complex.n_vertices()), -1);
      for (std::size_t i = 0; i < canon.original.size(); ++i) to_canonical[canon.original[i]] = static_cast<int>(i);
      stored = *result;
      for (int& v : *stored)
        if (v != VdResult::kSimplexLeaf) v = to_canonical[v];
    }
    memo_.emplace(canon.key, std::move(stored));
    return result;
  }

 private:
  std::map<std::vector<Face::Mask>, std::optional<std::vector<int>>> memo_;
};

bool replay(const Complex& complex, const std::vector<int>& cert, std::size_t& pos) {
  if (pos >= cert.size()) return false;
  const int v = cert[pos++];
  if (v == VdResult::kSimplexLeaf) return complex.is_simplex();
  if (v < 0 || v >= complex.n_vertices() || complex.is_simplex()) return false;
  if (!complex.contains(Face{}.with(v)) || !is_shedding_vertex(complex, v)) return false;
  if (!replay(deletion(complex, v), cert, pos)) return false;
  return replay(link(complex, Face{}.with(v)), cert, pos);
}

}  // namespace

VdResult is_vertex_decomposable(const Complex& complex) {
  VdSearch search;
  VdResult out;
  if (auto cert = search.run(complex)) {
    out.decomposable = true;
    out.certificate = std::move(*cert);
  }
  return out;
}

bool verify_vd_certificate(const Complex& complex, const std::vector<int>& certificate) {
  std::size_t pos = 0;
  return replay(complex, certificate, pos) && pos == certificate.size();
}

}  // namespace shiftlab
