#include "shiftlab/complex.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_set>

#include "shiftlab/error.hpp"

namespace shiftlab {

struct Complex::Cache {
  std::mutex mutex;
  std::vector<std::optional<std::vector<Face>>> by_size;
};

namespace {

std::vector<Face> maximal_sets(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return lex_less(a, b);
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Face> kept;
  for (Face s : sets) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](Face k) { return s.is_subset_of(k); });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), LexLess{});
  return kept;
}

const std::vector<Face>& empty_faces() {
  static const std::vector<Face> none;
  return none;
}

}  // namespace

Complex::Complex(std::vector<Face> facets, int n) : n_(n), facets_(std::move(facets)), cache_(std::make_shared<Cache>()) {
  cache_->by_size.resize(static_cast<std::size_t>(dim() + 2));
}

Complex Complex::from_facets(std::vector<Face> sets, int n_vertices) {
  if (n_vertices < 0 || n_vertices > kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "vertex count " + std::to_string(n_vertices));
  if (sets.empty()) throw Error(ErrorCode::EmptyInput, "a complex needs at least one face");
  const Face universe = Face::prefix(n_vertices);
  for (Face s : sets) {
    if (!s.is_subset_of(universe)) throw Error(ErrorCode::VertexOutOfRange, s.to_string() + " on " + std::to_string(n_vertices) + " vertices");
  }
  return Complex(maximal_sets(std::move(sets)), n_vertices);
}

Complex Complex::simplex(int n_vertices) { return from_facets({Face::prefix(n_vertices)}, n_vertices); }

Complex Complex::simplex_boundary(int n_vertices) {
  if (n_vertices == 0) throw Error(ErrorCode::EmptyInput, "boundary of the empty simplex is void");
  return from_facets(subsets_of_size(Face::prefix(n_vertices), n_vertices - 1), n_vertices);
}

int Complex::dim() const {
  int d = -1;
  for (Face f : facets_) d = std::max(d, f.dim());
  return d;
}

Face Complex::vertex_set() const {
  Face acc;
  for (Face f : facets_) acc = acc | f;
  return acc;
}

int Complex::min_facet_size() const {
  int m = kMaxVertices + 1;
  for (Face f : facets_) m = std::min(m, f.size());
  return m;
}

bool Complex::contains(Face face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](Face f) { return face.is_subset_of(f); });
}

const std::vector<Face>& Complex::faces(int k) const {
  if (k < 0 || k > dim() + 1) return empty_faces();
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->by_size[static_cast<std::size_t>(k)];
  if (!slot) {
    std::vector<Face> out;
    for (Face f : facets_) for_each_subset_of_size(f, k, [&](Face s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), LexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    slot = std::move(out);
  }
  return *slot;
}

std::vector<std::size_t> Complex::f_vector() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= dim() + 1; ++k) out.push_back(f(k));
  return out;
}

std::vector<Face> Complex::all_faces() const {
  std::vector<Face> out;
  for (int k = 0; k <= dim() + 1; ++k) {
    const auto& fk = faces(k);
    out.insert(out.end(), fk.begin(), fk.end());
  }
  return out;
}

Complex link(const Complex& complex, Face face) {
  std::vector<Face> sets;
  for (Face f : complex.facets())
    if (face.is_subset_of(f)) sets.push_back(f - face);
  if (sets.empty()) throw Error(ErrorCode::NotAFace, face.to_string());
  return Complex::from_facets(std::move(sets), complex.n_vertices());
}

Complex deletion(const Complex& complex, int vertex) {
  std::vector<Face> sets;
  for (Face f : complex.facets()) sets.push_back(f.without(vertex));
  return Complex::from_facets(std::move(sets), complex.n_vertices());
}

Complex skeleton(const Complex& complex, int d) {
  if (d < -1) throw Error(ErrorCode::OutOfRange, "skeleton dimension below -1");
  if (d >= complex.dim()) return complex;
  std::vector<Face> sets = complex.faces(d + 1);
  for (Face f : complex.facets())
    if (f.size() <= d + 1) sets.push_back(f);
  return Complex::from_facets(std::move(sets), complex.n_vertices());
}

int min_facet_size(const Complex& complex) { return complex.min_facet_size(); }

Complex closure(std::span<const Face> faces, int n_vertices) {
  return Complex::from_facets(std::vector<Face>(faces.begin(), faces.end()), n_vertices);
}

namespace {

template <typename Contains>
bool shifted_members(const std::vector<Face>& members, const VertexPrefix& prefix, Contains&& contains) {
  for (Face a : members) {
    Face earlier;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const int v = prefix[i];
      earlier = earlier.with(v);
      if (a.contains(v)) continue;
      bool ok = true;
      (a - earlier).for_each_vertex([&](int w) {
        if (ok && !contains(a.swapped(w, v))) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

bool is_shifted_wrt(const SetFamily& family, const VertexPrefix& prefix) {
  return shifted_members(family.sets(), prefix, [&](Face f) { return family.contains(f); });
}

// Facets suffice: for B within facet F, B \ w u v lies in F \ w u v (or in F when v is in F).
bool is_shifted_wrt(const Complex& complex, const VertexPrefix& prefix) {
  return shifted_members(complex.facets(), prefix, [&](Face f) { return complex.contains(f); });
}

bool is_shifted(const SetFamily& family) { return is_shifted_wrt(family, VertexPrefix::first(family.universe())); }
bool is_shifted(const Complex& complex) { return is_shifted_wrt(complex, VertexPrefix::first(complex.n_vertices())); }

bool is_near_cone(const Complex& complex, int apex) {
  for (Face f : complex.facets()) {
    if (f.contains(apex)) continue;
    bool ok = true;
    f.for_each_vertex([&](int w) {
      if (ok && !complex.contains(f.swapped(w, apex))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_t_fold_near_cone(const Complex& complex, const VertexPrefix& prefix) {
  if (prefix.size() == 0) return true;
  const int v = prefix[0];
  if (!is_near_cone(complex, v)) return false;
  const VertexPrefix rest = prefix.tail();
  if (!is_t_fold_near_cone(deletion(complex, v), rest)) return false;
  // A near-cone at a non-vertex is {∅}; its link at v is void and imposes nothing.
  if (!complex.contains(Face{}.with(v))) return true;
  return is_t_fold_near_cone(link(complex, Face{}.with(v)), rest);
}

std::vector<int> near_cone_apexes(const Complex& complex) {
  std::vector<int> out;
  for (int v = 0; v < complex.n_vertices(); ++v)
    if (is_near_cone(complex, v)) out.push_back(v);
  return out;
}

int maximal_shifted_prefix(const Complex& complex) {
  int t = 0;
  while (t < complex.n_vertices() && is_shifted_wrt(complex, VertexPrefix::first(t + 1))) ++t;
  return t;
}

SetFamily shadow(const SetFamily& family) {
  if (!family.is_uniform() || family.rank() < 1) throw Error(ErrorCode::NotUniform, "shadow needs an r-uniform family with r >= 1");
  std::vector<Face> out;
  for (Face a : family) a.for_each_vertex([&](int v) { out.push_back(a.without(v)); });
  return SetFamily::uniform(std::move(out), family.rank() - 1, family.universe());
}

std::optional<Face> spans_simplex_boundary(const SetFamily& family) {
  if (!family.is_uniform()) throw Error(ErrorCode::NotUniform, "spans_simplex_boundary needs a uniform family");
  std::optional<Face> best;
  const Face universe = Face::prefix(family.universe());
  for (Face a : family) {
    (universe - a).for_each_vertex([&](int x) {
      const Face candidate = a.with(x);
      if (best && !lex_less(candidate, *best)) return;
      bool all = true;
      candidate.for_each_vertex([&](int y) {
        if (all && !family.contains(candidate.without(y))) all = false;
      });
      if (all) best = candidate;
    });
  }
  return best;
}

SetFamily face_family(const Complex& complex, int k) { return SetFamily::uniform(complex.faces(k), k, complex.n_vertices()); }

}  // namespace shiftlab
