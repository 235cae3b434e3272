#include "shiftlab/face.hpp"

#include <algorithm>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

Face from_range(auto&& vertices) {
  Face::Mask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    m |= Face::Mask{1} << v;
  }
  return Face(m);
}

}  // namespace

Face Face::of(std::initializer_list<int> vertices) { return from_range(vertices); }
Face Face::of(std::span<const int> vertices) { return from_range(vertices); }

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_vertex([&](int v) { out.push_back(v); });
  return out;
}

std::string Face::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each_vertex([&](int v) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  });
  return s + "}";
}

std::vector<Face> subsets_of_size(Face ground, int k) {
  std::vector<Face> out;
  for_each_subset_of_size(ground, k, [&](Face f) { out.push_back(f); });
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

SetFamily::SetFamily(std::vector<Face> sets, int universe) : sets_(std::move(sets)), universe_(universe) {
  std::sort(sets_.begin(), sets_.end(), LexLess{});
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  for (Face f : sets_) {
    if (!f.empty() && f.max() >= universe_) throw Error(ErrorCode::VertexOutOfRange, f.to_string());
  }
  uniform_ = std::all_of(sets_.begin(), sets_.end(), [&](Face f) { return f.size() == sets_.front().size(); });
  rank_ = (uniform_ && !sets_.empty()) ? sets_.front().size() : 0;
}

SetFamily SetFamily::uniform(std::vector<Face> sets, int rank, int universe) {
  for (Face f : sets) {
    if (f.size() != rank) throw Error(ErrorCode::NotUniform, f.to_string() + " in a " + std::to_string(rank) + "-uniform family");
  }
  SetFamily out(std::move(sets), universe);
  out.uniform_ = true;
  out.rank_ = rank;
  return out;
}

bool SetFamily::contains(Face f) const { return std::binary_search(sets_.begin(), sets_.end(), f, LexLess{}); }

Face SetFamily::common_intersection() const {
  Face acc = Face::prefix(universe_);
  for (Face f : sets_) acc = acc & f;
  return acc;
}

bool SetFamily::is_intersecting() const {
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (std::size_t j = i + 1; j < sets_.size(); ++j)
      if (!sets_[i].meets(sets_[j])) return false;
  return true;
}

bool SetFamily::is_sperner() const {
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (std::size_t j = 0; j < sets_.size(); ++j)
      if (i != j && sets_[i].is_subset_of(sets_[j])) return false;
  return true;
}

bool cross_intersecting(const SetFamily& a, const SetFamily& b) {
  for (Face x : a)
    for (Face y : b)
      if (!x.meets(y)) return false;
  return true;
}

VertexPrefix::VertexPrefix(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] < 0 || vertices_[i] >= kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "prefix vertex");
    if (i > 0 && vertices_[i - 1] >= vertices_[i]) throw Error(ErrorCode::HypothesisViolated, "prefix must be strictly increasing");
  }
}

VertexPrefix VertexPrefix::first(int t) {
  std::vector<int> v(t);
  for (int i = 0; i < t; ++i) v[i] = i;
  return VertexPrefix(std::move(v));
}

Face VertexPrefix::as_face() const { return Face::of(std::span<const int>(vertices_)); }

VertexPrefix VertexPrefix::tail() const {
  VertexPrefix out;
  if (!vertices_.empty()) out.vertices_.assign(vertices_.begin() + 1, vertices_.end());
  return out;
}

}  // namespace shiftlab
