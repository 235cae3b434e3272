#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace shiftlab {

inline constexpr int kMaxVertices = 63;

// A finite set of vertex indices stored as a bitmask (bit i <=> vertex i).
class Face {
 public:
  using Mask = std::uint64_t;

  constexpr Face() = default;
  constexpr explicit Face(Mask mask) : mask_(mask) {}

  static Face of(std::initializer_list<int> vertices);
  static Face of(std::span<const int> vertices);
  // {0, ..., k-1}
  static constexpr Face prefix(int k) { return Face(k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1); }

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr int dim() const { return size() - 1; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const { return (mask_ >> v) & 1U; }
  constexpr bool is_subset_of(Face other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool meets(Face other) const { return (mask_ & other.mask_) != 0; }
  // Smallest / largest vertex; undefined on the empty face.
  constexpr int min() const { return std::countr_zero(mask_); }
  constexpr int max() const { return 63 - std::countl_zero(mask_); }

  constexpr Face with(int v) const { return Face(mask_ | (Mask{1} << v)); }
  constexpr Face without(int v) const { return Face(mask_ & ~(Mask{1} << v)); }
  // A \ w u v
  constexpr Face swapped(int w, int v) const { return without(w).with(v); }

  constexpr Face operator|(Face o) const { return Face(mask_ | o.mask_); }
  constexpr Face operator&(Face o) const { return Face(mask_ & o.mask_); }
  constexpr Face operator-(Face o) const { return Face(mask_ & ~o.mask_); }

  std::vector<int> vertices() const;
  std::string to_string() const;

  constexpr bool operator==(const Face&) const = default;

  template <typename F>
  void for_each_vertex(F&& f) const {
    for (Mask m = mask_; m != 0; m &= m - 1) f(std::countr_zero(m));
  }

 private:
  Mask mask_ = 0;
};

// Lexicographic comparison of the ascending vertex tuples: {0,1,4} < {0,2,3}, and a
// proper prefix sorts first.
constexpr bool lex_less(Face a, Face b) {
  const Face::Mask am = a.mask(), bm = b.mask();
  if (am == bm) return false;
  const Face::Mask d = am ^ bm;
  const Face::Mask low = d & (~d + 1);
  const Face::Mask above = ~((low << 1) - 1);
  if (am & low) return (bm & above) != 0;
  return (am & above) == 0;
}

struct LexLess {
  constexpr bool operator()(Face a, Face b) const { return lex_less(a, b); }
};

// Calls f(Face) for every k-subset of `ground`, in increasing mask order.
template <typename F>
void for_each_subset_of_size(Face ground, int k, F&& f) {
  const int m = ground.size();
  if (k < 0 || k > m) return;
  std::vector<int> elems = ground.vertices();
  if (k == 0) {
    f(Face{});
    return;
  }
  // Gosper's hack over position masks, scattered into `ground` (m <= 63).
  const std::uint64_t limit = std::uint64_t{1} << m;
  std::uint64_t pos = (std::uint64_t{1} << k) - 1;
  while (pos < limit) {
    Face::Mask out = 0;
    for (std::uint64_t p = pos; p != 0; p &= p - 1) out |= Face::Mask{1} << elems[std::countr_zero(p)];
    f(Face(out));
    const std::uint64_t c = pos & (~pos + 1);
    const std::uint64_t r = pos + c;
    pos = (((r ^ pos) >> 2) / c) | r;
  }
}

// All k-subsets of `ground`, sorted lexicographically.
std::vector<Face> subsets_of_size(Face ground, int k);

// A collection of distinct faces kept in lexicographic order. `rank` is the member
// cardinality for a uniform family and 0 for a mixed (e.g. Sperner) family.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::vector<Face> sets, int universe);
  // Uniform family; throws NotUniform if a member has the wrong size.
  static SetFamily uniform(std::vector<Face> sets, int rank, int universe);

  int universe() const { return universe_; }
  int rank() const { return rank_; }
  bool is_uniform() const { return uniform_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const std::vector<Face>& sets() const { return sets_; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const Face& operator[](std::size_t i) const { return sets_[i]; }

  bool contains(Face f) const;
  // Intersection of all members; the full universe when empty.
  Face common_intersection() const;
  bool is_intersecting() const;
  bool is_sperner() const;

  bool operator==(const SetFamily& o) const { return sets_ == o.sets_; }

 private:
  std::vector<Face> sets_;
  int universe_ = 0;
  int rank_ = 0;
  bool uniform_ = true;
};

bool cross_intersecting(const SetFamily& a, const SetFamily& b);

// An ordered list of distinct vertices v_1 < ... < v_t.
class VertexPrefix {
 public:
  VertexPrefix() = default;
  explicit VertexPrefix(std::vector<int> vertices);
  static VertexPrefix first(int t);

  std::size_t size() const { return vertices_.size(); }
  int operator[](std::size_t i) const { return vertices_[i]; }
  const std::vector<int>& vertices() const { return vertices_; }
  Face as_face() const;
  VertexPrefix tail() const;

 private:
  std::vector<int> vertices_;
};

}  // namespace shiftlab

template <>
struct std::hash<shiftlab::Face> {
  std::size_t operator()(const shiftlab::Face& f) const noexcept {
    return std::hash<std::uint64_t>{}(f.mask() * 0x9E3779B97F4A7C15ULL);
  }
};
