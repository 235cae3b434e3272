#pragma once
// Brute-force reference implementations over plain vectors. Nothing here calls into the
// library except to convert its outputs for comparison.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "shiftlab/complex.hpp"

namespace oracle {

using Set = std::vector<int>;  // sorted ascending
using Sets = std::set<Set>;    // std::set orders vectors lexicographically, prefixes first

inline Set to_set(shiftlab::Face f) { return f.vertices(); }

inline Sets to_sets(const std::vector<shiftlab::Face>& faces) {
  Sets out;
  for (auto f : faces) out.insert(to_set(f));
  return out;
}

inline std::vector<Set> subsets(const Set& s) {
  std::vector<Set> out;
  const std::size_t m = s.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Set t;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) t.push_back(s[i]);
    out.push_back(t);
  }
  return out;
}

inline Sets all_faces(const std::vector<Set>& facets) {
  Sets out;
  for (const auto& f : facets)
    for (auto& s : subsets(f)) out.insert(s);
  return out;
}

inline Sets faces_of_size(const Sets& faces, std::size_t k) {
  Sets out;
  for (const auto& f : faces)
    if (f.size() == k) out.insert(f);
  return out;
}

inline bool contains(const Set& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

inline Set set_union(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Set set_minus(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool meets(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return !out.empty();
}

inline bool disjoint(const Set& a, const Set& b) { return !meets(a, b); }

inline Set replace(const Set& a, int out, int in) {
  Set s;
  for (int x : a)
    if (x != out) s.push_back(x);
  s.push_back(in);
  std::sort(s.begin(), s.end());
  return s;
}

inline Sets link(const Sets& faces, const Set& a) {
  Sets out;
  for (const auto& f : faces)
    if (disjoint(f, a) && faces.count(set_union(f, a))) out.insert(f);
  return out;
}

inline Sets deletion(const Sets& faces, int v) {
  Sets out;
  for (const auto& f : faces)
    if (!contains(f, v)) out.insert(f);
  return out;
}

// Shifted: A \ w u v is a member whenever v < w, w in A, v not in A.
inline bool is_shifted(const Sets& family, int n) {
  for (const auto& a : family)
    for (int w : a)
      for (int v = 0; v < w; ++v)
        if (!contains(a, v) && !family.count(replace(a, w, v))) return false;
  (void)n;
  return true;
}

inline bool is_near_cone(const Sets& faces, int a) {
  for (const auto& f : faces)
    for (int w : f)
      if (w != a && !contains(f, a) && !faces.count(replace(f, w, a))) return false;
  return true;
}

// ---- linear algebra over a prime different from the library default ----------------

inline constexpr std::int64_t kP = 1000003;

inline std::int64_t md(std::int64_t x) { return ((x % kP) + kP) % kP; }

inline std::int64_t pw(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  b = md(b);
  while (e) {
    if (e & 1) r = r * b % kP;
    b = b * b % kP;
    e >>= 1;
  }
  return r;
}

inline std::size_t rank(std::vector<std::vector<std::int64_t>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && md(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::int64_t inv = pw(m[r][c], kP - 2);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || md(m[i][c]) == 0) continue;
      const std::int64_t f = md(m[i][c]) * inv % kP;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = md(m[i][j] - f * md(m[r][j]));
    }
    ++r;
  }
  return r;
}

// Leibniz expansion; fine for the small minors used in tests.
inline std::int64_t det_leibniz(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t k = m.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::int64_t term = 1;
    for (std::size_t i = 0; i < k; ++i) term = term * md(m[i][perm[i]]) % kP;
    total = md(total + (inversions % 2 ? -term : term));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Reduced Betti numbers over F_kP, index 0 for degree -1.
inline std::vector<std::size_t> reduced_betti(const Sets& faces) {
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.size());
  std::vector<std::vector<Set>> by_size(top + 2);
  for (const auto& f : faces) by_size[f.size()].push_back(f);
  // rank of the boundary from size k to size k-1
  std::vector<std::size_t> rk(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) {
    std::map<Set, std::size_t> row;
    for (std::size_t i = 0; i < by_size[k - 1].size(); ++i) row[by_size[k - 1][i]] = i;
    std::vector<std::vector<std::int64_t>> m(by_size[k - 1].size(), std::vector<std::int64_t>(by_size[k].size(), 0));
    for (std::size_t j = 0; j < by_size[k].size(); ++j) {
      const Set& f = by_size[k][j];
      for (std::size_t pos = 0; pos < f.size(); ++pos) {
        Set g = f;
        g.erase(g.begin() + static_cast<long>(pos));
        m[row.at(g)][j] = pos % 2 ? -1 : 1;
      }
    }
    rk[k] = m.empty() || m[0].empty() ? 0 : rank(m);
  }
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k + 1 <= top + 1 && k <= top; ++k) {
    // degree k-1 lives on size-k faces
    betti.push_back(by_size[k].size() - rk[k] - rk[k + 1]);
  }
  return betti;
}

inline bool homology_vanishes_below(const Sets& faces, int dim_bound) {
  const auto b = reduced_betti(faces);
  for (int i = -1; i < dim_bound; ++i)
    if (static_cast<std::size_t>(i + 1) < b.size() && b[static_cast<std::size_t>(i + 1)] != 0) return false;
  return true;
}

inline int dim(const Sets& faces) {
  int d = -1;
  for (const auto& f : faces) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

// Reisner's criterion on every link.
inline bool is_cm(const Sets& faces) {
  const int d = dim(faces);
  for (const auto& a : faces) {
    const Sets lk = link(faces, a);
    if (!homology_vanishes_below(lk, d - static_cast<int>(a.size()))) return false;
  }
  return true;
}

// Largest k whose k-skeleton is Cohen-Macaulay.
inline int depth(const Sets& faces) {
  for (int k = dim(faces); k >= 0; --k) {
    Sets skel;
    for (const auto& f : faces)
      if (static_cast<int>(f.size()) <= k + 1) skel.insert(f);
    if (is_cm(skel)) return k;
  }
  return -1;
}

// ---- families ------------------------------------------------------------------------

inline bool intersecting(const std::vector<Set>& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (!meets(fam[i], fam[j])) return false;
  return true;
}

inline Set common(const std::vector<Set>& fam, int n) {
  Set c(static_cast<std::size_t>(n));
  std::iota(c.begin(), c.end(), 0);
  for (const auto& f : fam) {
    Set next;
    std::set_intersection(c.begin(), c.end(), f.begin(), f.end(), std::back_inserter(next));
    c = next;
  }
  return c;
}

struct BruteMax {
  std::size_t size = 0;
  std::vector<Set> witness;  // lexicographically least sorted list
};

// Every subfamily of `faces` (given in lex order).
inline BruteMax max_intersecting(const std::vector<Set>& faces, int n, bool require_empty) {
  BruteMax best;
  const std::size_t m = faces.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Set> fam;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) fam.push_back(faces[i]);
    if (fam.size() < best.size) continue;
    if (!intersecting(fam)) continue;
    if (require_empty && !common(fam, n).empty()) continue;
    if (fam.size() > best.size || fam < best.witness) {
      best.size = fam.size();
      best.witness = fam;
    }
  }
  return best;
}

// Max |A| + |B| over nonempty A, B of the given sets with every a meeting every b.
inline std::size_t max_cross_sum(const std::vector<Set>& a_pool, const std::vector<Set>& b_pool, bool shadow_inside) {
  std::size_t best = 0;
  const std::size_t ma = a_pool.size(), mb = b_pool.size();
  for (std::uint64_t bm = 1; bm < (std::uint64_t{1} << mb); ++bm) {
    for (std::uint64_t am = 1; am < (std::uint64_t{1} << ma); ++am) {
      bool ok = true;
      for (std::size_t i = 0; i < ma && ok; ++i)
        if ((am >> i) & 1U)
          for (std::size_t j = 0; j < mb && ok; ++j)
            if ((bm >> j) & 1U) ok = meets(a_pool[i], b_pool[j]);
      if (!ok) continue;
      if (shadow_inside) {
        for (std::size_t j = 0; j < mb && ok; ++j) {
          if (!((bm >> j) & 1U)) continue;
          for (int x : b_pool[j]) {
            const Set s = set_minus(b_pool[j], {x});
            bool found = false;
            for (std::size_t i = 0; i < ma; ++i)
              if (((am >> i) & 1U) && a_pool[i] == s) found = true;
            if (!found) ok = false;
          }
        }
        if (!ok) continue;
      }
      best = std::max(best, static_cast<std::size_t>(__builtin_popcountll(am) + __builtin_popcountll(bm)));
    }
  }
  return best;
}

// Hall's condition by checking every subset of the left side.
inline bool hall_holds(const std::vector<Set>& left, const std::vector<Set>& right) {
  const std::size_t m = left.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::set<Set> nb;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U)
        for (const auto& r : right)
          if (std::includes(r.begin(), r.end(), left[i].begin(), left[i].end())) nb.insert(r);
    if (nb.size() < static_cast<std::size_t>(__builtin_popcountll(mask))) return false;
  }
  return true;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle
