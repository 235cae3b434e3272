#include "shiftlab/ekr.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "bits.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/homology.hpp"

namespace shiftlab {

using detail::Bits;

std::size_t star_size(const Complex& complex, int v, int r) {
  if (r < 1) return 0;
  return static_cast<std::size_t>(
      std::count_if(complex.faces(r).begin(), complex.faces(r).end(), [&](Face f) { return f.contains(v); }));
}

namespace {

// Vertex partition whose cell-wise permutations are symmetries of the current search
// node. Two faces lie in one orbit iff they meet every cell in the same number of points.
using Cells = std::vector<Face>;

Cells refine(const Cells& cells, Face f) {
  Cells out;
  for (Face c : cells) {
    if (!(c & f).empty()) out.push_back(c & f);
    if (!(c - f).empty()) out.push_back(c - f);
  }
  return out;
}

bool discrete(const Cells& cells) {
  return std::all_of(cells.begin(), cells.end(), [](Face c) { return c.size() <= 1; });
}

// Classes of vertices x ~ y whose transposition is an automorphism of the complex. The
// permutations preserving each class form a group of automorphisms.
Cells twin_classes(const Complex& complex) {
  const int n = complex.n_vertices();
  const auto& facets = complex.facets();
  auto swapped = [](Face f, int x, int y) {
    if (f.contains(x) == f.contains(y)) return f;
    return f.contains(x) ? f.without(x).with(y) : f.without(y).with(x);
  };
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  Cells out;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    cls[x] = static_cast<int>(out.size());
    Face cell = Face{}.with(x);
    for (int y = x + 1; y < n; ++y) {
      if (cls[y] >= 0) continue;
      const bool twin = std::all_of(facets.begin(), facets.end(), [&](Face f) {
        return std::binary_search(facets.begin(), facets.end(), swapped(f, x, y), LexLess{});
      });
      if (twin) {
        cls[y] = cls[x];
        cell = cell.with(y);
      }
    }
    out.push_back(cell);
  }
  return out;
}

// Maximum clique in the "faces meet" graph (maximum independent set of the disjointness
// graph) by colouring-bounded branch and bound with orbital branching.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Face> faces, int n_vertices, bool require_empty, std::uint64_t budget, std::uint64_t& nodes)
      : faces_(std::move(faces)), require_empty_(require_empty), budget_(budget), nodes_(nodes) {
    const std::size_t m = faces_.size();
    adj_.assign(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (faces_[i].meets(faces_[j])) {
          adj_[i].set(j);
          adj_[j].set(i);
        }
    avoid_.assign(static_cast<std::size_t>(n_vertices), Bits(m));
    for (std::size_t i = 0; i < m; ++i)
      for (int x = 0; x < n_vertices; ++x)
        if (!faces_[i].contains(x)) avoid_[x].set(i);
  }

  std::size_t size() const { return faces_.size(); }
  const Bits& neighbours(std::size_t i) const { return adj_[i]; }

  // Maximum acceptable clique; the clique found is left in best().
  std::size_t maximum(const Cells& cells) {
    target_.reset();
    best_size_ = 0;
    best_.clear();
    std::vector<std::size_t> clique;
    expand(clique, Bits::full(faces_.size()), all_vertices(), cells);
    return best_size_;
  }

  // An acceptable clique of `target` members extending `fixed` inside `fixed` u candidates.
  std::optional<std::vector<std::size_t>> extend_to(const std::vector<std::size_t>& fixed, const Bits& candidates,
                                                    const Cells& cells, std::size_t target) {
    target_ = target;
    best_size_ = target - 1;
    best_.clear();
    std::vector<std::size_t> clique = fixed;
    Face common = all_vertices();
    for (std::size_t i : fixed) common = common & faces_[i];
    if (fixed.size() >= target) {
      if (acceptable(common)) return fixed;
      return std::nullopt;
    }
    if (candidates.any() && feasible(candidates, common)) expand(clique, candidates, common, cells);
    if (best_.empty()) return std::nullopt;
    return best_;
  }

  const std::vector<std::size_t>& best() const { return best_; }

 private:
  static Face all_vertices() { return Face(~std::uint64_t{0}); }

  void tick() {
    if (++nodes_ > budget_) throw Error(ErrorCode::ResourceLimit, "search node budget exhausted");
  }

  bool acceptable(Face common) const { return !require_empty_ || common.empty(); }

  // With a nonempty running intersection, every common vertex must still be avoidable.
  bool feasible(const Bits& candidates, Face common) const {
    if (!require_empty_) return true;
    bool ok = true;
    common.for_each_vertex([&](int x) {
      if (ok && x < static_cast<int>(avoid_.size()) && !candidates.intersects(avoid_[x])) ok = false;
    });
    return ok;
  }

  // Greedy sequential colouring into classes of pairwise disjoint faces; order lists the
  // candidates by nondecreasing colour.
  void colour(Bits u, std::vector<std::size_t>& order, std::vector<std::size_t>& colours) const {
    order.clear();
    colours.clear();
    std::size_t k = 0;
    while (u.any()) {
      ++k;
      Bits q = u;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        u.reset(v);
        q.and_not(adj_[v]);
        order.push_back(v);
        colours.push_back(k);
      }
    }
  }

  Bits orbit(std::size_t v, const Bits& candidates, const Cells& cells) const {
    Bits out(faces_.size());
    if (discrete(cells)) {
      out.set(v);
      return out;
    }
    const Face fv = faces_[v];
    candidates.for_each([&](std::size_t u) {
      const Face fu = faces_[u];
      if (std::all_of(cells.begin(), cells.end(), [&](Face c) { return (fu & c).size() == (fv & c).size(); })) out.set(u);
    });
    return out;
  }

  // Returns true once a target clique has been found.
  bool expand(std::vector<std::size_t>& clique, Bits candidates, Face common, const Cells& cells) {
    tick();
    if (require_empty_ && !clique.empty() && !common.empty()) return expand_avoiding(clique, std::move(candidates), common, cells);
    std::vector<std::size_t> order, colours;
    colour(candidates, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      const std::size_t v = order[i];
      if (!candidates.test(v)) continue;  // removed with an explored orbit
      if (clique.size() + colours[i] <= best_size_) return false;
      const Face next_common = common & faces_[v];
      Bits next = candidates & adj_[v];
      clique.push_back(v);
      if (clique.size() > best_size_ && acceptable(next_common)) {
        best_size_ = clique.size();
        best_ = clique;
        if (target_ && best_size_ >= *target_) return true;
      }
      if (next.any() && feasible(next, next_common) && expand(clique, std::move(next), next_common, refine(cells, faces_[v])))
        return true;
      clique.pop_back();
      // Every clique through another member of v's orbit is an image of one through v.
      candidates.and_not(orbit(v, candidates, cells));
    }
    return false;
  }

  // Some member must avoid each common vertex: branch on which candidate avoids the
  // common vertex with the fewest such candidates.
  bool expand_avoiding(std::vector<std::size_t>& clique, Bits candidates, Face common, const Cells& cells) {
    int x = -1;
    std::size_t fewest = 0;
    common.for_each_vertex([&](int y) {
      if (y >= static_cast<int>(avoid_.size())) return;
      const std::size_t c = (candidates & avoid_[y]).count();
      if (x < 0 || c < fewest) {
        x = y;
        fewest = c;
      }
    });
    if (x < 0 || fewest == 0) return false;
    const Cells fixed_x = refine(cells, Face{}.with(x));
    Bits branch = candidates & avoid_[x];
    std::vector<std::size_t> order, colours;
    while (branch.any()) {
      colour(candidates, order, colours);
      if (clique.size() + colours.back() <= best_size_) return false;
      const std::size_t v = branch.first();
      const Face next_common = common & faces_[v];
      Bits next = candidates & adj_[v];
      clique.push_back(v);
      if (clique.size() > best_size_ && acceptable(next_common)) {
        best_size_ = clique.size();
        best_ = clique;
        if (target_ && best_size_ >= *target_) return true;
      }
      if (next.any() && feasible(next, next_common) &&
          expand(clique, std::move(next), next_common, refine(fixed_x, faces_[v])))
        return true;
      clique.pop_back();
      const Bits gone = orbit(v, candidates, fixed_x);
      candidates.and_not(gone);
      branch.and_not(gone);
    }
    return false;
  }

  std::vector<Face> faces_;
  std::vector<Bits> adj_;
  std::vector<Bits> avoid_;
  bool require_empty_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::size_t best_size_ = 0;
  std::vector<std::size_t> best_;
  std::optional<std::size_t> target_;
};

SetFamily family_of(const std::vector<Face>& faces, const std::vector<std::size_t>& picked, int r, int n) {
  std::vector<Face> sets;
  for (std::size_t i : picked) sets.push_back(faces[i]);
  return SetFamily::uniform(std::move(sets), r, n);
}

std::string prefix_string(const VertexPrefix& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

void require(bool ok, const std::string& what, std::vector<std::string>& violated) {
  if (!ok) violated.push_back(what);
}

void enforce(const std::vector<std::string>& violated, bool enforce_hypotheses) {
  if (violated.empty() || !enforce_hypotheses) return;
  std::string msg;
  for (const auto& v : violated) msg += (msg.empty() ? "" : "; ") + v;
  throw Error(ErrorCode::HypothesisViolated, msg);
}

}  // namespace

IntersectingResult max_intersecting(const Complex& complex, int r, bool require_empty_common, const SearchLimits& limits) {
  IntersectingResult out;
  const int n = complex.n_vertices();
  out.witness = SetFamily::uniform({}, std::max(r, 0), n);
  if (r < 1) return out;
  const auto& lex_faces = complex.faces(r);
  if (lex_faces.size() > limits.max_faces)
    throw Error(ErrorCode::ResourceLimit,
                std::to_string(lex_faces.size()) + " faces exceed the limit of " + std::to_string(limits.max_faces));
  if (lex_faces.empty()) return out;
  const Cells twins = twin_classes(complex);

  // The maximum, faces ordered by descending disjointness degree.
  std::vector<std::size_t> disjoint(lex_faces.size(), 0);
  for (std::size_t i = 0; i < lex_faces.size(); ++i)
    for (std::size_t j = 0; j < lex_faces.size(); ++j)
      if (i != j && !lex_faces[i].meets(lex_faces[j])) ++disjoint[i];
  std::vector<std::size_t> perm(lex_faces.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return disjoint[a] > disjoint[b]; });
  std::vector<Face> ordered;
  for (std::size_t i : perm) ordered.push_back(lex_faces[i]);
  CliqueSearch by_degree(std::move(ordered), n, require_empty_common, limits.node_budget, out.nodes);
  out.size = by_degree.maximum(twins);
  if (out.size == 0) return out;

  // Lex-least family of that size: decide faces in lex order, keeping a current solution
  // that agrees with every decision so far.
  Bits current(lex_faces.size());
  for (std::size_t i : by_degree.best()) current.set(perm[i]);
  CliqueSearch lex(lex_faces, n, require_empty_common, limits.node_budget, out.nodes);
  std::vector<std::size_t> chosen;
  Bits excluded(lex_faces.size());
  Bits allowed = Bits::full(lex_faces.size());  // meets every chosen face
  for (std::size_t j = 0; j < lex_faces.size() && chosen.size() < out.size; ++j) {
    if (!current.test(j)) {
      if (!allowed.test(j)) {
        excluded.set(j);
        continue;
      }
      std::vector<std::size_t> fixed = chosen;
      fixed.push_back(j);
      Bits candidates = allowed & lex.neighbours(j);
      candidates.and_not(excluded);
      Cells cells = twins;
      for (std::size_t i : fixed) cells = refine(cells, lex_faces[i]);
      excluded.for_each([&](std::size_t x) { cells = refine(cells, lex_faces[x]); });
      auto found = lex.extend_to(fixed, candidates, cells, out.size);
      if (!found) {
        excluded.set(j);
        continue;
      }
      current = Bits(lex_faces.size());
      for (std::size_t i : *found) current.set(i);
    }
    chosen.push_back(j);
    allowed &= lex.neighbours(j);
  }
  out.witness = family_of(lex_faces, chosen, r, n);
  return out;
}

EkrReport check_ekr(const Complex& complex, int r, bool strict, const SearchLimits& limits) {
  EkrReport report;
  report.r = r;
  const auto all = max_intersecting(complex, r, false, limits);
  report.max_size = all.size;
  report.witnesses.push_back(all.witness);
  for (int v = 0; v < complex.n_vertices(); ++v) {
    const std::size_t s = star_size(complex, v, r);
    if (report.best_star_vertex < 0 || s > report.star_bound) {
      report.star_bound = s;
      report.best_star_vertex = v;
    }
  }
  report.holds_ekr = report.max_size <= report.star_bound;
  if (strict) {
    const auto nonstar = max_intersecting(complex, r, true, limits);
    report.nonstar_max_size = nonstar.size;
    report.witnesses.push_back(nonstar.witness);
    report.strict = nonstar.size < report.max_size && report.max_size == report.star_bound;
  }
  return report;
}

std::size_t beta_count(const Complex& complex, int r, const VertexPrefix& prefix) {
  if (r < 1 || prefix.size() == 0) return 0;
  const Face others = prefix.as_face().without(prefix[0]);
  return static_cast<std::size_t>(std::count_if(complex.faces(r).begin(), complex.faces(r).end(),
                                                [&](Face f) { return f.contains(prefix[0]) && !f.meets(others); }));
}

std::size_t gamma_count(const Complex& complex, int k, const VertexPrefix& prefix) {
  if (k < 0) return 0;
  const Face p = prefix.as_face();
  return static_cast<std::size_t>(
      std::count_if(complex.faces(k).begin(), complex.faces(k).end(), [&](Face f) { return !f.meets(p); }));
}

StabilityReport check_stability(const Complex& complex, int r, const VertexPrefix& prefix, const SearchLimits& limits,
                                bool enforce_hypotheses) {
  StabilityReport report;
  const int n = complex.n_vertices();
  require(r >= 2, "r >= 2 needed, got " + std::to_string(r), report.violated);
  require(prefix.size() == static_cast<std::size_t>(r) + 1,
          "prefix of length r + 1 = " + std::to_string(r + 1) + " needed, got " + std::to_string(prefix.size()),
          report.violated);
  if (prefix.size() > 0 && prefix[prefix.size() - 1] >= n) {
    report.violated.push_back("prefix vertex outside the complex");
    enforce(report.violated, true);
  }
  require(is_shifted_wrt(complex, prefix), "not shifted with respect to " + prefix_string(prefix), report.violated);
  const int depth = depth_by_links(complex);
  require(depth >= 2 * r - 1,
          "depth " + std::to_string(depth) + " below 2r - 1 = " + std::to_string(2 * r - 1), report.violated);
  report.hypotheses_hold = report.violated.empty();
  enforce(report.violated, enforce_hypotheses);
  if (r < 1 || prefix.size() == 0) return report;

  report.beta = beta_count(complex, r, prefix);
  const std::size_t through = star_size(complex, prefix[0], r);
  report.hm_bound = through + 1 - std::min(report.beta, through);
  const auto nonstar = max_intersecting(complex, r, true, limits);
  report.observed_max_nonstar = nonstar.size;
  report.observed_witness = nonstar.witness;

  report.extremal_family = SetFamily::uniform({}, r, n);
  const Face a = prefix.as_face().without(prefix[0]);
  if (prefix.size() == static_cast<std::size_t>(r) + 1 && complex.contains(a)) {
    std::vector<Face> sets{a};
    for (Face f : complex.faces(r))
      if (f.contains(prefix[0]) && f.meets(a)) sets.push_back(f);
    report.extremal_family = SetFamily::uniform(std::move(sets), r, n);
    report.extremal_valid =
        report.extremal_family.is_intersecting() && report.extremal_family.common_intersection().empty();
  }
  return report;
}

namespace {

std::vector<std::string> cross_hypotheses(const Complex& complex, int r, const VertexPrefix& prefix, int slack) {
  std::vector<std::string> violated;
  require(r >= 2, "r >= 2 needed, got " + std::to_string(r), violated);
  require(prefix.size() == static_cast<std::size_t>(r),
          "prefix of length r = " + std::to_string(r) + " needed, got " + std::to_string(prefix.size()), violated);
  if (prefix.size() > 0 && prefix[prefix.size() - 1] >= complex.n_vertices()) {
    violated.push_back("prefix vertex outside the complex");
    enforce(violated, true);
  }
  require(is_shifted_wrt(complex, prefix), "not shifted with respect to " + prefix_string(prefix), violated);
  const int depth = depth_by_links(complex);
  require(2 * r <= depth + slack, "r = " + std::to_string(r) + " too large for depth " + std::to_string(depth), violated);
  return violated;
}

void check_cross_size(std::size_t m, const SearchLimits& limits) {
  if (m > limits.cross_max_faces || m > 63)
    throw Error(ErrorCode::ResourceLimit,
                std::to_string(m) + " faces exceed the enumeration limit of " + std::to_string(limits.cross_max_faces));
}

}  // namespace

CrossReport check_cross_classic(const Complex& complex, int r, const VertexPrefix& prefix, const SearchLimits& limits,
                                bool enforce_hypotheses) {
  CrossReport report;
  report.violated = cross_hypotheses(complex, r, prefix, 1);
  report.hypotheses_hold = report.violated.empty();
  enforce(report.violated, enforce_hypotheses);
  const int n = complex.n_vertices();
  report.witness_a = SetFamily::uniform({}, std::max(r, 0), n);
  report.witness_b = report.witness_a;
  if (r < 1) return report;
  const auto& faces = complex.faces(r);
  check_cross_size(faces.size(), limits);
  report.gamma = gamma_count(complex, r, prefix);
  report.bound = faces.size() - report.gamma + 1;

  const std::size_t m = faces.size();
  std::vector<std::uint64_t> meets(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (faces[i].meets(faces[j])) meets[i] |= std::uint64_t{1} << j;

  std::uint64_t best_b = 0, best_a = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> dfs = [&](std::size_t start, std::uint64_t b,
                                                                            std::uint64_t a) {
    for (std::size_t i = start; i < m; ++i) {
      const std::uint64_t a2 = a & meets[i];
      if (a2 == 0) continue;  // every superset of B keeps A empty
      const std::uint64_t b2 = b | (std::uint64_t{1} << i);
      const std::size_t sum = static_cast<std::size_t>(std::popcount(b2) + std::popcount(a2));
      if (sum > report.observed_max_sum) {
        report.observed_max_sum = sum;
        best_b = b2;
        best_a = a2;
      }
      dfs(i + 1, b2, a2);
    }
  };
  dfs(0, 0, m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);

  std::vector<Face> wa, wb;
  for (std::size_t i = 0; i < m; ++i) {
    if ((best_a >> i) & 1U) wa.push_back(faces[i]);
    if ((best_b >> i) & 1U) wb.push_back(faces[i]);
  }
  report.witness_a = SetFamily::uniform(std::move(wa), r, n);
  report.witness_b = SetFamily::uniform(std::move(wb), r, n);
  return report;
}

CrossReport check_cross_shadow(const Complex& complex, int r, const VertexPrefix& prefix, const SearchLimits& limits,
                               bool enforce_hypotheses) {
  CrossReport report;
  report.violated = cross_hypotheses(complex, r, prefix, 2);
  report.hypotheses_hold = report.violated.empty();
  enforce(report.violated, enforce_hypotheses);
  const int n = complex.n_vertices();
  report.witness_a = SetFamily::uniform({}, std::max(r - 1, 0), n);
  report.witness_b = SetFamily::uniform({}, std::max(r, 0), n);
  if (r < 2) return report;
  const auto& upper = complex.faces(r);
  const auto& lower = complex.faces(r - 1);
  check_cross_size(upper.size(), limits);
  report.gamma = gamma_count(complex, r - 1, prefix);
  report.bound = lower.size() - report.gamma + 1;

  const std::size_t m = upper.size(), q = lower.size();
  std::vector<Bits> meets(m, Bits(q)), below(m, Bits(q));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      if (upper[i].meets(lower[j])) meets[i].set(j);
      if (lower[j].is_subset_of(upper[i])) below[i].set(j);
    }

  std::uint64_t best_b = 0;
  Bits best_a(q);
  std::function<void(std::size_t, std::uint64_t, const Bits&, const Bits&)> dfs =
      [&](std::size_t start, std::uint64_t b, const Bits& a, const Bits& shadow_b) {
        for (std::size_t i = start; i < m; ++i) {
          Bits a2 = a & meets[i];
          Bits s2 = shadow_b;
          s2 |= below[i];
          if (!s2.is_subset_of(a2)) continue;  // A only shrinks and the shadow only grows
          const std::uint64_t b2 = b | (std::uint64_t{1} << i);
          const std::size_t sum = static_cast<std::size_t>(std::popcount(b2)) + a2.count();
          if (sum > report.observed_max_sum) {
            report.observed_max_sum = sum;
            best_b = b2;
            best_a = a2;
          }
          dfs(i + 1, b2, a2, s2);
        }
      };
  dfs(0, 0, Bits::full(q), Bits(q));

  std::vector<Face> wa, wb;
  best_a.for_each([&](std::size_t j) { wa.push_back(lower[j]); });
  for (std::size_t i = 0; i < m; ++i)
    if ((best_b >> i) & 1U) wb.push_back(upper[i]);
  report.witness_a = SetFamily::uniform(std::move(wa), r - 1, n);
  report.witness_b = SetFamily::uniform(std::move(wb), r, n);
  return report;
}

namespace {

// Kuhn's augmenting-path matching of `left` into `right` along inclusion.
struct InclusionMatching {
  std::vector<std::vector<std::size_t>> edges;
  std::vector<long> match_left, match_right;

  InclusionMatching(const std::vector<Face>& left, const std::vector<Face>& right)
      : edges(left.size()), match_left(left.size(), -1), match_right(right.size(), -1) {
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j)
        if (left[i].is_subset_of(right[j])) edges[i].push_back(j);
    for (std::size_t i = 0; i < left.size(); ++i) {
      std::vector<char> seen(right.size(), 0);
      augment(i, seen);
    }
  }

  bool augment(std::size_t u, std::vector<char>& seen) {
    for (std::size_t j : edges[u]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] < 0 || augment(static_cast<std::size_t>(match_right[j]), seen)) {
        match_left[u] = static_cast<long>(j);
        match_right[j] = static_cast<long>(u);
        return true;
      }
    }
    return false;
  }

  std::optional<std::size_t> unmatched() const {
    for (std::size_t i = 0; i < match_left.size(); ++i)
      if (match_left[i] < 0) return i;
    return std::nullopt;
  }

  // Alternating-path closure from an unmatched left vertex: its left part has exactly
  // one more member than its neighbourhood.
  HallViolator violator(std::size_t root, const std::vector<Face>& left, const std::vector<Face>& right) const {
    std::vector<char> left_seen(left.size(), 0), right_seen(right.size(), 0);
    std::vector<std::size_t> stack{root};
    left_seen[root] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t j : edges[u]) {
        if (right_seen[j]) continue;
        right_seen[j] = 1;
        const long w = match_right[j];
        if (w >= 0 && !left_seen[w]) {
          left_seen[w] = 1;
          stack.push_back(static_cast<std::size_t>(w));
        }
      }
    }
    HallViolator h;
    for (std::size_t i = 0; i < left.size(); ++i)
      if (left_seen[i]) h.left.push_back(left[i]);
    for (std::size_t j = 0; j < right.size(); ++j)
      if (right_seen[j]) h.neighbourhood.push_back(right[j]);
    return h;
  }
};

std::string faces_string(const std::vector<Face>& faces) {
  std::string s;
  for (Face f : faces) s += (s.empty() ? "" : " ") + f.to_string();
  return s;
}

}  // namespace

HibiResult hibi_injection(const Complex& complex, int s, int r) {
  HibiResult out;
  const std::vector<Face> left = s >= 0 ? complex.faces(s) : std::vector<Face>{};
  const std::vector<Face> right = r >= 0 ? complex.faces(r) : std::vector<Face>{};
  InclusionMatching matching(left, right);
  if (auto u = matching.unmatched()) {
    out.violator = matching.violator(*u, left, right);
    return out;
  }
  std::vector<std::pair<Face, Face>> map;
  for (std::size_t i = 0; i < left.size(); ++i) map.emplace_back(left[i], right[static_cast<std::size_t>(matching.match_left[i])]);
  out.injection = std::move(map);
  return out;
}

SetFamily augment_sperner(const SetFamily& family, const Complex& complex, int r) {
  for (Face f : family) {
    if (!complex.contains(f)) throw Error(ErrorCode::HypothesisViolated, f.to_string() + " is not a face");
    if (f.size() > r) throw Error(ErrorCode::HypothesisViolated, f.to_string() + " has more than r elements");
  }
  const std::vector<Face> left(family.begin(), family.end());
  const std::vector<Face>& right = complex.faces(r);
  InclusionMatching matching(left, right);
  if (auto u = matching.unmatched()) {
    const HallViolator h = matching.violator(*u, left, right);
    throw Error(ErrorCode::AugmentationImpossible,
                "members {" + faces_string(h.left) + "} have only " + std::to_string(h.neighbourhood.size()) +
                    " r-faces above them: {" + faces_string(h.neighbourhood) + "}");
  }
  std::vector<Face> out;
  for (std::size_t i = 0; i < left.size(); ++i) out.push_back(right[static_cast<std::size_t>(matching.match_left[i])]);
  return SetFamily::uniform(std::move(out), r, family.universe());
}

bool ReductionTrace::verified() const {
  if (outcome == ReductionOutcome::BoundarySpanned) return boundary_witness.has_value() && algebraic_shift_keeps_empty_common;
  return phi_injective && phi_into_link && missing_subset.has_value();
}

ReductionTrace reduction_trace(const Complex& complex, const SetFamily& family, int apex,
                               const std::vector<std::uint64_t>& seeds, PrimeField field) {
  const int n = complex.n_vertices();
  std::vector<std::string> violated;
  if (apex < 0 || apex >= n) throw Error(ErrorCode::HypothesisViolated, "apex outside the complex");
  require(is_near_cone(complex, apex), "not a near-cone at " + std::to_string(apex), violated);
  require(!family.empty() && family.is_uniform() && family.rank() >= 1, "family must be nonempty and uniform", violated);
  require(std::all_of(family.begin(), family.end(), [&](Face f) { return complex.contains(f); }),
          "family members must be faces", violated);
  require(family.is_intersecting(), "family is not intersecting", violated);
  require(family.common_intersection().empty(), "family has a common element", violated);
  enforce(violated, true);
  const int r = family.rank();

  ReductionTrace trace;
  trace.link_face_count = star_size(complex, apex, r);
  std::vector<ShiftPair> allowed;
  for (int w = 0; w < n; ++w)
    if (w != apex) allowed.emplace_back(apex, w);
  trace.shifting = stabilize(family, allowed, true);
  const SetFamily& current = trace.shifting.outcome;

  if (!trace.shifting.blocking_pair) {
    trace.outcome = ReductionOutcome::BoundarySpanned;
    // Stable under every Shift_{a<-w}: for A avoiding a, all of a u A's r-subsets are present.
    for (Face f : current)
      if (!f.contains(apex)) {
        const Face top = f.with(apex);
        bool spanned = true;
        top.for_each_vertex([&](int x) { spanned = spanned && current.contains(top.without(x)); });
        if (spanned) {
          trace.boundary_witness = top;
          break;
        }
      }
    const auto shifted = alg_shift_family_consensus(current, seeds, field);
    trace.algebraic_shift = shifted.value;
    trace.algebraic_shift_keeps_empty_common = shifted.value.common_intersection().empty();
    return trace;
  }

  trace.outcome = ReductionOutcome::BlockedShift;
  trace.blocking_pair = trace.shifting.blocking_pair;
  const int v = trace.blocking_pair->second;
  const Complex lk = link(complex, Face{}.with(apex));
  bool into_link = true;
  std::vector<Face> images;
  for (Face f : current) {
    const Face image = f.contains(apex) ? f.without(apex) : f.without(v);
    trace.phi.emplace_back(f, image);
    images.push_back(image);
    into_link = into_link && image.size() == r - 1 && lk.contains(image);
  }
  std::vector<Face> sorted = images;
  std::sort(sorted.begin(), sorted.end(), LexLess{});
  trace.phi_injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  trace.phi_into_link = into_link;

  // Facets through a that contain a member avoiding a.
  for (Face t : complex.facets()) {
    if (!t.contains(apex)) continue;
    if (std::none_of(current.begin(), current.end(), [&](Face c) { return !c.contains(apex) && c.is_subset_of(t); }))
      continue;
    std::optional<Face> missing;
    for (Face s : subsets_of_size(t.without(apex).without(v), r - 1))
      if (!std::binary_search(sorted.begin(), sorted.end(), s, LexLess{})) {
        missing = s;
        break;
      }
    if (!missing) continue;
    trace.facet = t;
    trace.missing_subset = missing;
    // B_T: maximal traces phi(B) n T over members avoiding v; C_T: images phi(C) inside
    // T over members avoiding a.
    std::vector<Face> bt_raw, ct;
    for (std::size_t i = 0; i < trace.phi.size(); ++i) {
      const Face member = trace.phi[i].first, image = trace.phi[i].second;
      if (!member.contains(v)) bt_raw.push_back(image & t);
      if (!member.contains(apex) && image.is_subset_of(t)) ct.push_back(image);
    }
    std::vector<Face> bt;
    for (Face b : bt_raw)
      if (std::none_of(bt_raw.begin(), bt_raw.end(), [&](Face o) { return o != b && b.is_subset_of(o); }) &&
          std::find(bt.begin(), bt.end(), b) == bt.end())
        bt.push_back(b);
    trace.b_t_size = bt.size();
    trace.c_t_size = ct.size();
    trace.b_t_c_t_cross_intersecting =
        std::all_of(bt.begin(), bt.end(), [&](Face b) { return std::all_of(ct.begin(), ct.end(), [&](Face c) { return b.meets(c); }); });
    break;
  }
  return trace;
}

std::pair<SetFamily, SetFamily> restrict_at_last(const SetFamily& family, int last) {
  std::vector<Face> with, without;
  for (Face f : family) {
    if (f.contains(last))
      with.push_back(f.without(last));
    else
      without.push_back(f);
  }
  return {SetFamily(std::move(with), family.universe()), SetFamily(std::move(without), family.universe())};
}

}  // namespace shiftlab
