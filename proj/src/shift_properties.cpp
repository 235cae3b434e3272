#include "shiftlab/shift_properties.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "shiftlab/homology.hpp"
#include "shiftlab/shifting.hpp"

namespace shiftlab {

const char* to_string(ItemStatus status) {
  switch (status) {
    case ItemStatus::Pass: return "pass";
    case ItemStatus::Fail: return "fail";
    case ItemStatus::Skipped: return "skipped";
  }
  return "?";
}

bool ShiftPropertyReport::all_passed() const {
  return std::none_of(items.begin(), items.end(), [](const PropertyItem& i) { return i.status == ItemStatus::Fail; });
}

const PropertyItem& ShiftPropertyReport::item(const std::string& id) const {
  for (const auto& i : items)
    if (i.id == id) return i;
  throw std::out_of_range("no property item " + id);
}

std::vector<std::size_t> prefix_word_f_vector(const Complex& complex, const VertexPrefix& prefix, const std::string& word) {
  Complex current = complex;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int v = prefix[i];
    if (word[i] == 'L') {
      if (!current.contains(Face{}.with(v))) return {};
      current = link(current, Face{}.with(v));
    } else {
      current = deletion(current, v);
    }
  }
  return current.f_vector();
}

namespace {

class Items {
 public:
  Items() {
    add("1", "shift is shifted with the same cardinality");
    add("2", "shifted inputs are fixed points");
    add("3", "shadow of the shift lies in the shift of the shadow");
    add("4", "intersecting and cross-intersecting families stay so");
    add("5", "shifting is monotone under inclusion");
    add("6", "depth is preserved and equals the minimum facet dimension of the shift");
    add("7", "reduced Betti numbers are preserved");
    add("8", "link and deletion f-vectors along a shifted prefix are preserved");
    add("corollary", "spanning a simplex boundary is preserved");
    add("comb", "combinatorial stabilization yields shifted families");
    add("seeds", "shifted objects agree across seeds");
  }

  void check(const std::string& id, bool ok, const std::string& detail) {
    auto& item = items_[index_.at(id)];
    if (item.status == ItemStatus::Fail) return;
    if (ok) {
      item.status = ItemStatus::Pass;
    } else {
      item.status = ItemStatus::Fail;
      item.detail = detail;
    }
  }

  std::vector<PropertyItem> take() { return std::move(items_); }

 private:
  void add(const std::string& id, const std::string& summary) {
    index_[id] = items_.size();
    items_.push_back({id, summary, ItemStatus::Skipped, {}});
  }

  std::vector<PropertyItem> items_;
  std::map<std::string, std::size_t> index_;
};

bool faces_within(const Complex& small, const Complex& big) {
  return std::all_of(small.facets().begin(), small.facets().end(), [&](Face f) { return big.contains(f); });
}

bool family_within(const SetFamily& small, const SetFamily& big) {
  return std::all_of(small.begin(), small.end(), [&](Face f) { return big.contains(f); });
}

std::string seed_note(std::uint64_t seed) { return " (seed " + std::to_string(seed) + ")"; }

std::vector<std::string> words(std::size_t t) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      next.push_back(w + "L");
      next.push_back(w + "D");
    }
    out = std::move(next);
  }
  return out;
}

// r-faces of the complex meeting every member of the family.
SetFamily cross_partner(const Complex& complex, const SetFamily& family) {
  std::vector<Face> out;
  for (Face b : complex.faces(family.rank()))
    if (std::all_of(family.begin(), family.end(), [&](Face a) { return a.meets(b); })) out.push_back(b);
  return SetFamily::uniform(std::move(out), family.rank(), complex.n_vertices());
}

}  // namespace

ShiftPropertyReport verify_shift_properties(const Complex& complex, const std::optional<SetFamily>& family,
                                            const std::vector<std::uint64_t>& seeds, PrimeField field) {
  Items items;
  ShiftPropertyReport report;
  const int n = complex.n_vertices();
  const int top = complex.dim() + 1;
  const bool complex_shifted = is_shifted(complex);
  const auto depth_in = depth_by_links(complex, field);
  const auto betti_in = reduced_betti_numbers(complex, field);
  const auto apexes = near_cone_apexes(complex);
  const int t = maximal_shifted_prefix(complex);
  const VertexPrefix prefix = VertexPrefix::first(t);
  const VertexPrefix shifted_apex = VertexPrefix::first(1);

  // Proper subcomplexes for monotonicity.
  std::vector<Complex> subcomplexes;
  if (complex.facets().size() >= 2) {
    std::vector<Face> rest(complex.facets().begin(), complex.facets().end() - 1);
    subcomplexes.push_back(Complex::from_facets(rest, n));
  }
  if (complex.dim() >= 1) subcomplexes.push_back(skeleton(complex, complex.dim() - 1));

  std::optional<SetFamily> partner;
  if (family && family->is_uniform() && family->rank() >= 1) {
    SetFamily p = cross_partner(complex, *family);
    if (!p.empty()) partner = std::move(p);
  }

  std::vector<Complex> complex_results;
  std::vector<SetFamily> family_results;

  for (std::uint64_t seed : seeds) {
    const std::string note = seed_note(seed);
    const FpMatrix g = random_invertible(static_cast<std::size_t>(n), seed, field);
    std::vector<SetFamily> shifted_k;
    for (int k = 0; k <= top; ++k) shifted_k.push_back(alg_shift_family(face_family(complex, k), g));
    const Complex shifted = alg_shift_complex(complex, g);
    complex_results.push_back(shifted);

    for (int k = 0; k <= top; ++k) {
      const SetFamily& sk = shifted_k[k];
      items.check("1", is_shifted(sk) && sk.size() == complex.f(k), "F_" + std::to_string(k) + note);
      items.check("2", alg_shift_family(sk, g) == sk, "F_" + std::to_string(k) + note);
      if (k >= 1) {
        const SetFamily shadow_shift = alg_shift_family(shadow(face_family(complex, k)), g);
        items.check("3", family_within(shadow(sk), shadow_shift), "F_" + std::to_string(k) + note);
        if (auto w = spans_simplex_boundary(face_family(complex, k)))
          items.check("corollary", spans_simplex_boundary(sk).has_value(), "F_" + std::to_string(k) + note);
      }
      items.check("1", shifted.f(k) == complex.f(k), "f-vector of the shifted complex" + note);
    }
    if (complex_shifted) items.check("2", shifted == complex, "shifted complex moved" + note);
    for (const Complex& sub : subcomplexes) items.check("5", faces_within(alg_shift_complex(sub, g), shifted), "subcomplex" + note);

    const int depth_out = depth_by_links(shifted, field);
    items.check("6", depth_out == depth_in && shifted.min_facet_size() - 1 == depth_in,
                "depth " + std::to_string(depth_in) + " -> " + std::to_string(depth_out) + note);
    items.check("7", reduced_betti_numbers(shifted, field) == betti_in, "Betti numbers changed" + note);

    for (int a : apexes) {
      for (const std::string& w : words(1))
        items.check("8", prefix_word_f_vector(complex, VertexPrefix({a}), w) == prefix_word_f_vector(shifted, shifted_apex, w),
                    "apex " + std::to_string(a) + " word " + w + note);
    }
    for (std::size_t len = 2; len <= prefix.size(); ++len)
      for (const std::string& w : words(len))
        items.check("8", prefix_word_f_vector(complex, prefix, w) == prefix_word_f_vector(shifted, prefix, w),
                    "prefix word " + w + note);

    if (family) {
      const SetFamily sf = alg_shift_family(*family, g);
      family_results.push_back(sf);
      items.check("1", is_shifted(sf) && sf.size() == family->size(), "family" + note);
      if (is_shifted(*family)) items.check("2", sf == *family, "family" + note);
      if (family->rank() >= 1)
        items.check("3", family_within(shadow(sf), alg_shift_family(shadow(*family), g)), "family" + note);
      if (family->is_intersecting()) items.check("4", sf.is_intersecting(), "family" + note);
      if (partner) items.check("4", cross_intersecting(sf, alg_shift_family(*partner, g)), "cross partner" + note);
      if (spans_simplex_boundary(*family)) items.check("corollary", spans_simplex_boundary(sf).has_value(), "family" + note);
    }
  }

  for (int k = 0; k <= top; ++k) {
    const SetFamily fk = face_family(complex, k);
    items.check("comb", is_shifted(stabilize(fk, all_increasing_pairs(n), false).outcome), "F_" + std::to_string(k));
    if (t >= 1)
      items.check("comb", is_shifted_wrt(stabilize(fk, prefix_pairs(prefix, n), false).outcome, prefix),
                  "F_" + std::to_string(k) + " on the shifted prefix");
  }
  if (family) {
    items.check("comb", is_shifted(stabilize(*family, all_increasing_pairs(n), false).outcome), "family");
    if (t >= 1)
      items.check("comb", is_shifted_wrt(stabilize(*family, prefix_pairs(prefix, n), false).outcome, prefix),
                  "family on the shifted prefix");
  }

  const bool complexes_agree =
      std::all_of(complex_results.begin(), complex_results.end(), [&](const Complex& c) { return c == complex_results.front(); });
  const bool families_agree = std::all_of(family_results.begin(), family_results.end(),
                                          [&](const SetFamily& f) { return f == family_results.front(); });
  report.seeds_agree = complexes_agree && families_agree;
  items.check("seeds", report.seeds_agree, "shifted objects differ between seeds");
  if (!complex_results.empty()) report.shifted = complex_results.front();
  if (!family_results.empty()) report.shifted_family = family_results.front();
  report.items = items.take();
  return report;
}

}  // namespace shiftlab
