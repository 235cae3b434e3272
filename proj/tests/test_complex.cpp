#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "shiftlab/complex.hpp"
#include "shiftlab/error.hpp"

using namespace shiftlab;
using testing_support::faces_of;

TEST_CASE("lex order on faces matches ascending tuples") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> mask(0, (1U << 9) - 1);
  for (int i = 0; i < 2000; ++i) {
    const Face a(mask(rng)), b(mask(rng));
    CHECK(lex_less(a, b) == (a.vertices() < b.vertices()));
  }
  CHECK(lex_less(Face::of({0, 1, 4}), Face::of({0, 2, 3})));
  CHECK(lex_less(Face::of({0, 1}), Face::of({0, 1, 2})));
  CHECK_FALSE(lex_less(Face::of({1}), Face::of({1})));
}

TEST_CASE("k-subsets are complete and sorted") {
  const Face ground = Face::of({1, 3, 4, 6, 8, 9});
  for (int k = 0; k <= 6; ++k) {
    const auto subs = subsets_of_size(ground, k);
    CHECK(subs.size() == oracle::binom(6, k));
    for (std::size_t i = 1; i < subs.size(); ++i) CHECK(lex_less(subs[i - 1], subs[i]));
    for (Face s : subs) CHECK((s.size() == k && s.is_subset_of(ground)));
  }
  CHECK(subsets_of_size(ground, 7).empty());
}

TEST_CASE("face basics") {
  const Face f = Face::of({0, 2, 5});
  CHECK(f.size() == 3);
  CHECK(f.dim() == 2);
  CHECK(f.min() == 0);
  CHECK(f.max() == 5);
  CHECK(f.swapped(5, 1) == Face::of({0, 1, 2}));
  CHECK(f.to_string() == "{0,2,5}");
  CHECK(Face::prefix(3) == Face::of({0, 1, 2}));
}

TEST_CASE("set families") {
  const SetFamily fam({Face::of({1, 2}), Face::of({0, 1}), Face::of({0, 1})}, 4);
  CHECK(fam.size() == 2);
  CHECK(fam[0] == Face::of({0, 1}));
  CHECK(fam.is_uniform());
  CHECK(fam.rank() == 2);
  CHECK(fam.is_intersecting());
  CHECK(fam.common_intersection() == Face::of({1}));
  CHECK(SetFamily({}, 4).common_intersection() == Face::prefix(4));
  CHECK_THROWS_AS(SetFamily::uniform({Face::of({0})}, 2, 3), Error);
  const SetFamily mixed({Face::of({0}), Face::of({1, 2})}, 3);
  CHECK_FALSE(mixed.is_uniform());
  CHECK(mixed.is_sperner());
  CHECK_FALSE(SetFamily({Face::of({0}), Face::of({0, 2})}, 3).is_sperner());
  CHECK(cross_intersecting(SetFamily({Face::of({0, 1})}, 3), SetFamily({Face::of({1, 2})}, 3)));
  CHECK_THROWS_AS(VertexPrefix({2, 1}), Error);
}

TEST_CASE("complex construction") {
  const auto c = Complex::from_facets({Face::of({0, 1, 2}), Face::of({0, 3, 4}), Face::of({0, 1})}, 5);
  CHECK(c.facets().size() == 2);
  CHECK(c.f_vector() == std::vector<std::size_t>{1, 5, 6, 2});
  CHECK(c.dim() == 2);
  CHECK(c.min_facet_size() == 3);
  CHECK_THROWS_AS(Complex::from_facets({}, 3), Error);
  CHECK_THROWS_AS(Complex::from_facets({Face::of({0, 3})}, 3), Error);
  CHECK(Complex::simplex(4).f_vector() == std::vector<std::size_t>{1, 4, 6, 4, 1});
  CHECK(Complex::simplex_boundary(4).f_vector() == std::vector<std::size_t>{1, 4, 6, 4});
  const auto voidc = Complex::from_facets({Face{}}, 3);
  CHECK(voidc.dim() == -1);
  CHECK(voidc.f_vector() == std::vector<std::size_t>{1});
}

TEST_CASE("faces, links and deletions agree with brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto c = testing_support::random_mixed_complex(rng, n, 4, 1 + static_cast<int>(rng() % 5));
    const auto all = faces_of(c);
    CHECK(oracle::to_sets(c.all_faces()) == all);
    for (int k = 0; k <= c.dim() + 1; ++k) {
      CHECK(oracle::to_sets(c.faces(k)) == oracle::faces_of_size(all, static_cast<std::size_t>(k)));
      for (std::size_t i = 1; i < c.faces(k).size(); ++i) CHECK(lex_less(c.faces(k)[i - 1], c.faces(k)[i]));
    }
    for (Face f : c.all_faces()) {
      if (f.size() > 2) continue;
      CHECK(faces_of(link(c, f)) == oracle::link(all, f.vertices()));
    }
    for (int v = 0; v < n; ++v) CHECK(faces_of(deletion(c, v)) == oracle::deletion(all, v));
    CHECK(is_shifted(c) == oracle::is_shifted(all, n));
    for (int a = 0; a < n; ++a) CHECK(is_near_cone(c, a) == oracle::is_near_cone(all, a));
    for (int d = -1; d <= c.dim(); ++d) {
      oracle::Sets expect;
      for (const auto& f : all)
        if (static_cast<int>(f.size()) <= d + 1) expect.insert(f);
      CHECK(faces_of(skeleton(c, d)) == expect);
    }
  }
}

TEST_CASE("link of a non-face throws") {
  const auto c = Complex::from_facets({Face::of({0, 1}), Face::of({1, 2})}, 3);
  CHECK_THROWS_AS(link(c, Face::of({0, 2})), Error);
  CHECK(link(c, Face{}) == c);
  CHECK(link(c, Face::of({1})).facets() == std::vector<Face>{Face::of({0}), Face::of({2})});
}

TEST_CASE("shiftedness with respect to a prefix") {
  // Cone over the boundary of {1,2,3}.
  const auto c = Complex::from_facets({Face::of({0, 1, 2}), Face::of({0, 1, 3}), Face::of({0, 2, 3})}, 4);
  CHECK(is_shifted_wrt(c, VertexPrefix({0})));
  CHECK(is_near_cone(c, 0));
  const auto cone = Complex::from_facets({Face::of({0, 1, 2}), Face::of({0, 1, 3})}, 4);
  CHECK(is_shifted_wrt(cone, VertexPrefix({0, 1})));
  CHECK(is_t_fold_near_cone(cone, VertexPrefix({0, 1})));
  CHECK(maximal_shifted_prefix(cone) == 4);
  const auto path = Complex::from_facets({Face::of({0, 1}), Face::of({1, 2}), Face::of({2, 3})}, 4);
  CHECK_FALSE(is_near_cone(path, 0));
  CHECK(near_cone_apexes(path).empty());
  CHECK(maximal_shifted_prefix(path) == 0);
}

TEST_CASE("shadow and simplex boundaries") {
  const SetFamily tri = SetFamily::uniform({Face::of({0, 1}), Face::of({0, 2}), Face::of({1, 2}), Face::of({2, 3})}, 2, 4);
  CHECK(shadow(tri) == SetFamily::uniform({Face::of({0}), Face::of({1}), Face::of({2}), Face::of({3})}, 1, 4));
  CHECK(spans_simplex_boundary(tri) == Face::of({0, 1, 2}));
  const SetFamily star = SetFamily::uniform({Face::of({0, 1}), Face::of({0, 2}), Face::of({0, 3})}, 2, 4);
  CHECK_FALSE(spans_simplex_boundary(star).has_value());
  CHECK_THROWS_AS(shadow(SetFamily({Face::of({0}), Face::of({1, 2})}, 3)), Error);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5, k = 2 + static_cast<int>(rng() % 2);
    std::vector<Face> sets;
    for (Face s : subsets_of_size(Face::prefix(n), k))
      if (rng() % 3 != 0) sets.push_back(s);
    const SetFamily fam = SetFamily::uniform(sets, k, n);
    std::optional<Face> expect;
    for (Face top : subsets_of_size(Face::prefix(n), k + 1)) {
      bool all = true;
      top.for_each_vertex([&](int x) { all = all && fam.contains(top.without(x)); });
      if (all) {
        expect = top;
        break;
      }
    }
    CHECK(spans_simplex_boundary(fam) == expect);
  }
}

TEST_CASE("closure") {
  const std::vector<Face> faces{Face::of({0, 1}), Face::of({1}), Face::of({2, 3})};
  const auto c = closure(faces, 4);
  CHECK(c.facets() == std::vector<Face>{Face::of({0, 1}), Face::of({2, 3})});
}
