#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/fp.hpp"

using namespace shiftlab;

namespace {

std::vector<std::vector<std::int64_t>> random_rows(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(c));
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime(kDefaultPrime));
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(1000001));
  const PrimeField f(101);
  CHECK(f.reduce(-1) == 100);
  CHECK(f.add(100, 5) == 4);
  CHECK(f.sub(3, 5) == 99);
  CHECK(f.mul(f.inv(37), 37) == 1);
  CHECK(f.pow(2, 100) == 1);
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(PrimeField(100), Error);
  const PrimeField big;
  for (std::uint32_t a : {1U, 2U, 12345U, kDefaultPrime - 1}) CHECK(big.mul(a, big.inv(a)) == 1);
}

TEST_CASE("rank agrees with an independent elimination") {
  std::mt19937_64 rng(17);
  const PrimeField f(oracle::kP);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    auto rows = random_rows(rng, r, c, 2);
    // Force some dependence.
    if (r > 2 && trial % 2) rows[r - 1] = rows[0];
    const auto m = FpMatrix::from_rows(rows, f);
    CHECK(rank(m) == oracle::rank(rows));
    CHECK(rank(m.transposed()) == rank(m));
  }
  CHECK(rank(FpMatrix::identity(5)) == 5);
  CHECK(rank(FpMatrix(3, 4)) == 0);
}

TEST_CASE("minors agree with the Leibniz expansion") {
  std::mt19937_64 rng(23);
  const PrimeField f(oracle::kP);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 5;
    const auto rows = random_rows(rng, n, n, 50);
    const auto m = FpMatrix::from_rows(rows, f);
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto rs = subsets_of_size(Face::prefix(n), k), cs = rs;
    const Face rsel = rs[rng() % rs.size()], csel = cs[rng() % cs.size()];
    std::vector<std::vector<std::int64_t>> sub;
    rsel.for_each_vertex([&](int i) {
      std::vector<std::int64_t> row;
      csel.for_each_vertex([&](int j) { row.push_back(rows[i][j]); });
      sub.push_back(row);
    });
    CHECK(minor(m, rsel, csel) == static_cast<std::uint32_t>(oracle::det_leibniz(sub)));
  }
  const auto m = FpMatrix::identity(3);
  CHECK(minor(m, Face{}, Face{}) == 1);
  CHECK_THROWS_AS(minor(m, Face::of({0}), Face::of({0, 1})), Error);
  CHECK_THROWS_AS(minor(m, Face::of({3}), Face::of({0})), Error);
}

TEST_CASE("random invertible matrices are deterministic and invertible") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto a = random_invertible(6, seed), b = random_invertible(6, seed);
    CHECK(a == b);
    CHECK(rank(a) == 6);
  }
  CHECK_FALSE(random_invertible(6, 1) == random_invertible(6, 2));
  const PrimeField small(3);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) CHECK(rank(random_invertible(4, seed, small)) == 4);
}

TEST_CASE("rank tracker matches batch rank on every prefix") {
  std::mt19937_64 rng(29);
  const PrimeField f(oracle::kP);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 5;
    const auto rows = random_rows(rng, r, c, 1);
    const auto m = FpMatrix::from_rows(rows, f);
    RankTracker t(c, f);
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t before = oracle::rank({rows.begin(), rows.begin() + static_cast<long>(i)});
      const std::size_t after = oracle::rank({rows.begin(), rows.begin() + static_cast<long>(i + 1)});
      CHECK(t.offer(m.row(i)) == (after > before));
      CHECK(t.rank() == after);
    }
  }
  RankTracker t(3);
  const std::vector<std::uint32_t> bad{1, 2};
  CHECK_THROWS_AS(t.offer(bad), Error);
}
