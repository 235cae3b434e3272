#include "shiftlab/fp.hpp"

#include <random>
#include <string>
#include <utility>

#include "shiftlab/error.hpp"

namespace shiftlab {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == kDefaultPrime) return;
  if (p < 3 || p >= (1U << 31) || !is_prime(p))
    throw Error(ErrorCode::OutOfRange, "field characteristic must be an odd prime below 2^31, got " + std::to_string(p));
}

std::uint32_t PrimeField::reduce(std::int64_t x) const {
  const std::int64_t r = x % static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  while (e) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::SingularBasis, "inverse of zero");
  return pow(a, p_ - 2);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, PrimeField field) {
  FpMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, PrimeField field) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.reduce(rows[i][j]);
  }
  return m;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

// In-place forward elimination; returns the rank and accumulates the determinant factor
// (sign and pivots) when the matrix is square.
std::size_t eliminate(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols, const PrimeField& f,
                      std::uint32_t* det) {
  std::size_t r = 0;
  std::uint32_t d = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) {
      d = 0;
      continue;
    }
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
      d = f.neg(d);
    }
    const std::uint32_t pv = a[r * cols + c];
    d = f.mul(d, pv);
    const std::uint32_t pinv = f.inv(pv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint32_t factor = a[i * cols + c];
      if (factor == 0) continue;
      const std::uint32_t scale = f.mul(factor, pinv);
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = f.sub(a[i * cols + j], f.mul(scale, a[r * cols + j]));
    }
    ++r;
  }
  if (det) *det = (r == rows && rows == cols) ? d : 0;
  return r;
}

}  // namespace

std::size_t rank(const FpMatrix& m) {
  std::vector<std::uint32_t> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m(i, j);
  return eliminate(a, m.rows(), m.cols(), m.field(), nullptr);
}

std::uint32_t minor(const FpMatrix& g, Face rows, Face cols) {
  const int k = rows.size();
  if (k != cols.size()) throw Error(ErrorCode::SizeMismatch, "minor needs equally many rows and columns");
  if (k == 0) return 1;
  if (rows.max() >= static_cast<int>(g.rows()) || cols.max() >= static_cast<int>(g.cols()))
    throw Error(ErrorCode::SizeMismatch, "minor index outside the matrix");
  const std::vector<int> ri = rows.vertices(), ci = cols.vertices();
  const auto n = static_cast<std::size_t>(k);
  std::vector<std::uint32_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = g(ri[i], ci[j]);
  std::uint32_t det = 0;
  eliminate(a, n, n, g.field(), &det);
  return det;
}

FpMatrix random_invertible(std::size_t n, std::uint64_t seed, PrimeField field) {
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(field.p()) << 20U) ^ (n * 0x9E3779B97F4A7C15ULL));
  std::uniform_int_distribution<std::uint32_t> dist(0, field.p() - 1);
  while (true) {
    FpMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    if (rank(m) == n) return m;
  }
}

RankTracker::RankTracker(std::size_t dimension, PrimeField field) : dimension_(dimension), field_(field) {}

bool RankTracker::offer(std::span<const std::uint32_t> row) {
  if (row.size() != dimension_) throw Error(ErrorCode::DimensionMismatch, "row length " + std::to_string(row.size()) + " vs " + std::to_string(dimension_));
  if (basis_.size() == dimension_) return false;
  std::vector<std::uint32_t> v(row.begin(), row.end());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::uint32_t c = v[pivots_[b]];
    if (c == 0) continue;
    const auto& br = basis_[b];
    for (std::size_t j = 0; j < dimension_; ++j)
      if (br[j] != 0) v[j] = field_.sub(v[j], field_.mul(c, br[j]));
  }
  std::size_t piv = 0;
  while (piv < dimension_ && v[piv] == 0) ++piv;
  if (piv == dimension_) return false;
  const std::uint32_t inv = field_.inv(v[piv]);
  for (auto& x : v) x = field_.mul(x, inv);
  // Clear the new pivot column from the existing rows to stay fully reduced.
  for (auto& br : basis_) {
    const std::uint32_t c = br[piv];
    if (c == 0) continue;
    for (std::size_t j = 0; j < dimension_; ++j)
      if (v[j] != 0) br[j] = field_.sub(br[j], field_.mul(c, v[j]));
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

}  // namespace shiftlab
