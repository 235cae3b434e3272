#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shiftlab/face.hpp"

namespace shiftlab {

inline constexpr std::uint32_t kDefaultPrime = 2147483647U;  // 2^31 - 1

bool is_prime(std::uint64_t p);

// Arithmetic in Z/pZ for an odd prime p < 2^31. Residues are plain uint32 values in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t p() const { return p_; }
  std::uint32_t reduce(std::int64_t x) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Throws SingularBasis on zero.
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, PrimeField field = PrimeField());
  static FpMatrix identity(std::size_t n, PrimeField field = PrimeField());
  // Entries are reduced mod p.
  static FpMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, PrimeField field = PrimeField());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const std::uint32_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  FpMatrix transposed() const;

  bool operator==(const FpMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_;
  std::vector<std::uint32_t> data_;
};

std::size_t rank(const FpMatrix& m);

// Determinant of the submatrix on the given row and column index sets, both taken in
// increasing order. Throws SizeMismatch unless |rows| == |cols| and both fit the matrix.
std::uint32_t minor(const FpMatrix& g, Face rows, Face cols);

// n x n matrix with seeded pseudo-random entries, resampled until invertible.
// Deterministic in (n, seed, p).
FpMatrix random_invertible(std::size_t n, std::uint64_t seed, PrimeField field = PrimeField());

// Incremental row-independence queries; keeps absorbed rows in reduced row-echelon form.
class RankTracker {
 public:
  RankTracker(std::size_t dimension, PrimeField field = PrimeField());

  // Absorbs the row and returns true iff it is independent of the rows absorbed so far.
  // Throws DimensionMismatch on a wrong-length row.
  bool offer(std::span<const std::uint32_t> row);
  std::size_t rank() const { return basis_.size(); }
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
  PrimeField field_;
  std::vector<std::vector<std::uint32_t>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace shiftlab
