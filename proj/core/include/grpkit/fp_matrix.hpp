#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace grpkit {

using FpVector = std::vector<std::uint32_t>;

// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  // Requires a != 0.
  std::uint32_t inv(std::uint32_t a) const noexcept { return pow(a, p_ - 2); }
  std::uint32_t reduce(std::int64_t v) const noexcept;

 private:
  std::uint32_t p_;
};

// Dense matrix over F_p. Modules use row vectors: v is acted on as v * A.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  static FpMatrix identity(std::uint32_t p, std::size_t n);
  // Entries are reduced mod p. Throws std::invalid_argument on shape mismatch.
  static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::span<const std::uint32_t> row(std::size_t r) const noexcept { return {&data_[r * cols_], cols_}; }
  std::span<std::uint32_t> row(std::size_t r) noexcept { return {&data_[r * cols_], cols_}; }

  bool is_identity() const noexcept;
  FpMatrix transpose() const;
  std::size_t rank() const;
  std::uint32_t determinant() const;
  bool is_invertible() const { return rows_ == cols_ && determinant() != 0; }
  // Throws std::domain_error if singular.
  FpMatrix inverse() const;
  // Basis of {x : x * A = 0}.
  std::vector<FpVector> left_nullspace() const;

  bool operator==(const FpMatrix&) const = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

// Throws std::invalid_argument on mismatched shapes or moduli.
FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix scaled(const FpMatrix& a, std::uint32_t c);
// Row vector times matrix.
FpVector operator*(std::span<const std::uint32_t> v, const FpMatrix& a);

// Subspace of F_p^n kept in reduced row echelon form (pivots are 1 and the
// pivot columns are zero in every other row).
class EchelonBasis {
 public:
  EchelonBasis(std::uint32_t p, std::size_t ambient_dim);

  std::uint32_t p() const noexcept { return field_.p(); }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<FpVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Reduces v modulo the subspace in place; afterwards v is zero on every pivot column.
  void reduce(FpVector& v) const;
  bool contains(FpVector v) const;
  // Adds v to the span; returns false if v was already in it.
  bool add(FpVector v);
  // Coordinates of a vector of the subspace with respect to rows().
  FpVector coordinates(std::span<const std::uint32_t> v) const;

 private:
  PrimeField field_;
  std::size_t n_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace grpkit
