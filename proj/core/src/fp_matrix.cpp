#include "grpkit/fp_matrix.hpp"

#include <stdexcept>

#include "grpkit/primes.hpp"

namespace grpkit {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31) || !is_prime(p)) throw std::invalid_argument("modulus must be a prime < 2^31");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = a % p_;
  while (e > 0) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
    e >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  const PrimeField f(p);
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(p, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.reduce(rows[i][j]);
  }
  return m;
}

bool FpMatrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

namespace {

// Gaussian elimination in place; returns pivot columns. Optionally tracks the determinant.
std::vector<std::size_t> row_reduce(FpMatrix& m, std::uint32_t* det) {
  const PrimeField f(m.p());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::uint32_t d = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) {
      d = 0;
      continue;
    }
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
      d = f.neg(d);
    }
    const std::uint32_t lead = m.at(r, c);
    d = f.mul(d, lead);
    const std::uint32_t li = f.inv(lead);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), li);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const std::uint32_t factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  if (det) *det = (r == m.rows() && m.rows() == m.cols()) ? d : 0;
  return pivots;
}

}  // namespace

std::size_t FpMatrix::rank() const {
  FpMatrix copy = *this;
  return row_reduce(copy, nullptr).size();
}

std::uint32_t FpMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  FpMatrix copy = *this;
  std::uint32_t d = 0;
  row_reduce(copy, &d);
  return d;
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  FpMatrix aug(p_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1 % p_;
  }
  const auto piv = row_reduce(aug, nullptr);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  FpMatrix inv(p_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  }
  return inv;
}

std::vector<FpVector> FpMatrix::left_nullspace() const {
  // x A = 0  <=>  A^T x^T = 0: reduce A^T and read off the free columns.
  FpMatrix t = transpose();
  const auto piv = row_reduce(t, nullptr);
  const PrimeField f(p_);
  std::vector<bool> is_pivot(t.cols(), false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < t.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(t.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.neg(t.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows() || a.p() != b.p()) throw std::invalid_argument("matrix shape mismatch");
  const std::uint64_t p = a.p();
  FpMatrix c(a.p(), a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  // Products are < p^2; with p < 2^16 the running sum cannot overflow before a
  // final reduction, otherwise reduce after every term.
  const bool lazy = p < (1u << 16);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a.at(i, k);
      if (aik == 0) continue;
      const auto brow = b.row(k);
      if (lazy) {
        for (std::size_t j = 0; j < brow.size(); ++j) acc[j] += aik * brow[j];
      } else {
        for (std::size_t j = 0; j < brow.size(); ++j) acc[j] = (acc[j] + aik * brow[j]) % p;
      }
    }
    for (std::size_t j = 0; j < acc.size(); ++j) c.at(i, j) = static_cast<std::uint32_t>(acc[j] % p);
  }
  return c;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.p() != b.p()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  const PrimeField f(a.p());
  FpMatrix c(a.p(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = f.add(a.at(i, j), b.at(i, j));
  }
  return c;
}

FpMatrix scaled(const FpMatrix& a, std::uint32_t s) {
  const PrimeField f(a.p());
  FpMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = f.mul(a.at(i, j), s % a.p());
  }
  return c;
}

FpVector operator*(std::span<const std::uint32_t> v, const FpMatrix& a) {
  if (v.size() != a.rows()) throw std::invalid_argument("vector length mismatch");
  const std::uint64_t p = a.p();
  std::vector<std::uint64_t> acc(a.cols(), 0);
  const bool lazy = p < (1u << 16);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::uint64_t vk = v[k];
    if (vk == 0) continue;
    const auto arow = a.row(k);
    if (lazy) {
      for (std::size_t j = 0; j < arow.size(); ++j) acc[j] += vk * arow[j];
    } else {
      for (std::size_t j = 0; j < arow.size(); ++j) acc[j] = (acc[j] + vk * arow[j]) % p;
    }
  }
  FpVector out(a.cols());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = static_cast<std::uint32_t>(acc[j] % p);
  return out;
}

EchelonBasis::EchelonBasis(std::uint32_t p, std::size_t ambient_dim) : field_(p), n_(ambient_dim) {}

void EchelonBasis::reduce(FpVector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint32_t c = v[pivots_[i]];
    if (c == 0) continue;
    const FpVector& r = rows_[i];
    for (std::size_t j = 0; j < n_; ++j) {
      if (r[j]) v[j] = field_.sub(v[j], field_.mul(c, r[j]));
    }
  }
}

bool EchelonBasis::contains(FpVector v) const {
  reduce(v);
  for (std::uint32_t x : v) {
    if (x) return false;
  }
  return true;
}

bool EchelonBasis::add(FpVector v) {
  if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && v[piv] == 0) ++piv;
  if (piv == n_) return false;
  const std::uint32_t li = field_.inv(v[piv]);
  for (auto& x : v) x = field_.mul(x, li);
  // Clear the new pivot column from existing rows.
  for (auto& r : rows_) {
    const std::uint32_t c = r[piv];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (v[j]) r[j] = field_.sub(r[j], field_.mul(c, v[j]));
    }
  }
  // Keep rows sorted by pivot column.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
  return true;
}

FpVector EchelonBasis::coordinates(std::span<const std::uint32_t> v) const {
  FpVector c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

}  // namespace grpkit
