#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "erdos/permutation.hpp"
#include "erdos/rational.hpp"

namespace erdos {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// Throws DimensionError if the rows are ragged.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> flat() const noexcept { return data_; }

  RationalMatrix transpose() const;
  RationalVector operator*(std::span<const Rational> v) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& m);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Small dense integer matrix; Gram matrices of permutation sets live here.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  long& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  long operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix to_rational() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long> data_;
};

/// Square matrix with nonnegative entries whose rows and columns each sum to
/// exactly one. Only constructible through the validating factory.
class BistochasticMatrix {
 public:
  /// Throws NotBistochasticError naming the first offending row, column or
  /// entry.
  static BistochasticMatrix from(RationalMatrix m);

  static BistochasticMatrix identity(std::size_t n);
  /// J_n: every entry 1/n.
  static BistochasticMatrix uniform(std::size_t n);

  std::size_t n() const noexcept { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const RationalMatrix& matrix() const noexcept { return m_; }

  friend bool operator==(const BistochasticMatrix&, const BistochasticMatrix&) = default;

 private:
  explicit BistochasticMatrix(RationalMatrix m) : m_(std::move(m)) {}
  RationalMatrix m_;
};

/// Permutation matrix with entry (i, p(i)) = 1, so that
/// <A, P_p>_F = sum_i A(i, p(i)) and matrix(a) * matrix(b) = matrix(compose(b, a)).
BistochasticMatrix perm_to_matrix(const Permutation& p);

/// Rank over Q by fraction-free elimination.
std::size_t rank(const RationalMatrix& m);

/// Unique solution of m x = rhs. Throws DimensionError on shape mismatch and
/// SingularMatrixError when m is singular.
RationalVector solve(const RationalMatrix& m, std::span<const Rational> rhs);
RationalVector solve(const IntMatrix& m, std::span<const Rational> rhs);

/// Throws DimensionError unless square, SingularMatrixError if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Basis of {v : m v = 0}.
std::vector<RationalVector> null_space(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Leading principal minors det(m[0..k, 0..k]) for k = 1..rows.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// Whether the n^2-dimensional flattenings of the permutation matrices are
/// linearly independent. Throws DimensionError on mixed sizes.
bool linear_independent(std::span<const Permutation> perms);
/// Same with a constant coordinate appended to every flattening.
bool affine_independent(std::span<const Permutation> perms);

/// Sum of entrywise products. Throws DimensionError on shape mismatch.
Rational frobenius_inner(const RationalMatrix& a, const RationalMatrix& b);
inline Rational frobenius_inner(const BistochasticMatrix& a, const BistochasticMatrix& b) {
  return frobenius_inner(a.matrix(), b.matrix());
}

/// Row-echelon basis grown one integer vector at a time, with undo. Used to
/// track the rank of a permutation set incrementally during a search.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

  /// Appends `v` if it is independent of the current rows; returns whether
  /// it was appended.
  bool push_if_independent(std::span<const long> v);
  void pop();

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }

 private:
  struct Row {
    std::vector<BigInt> coeffs;
    std::size_t pivot;
  };
  std::size_t dim_;
  std::vector<Row> rows_;
};

/// 0/1 flattening of a permutation matrix, row-major.
std::vector<long> perm_indicator(const Permutation& p);

/// Text format: one row per line, rational literals separated by whitespace;
/// lines whose first non-blank character is '#' are comments; blank lines are
/// ignored. Throws ParseError with the 1-based line and offending token.
RationalMatrix parse_matrix(std::string_view text);
/// Renders in the same format, columns padded for readability.
std::string format_matrix(const RationalMatrix& m);

}  // namespace erdos
