#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nlsa/rational.hpp"

namespace nlsa {

using Vec = std::vector<Rational>;

[[nodiscard]] bool is_zero(std::span<const Rational> v);
[[nodiscard]] Vec zero_vec(std::size_t n);
[[nodiscard]] Vec unit_vec(std::size_t n, std::size_t i);
Vec& axpy(Vec& y, const Rational& a, std::span<const Rational> x);  // y += a x

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] Vec row_vec(std::size_t r) const { auto s = row(r); return {s.begin(), s.end()}; }
  [[nodiscard]] Vec col_vec(std::size_t c) const;

  void append_row(std::span<const Rational> r);
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

[[nodiscard]] Matrix operator*(const Matrix& a, const Matrix& b);
[[nodiscard]] Vec operator*(const Matrix& a, std::span<const Rational> v);
[[nodiscard]] Matrix operator+(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix operator-(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix operator*(const Rational& s, const Matrix& a);

/// Reduced row-echelon form with zero rows dropped. Pivot columns ascend.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
};

[[nodiscard]] Echelon row_reduce(Matrix m);
[[nodiscard]] std::size_t rank(const Matrix& m);

/// Right kernel {x | m x = 0}, returned as rows in reduced echelon form.
[[nodiscard]] Matrix kernel(const Matrix& m);

/// One solution of m x = b (free variables set to zero), or nullopt.
[[nodiscard]] std::optional<Vec> solve(const Matrix& m, std::span<const Rational> b);

/// Inverse of a square matrix, or nullopt if singular.
[[nodiscard]] std::optional<Matrix> inverse(const Matrix& m);

// Sparse rows: (column, value) pairs sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

void normalize(SparseRow& row);
[[nodiscard]] Vec densify(const SparseRow& row, std::size_t cols);

/// Incremental Gaussian elimination on sparse rows. Used for ranks of coboundary
/// matrices that are too tall to hold densely.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t cols) : cols_(cols) {}

  /// Reduces the row against the stored pivots; keeps it if independent.
  bool add(SparseRow row);
  [[nodiscard]] std::size_t rank() const { return pivot_rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  /// Reduced echelon basis of the row space (dense).
  [[nodiscard]] Echelon echelon() const;

 private:
  std::size_t cols_;
  std::unordered_map<std::size_t, SparseRow> pivot_rows_;  // keyed by leading column, leading entry 1
};

/// Kernel of the matrix whose rows are given sparsely.
[[nodiscard]] Matrix sparse_kernel(const std::vector<SparseRow>& rows, std::size_t cols);

}  // namespace nlsa
