#pragma once

#include "gkz/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gkz {

/// Dense exact integer matrix, row-major. Zero rows or columns are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  IntVector column(std::size_t j) const;

  IntMatrix transpose() const;
  /// Columns picked in the given order.
  IntMatrix select_columns(std::span<const std::size_t> indices) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row(target) += factor * row(source)
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);

  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, std::span<const Integer> v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::vector<RatVector> to_rational_rows(const IntMatrix& m);

/// Determinant of a square matrix by fraction-free elimination.
Integer determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Rank over Q of the selected columns.
std::size_t column_rank(const IntMatrix& m, std::span<const std::size_t> columns);

}  // namespace gkz
