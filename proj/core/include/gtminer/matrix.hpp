#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gtminer {

/// Dense row-major matrix of doubles. Rows are records, columns features.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds a matrix from nested row lists; all rows must share a length.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  std::vector<double> column(std::size_t c) const;

  /// Appends a row; its length must equal cols() unless the matrix is empty.
  void append_row(std::span<const double> values);

  /// New matrix holding the given rows, in the given order.
  Matrix select_rows(std::span<const std::size_t> indices) const;

  Matrix transposed() const;

  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

double dot(std::span<const double> a, std::span<const double> b) noexcept;

double squared_distance(std::span<const double> a, std::span<const double> b) noexcept;

}  // namespace gtminer
