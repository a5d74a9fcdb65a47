#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evalcode/gf.hpp"

namespace evalcode {

/// Dense row-major matrix of field element codes.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  void append_row(std::span<const Elem> r);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

/// Reduced row echelon form; zero rows are removed. `pivots` receives pivot columns.
Matrix row_reduce(const FiniteField& k, Matrix a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const FiniteField& k, const Matrix& a);
/// True iff the row spaces coincide.
bool same_row_space(const FiniteField& k, const Matrix& a, const Matrix& b);
/// coeffs (r x k) times a (k x n).
Matrix multiply(const FiniteField& k, const Matrix& coeffs, const Matrix& a);

}  // namespace evalcode
