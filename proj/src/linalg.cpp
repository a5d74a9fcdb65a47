#include "evalcode/linalg.hpp"

#include <stdexcept>

namespace evalcode {

void Matrix::append_row(std::span<const Elem> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row length does not match the matrix");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix row_reduce(const FiniteField& k, Matrix a, std::vector<std::size_t>* pivots) {
  const std::size_t n = a.rows(), m = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a(p, j), a(r, j));
    }
    const Elem inv = k.inv(a(r, c));
    for (std::size_t j = c; j < m; ++j) a(r, j) = k.mul(a(r, j), inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Elem f = k.neg(a(i, c));
      for (std::size_t j = c; j < m; ++j) {
        if (a(r, j) != 0) a(i, j) = k.add(a(i, j), k.mul(f, a(r, j)));
      }
    }
    piv.push_back(c);
    ++r;
  }
  Matrix out(0, m);
  for (std::size_t i = 0; i < r; ++i) out.append_row(a.row(i));
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::size_t rank(const FiniteField& k, const Matrix& a) { return row_reduce(k, a).rows(); }

bool same_row_space(const FiniteField& k, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  return row_reduce(k, a) == row_reduce(k, b);
}

Matrix multiply(const FiniteField& k, const Matrix& coeffs, const Matrix& a) {
  if (coeffs.cols() != a.rows()) throw std::invalid_argument("matrix dimensions do not match");
  Matrix out(coeffs.rows(), a.cols());
  for (std::size_t i = 0; i < coeffs.rows(); ++i) {
    for (std::size_t l = 0; l < coeffs.cols(); ++l) {
      const Elem c = coeffs(i, l);
      if (c == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = k.add(out(i, j), k.mul(c, a(l, j)));
    }
  }
  return out;
}

}  // namespace evalcode
