#pragma once

#include "semiramsey/polynomial.hpp"
#include "semiramsey/rational.hpp"

#include <optional>
#include <vector>

namespace semiramsey {

/// Dense row-major square or rectangular matrix of exact scalars.
template <typename T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

/// Determinant by Bareiss fraction-free elimination. Every intermediate
/// division is exact.
Rational determinant(Matrix<Rational> m);

/// Unique solution of A x = b by Bareiss elimination on the augmented matrix,
/// or nullopt when A is singular.
std::optional<std::vector<Rational>> solve_linear(const Matrix<Rational>& a, const std::vector<Rational>& b);

/// Symbolic determinant of a matrix of polynomials (Leibniz expansion).
/// Intended for the small sizes used by orientation and Cramer encodings.
Polynomial determinant(const Matrix<Polynomial>& m);

}  // namespace semiramsey
