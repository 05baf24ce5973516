#include "semiramsey/linalg.hpp"

#include "semiramsey/error.hpp"

#include <algorithm>
#include <numeric>

namespace semiramsey {

namespace {

// In-place Bareiss forward elimination over the first `n` columns. Returns the
// sign of the applied row permutation, or 0 if a zero pivot column was found.
int bareiss_eliminate(Matrix<Rational>& m, std::size_t n) {
  int sign = 1;
  Rational prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < m.rows() && m(pivot, k).is_zero()) ++pivot;
    if (pivot == m.rows()) return 0;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m.rows(); ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Rational(0);
    }
    prev = m(k, k);
  }
  return sign;
}

}  // namespace

Rational determinant(Matrix<Rational> m) {
  if (m.rows() != m.cols()) throw ArgumentError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  const int sign = bareiss_eliminate(m, n);
  if (sign == 0) return Rational(0);
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::optional<std::vector<Rational>> solve_linear(const Matrix<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw ArgumentError("solve_linear expects an n x n system");
  Matrix<Rational> aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  if (bareiss_eliminate(aug, n) == 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = aug(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= aug(i, j) * x[j];
    x[i] = acc / aug(i, i);
  }
  return x;
}

Polynomial determinant(const Matrix<Polynomial>& m) {
  if (m.rows() != m.cols()) throw ArgumentError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw ArgumentError("symbolic determinant of an empty matrix");
  const std::size_t vars = m(0, 0).num_vars();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total(vars);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Polynomial term = Polynomial::constant(vars, Rational(sign));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace semiramsey
