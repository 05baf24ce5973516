#pragma once

#include "semiramsey/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace semiramsey {

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by exponent vectors of length num_vars(); zero
/// coefficients are never stored, so the zero polynomial has no terms.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  /// The monomial x_{index} (0-based) in num_vars variables.
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  /// Univariate polynomial from coefficients, lowest degree first.
  static Polynomial univariate(std::span<const Rational> coeffs);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Maximum total degree; 0 for constants and for the zero polynomial.
  unsigned degree() const;
  /// Largest exponent of one variable across all terms.
  unsigned degree_in(std::size_t var) const;

  /// Adds c * x^e. Drops the term if the coefficient cancels.
  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;

  Rational evaluate(std::span<const Rational> point) const;
  int sign_at(std::span<const Rational> point) const { return evaluate(point).sign(); }

  /// Substitutes the given variables and re-indexes the remaining ones in
  /// their original order. Entries of `fixed` are (variable index, value).
  Polynomial restrict(std::span<const std::pair<std::size_t, Rational>> fixed) const;

  /// Embeds into a larger variable space: variable i maps to var_map[i].
  Polynomial remap(std::size_t new_num_vars, std::span<const std::size_t> var_map) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // --- univariate helpers (num_vars() == 1) ---
  /// Leading coefficient of a univariate polynomial; zero for the zero polynomial.
  Rational leading_coefficient() const;
  Polynomial derivative() const;
  /// Euclidean division by a nonzero univariate divisor over the rationals.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::string to_string() const;

 private:
  void require_univariate(const char* op) const;
  std::size_t num_vars_ = 0;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

}  // namespace semiramsey
