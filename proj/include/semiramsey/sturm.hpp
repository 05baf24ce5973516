#pragma once

#include "semiramsey/polynomial.hpp"

#include <vector>

namespace semiramsey {

/// Sturm sequence g, g', -rem(g, g'), ... ending at the last nonzero remainder.
class SturmSequence {
 public:
  /// Throws ArgumentError for the zero polynomial or a non-univariate input.
  explicit SturmSequence(const Polynomial& g);

  const std::vector<Polynomial>& polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }

  /// Sign changes of the sequence evaluated at xi, zeros skipped.
  std::size_t sign_changes(const Rational& xi) const;

  /// Distinct real roots in the open interval (a, b).
  /// Throws ArgumentError if a >= b and PreconditionError if g(a) or g(b) is zero.
  std::size_t count_roots(const Rational& a, const Rational& b) const;

 private:
  std::vector<Polynomial> polys_;
};

inline std::size_t count_real_roots(const Polynomial& g, const Rational& a, const Rational& b) {
  return SturmSequence(g).count_roots(a, b);
}

}  // namespace semiramsey
