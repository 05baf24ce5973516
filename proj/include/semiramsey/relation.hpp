#pragma once

#include "semiramsey/polynomial.hpp"
#include "semiramsey/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace semiramsey {

using Point = std::vector<Rational>;

/// Indexed sequence of points in R^dim. The order is part of the data.
class OrderedPointSet {
 public:
  OrderedPointSet() = default;
  OrderedPointSet(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  /// Sub-sequence in the given (increasing) index order.
  OrderedPointSet select(std::span<const std::size_t> indices) const;

  friend bool operator==(const OrderedPointSet&, const OrderedPointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
};

enum class Comparison : std::uint8_t { Ge, Gt, Eq };

inline bool satisfies(int sign, Comparison cmp) {
  switch (cmp) {
    case Comparison::Ge: return sign >= 0;
    case Comparison::Gt: return sign > 0;
    case Comparison::Eq: return sign == 0;
  }
  return false;
}

struct Atom {
  std::size_t poly_index = 0;
  Comparison cmp = Comparison::Ge;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Boolean combination of polynomial sign conditions.
/// An empty AND is true and an empty OR is false.
class Formula {
 public:
  enum class Op : std::uint8_t { And, Or, Not, Leaf };

  static Formula leaf(std::size_t poly_index, Comparison cmp);
  static Formula all_of(std::vector<Formula> children);
  static Formula any_of(std::vector<Formula> children);
  static Formula negate(Formula child);
  static Formula always_false() { return any_of({}); }
  static Formula always_true() { return all_of({}); }

  Op op() const { return op_; }
  const Atom& atom() const { return atom_; }
  const std::vector<Formula>& children() const { return children_; }

  /// Evaluates with signs[i] the sign of polynomial i.
  bool evaluate(std::span<const int> signs) const;

  /// Copy with every leaf's poly_index shifted by `offset`.
  Formula shifted(std::size_t offset) const;

  std::size_t max_poly_index_plus_one() const;
  std::size_t node_count() const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Op op_ = Op::And;
  Atom atom_{};
  std::vector<Formula> children_;
};

/// A k-ary semi-algebraic relation on points of R^d. Every polynomial is in
/// k*d variables blocked slot-major: tuple slot s owns variables s*d .. s*d+d-1.
class SemiAlgebraicRelation {
 public:
  SemiAlgebraicRelation() = default;
  SemiAlgebraicRelation(std::size_t arity, std::size_t point_dim, std::vector<Polynomial> polys,
                        Formula formula);

  std::size_t arity() const { return arity_; }
  std::size_t point_dim() const { return point_dim_; }
  std::size_t num_vars() const { return arity_ * point_dim_; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  const Formula& formula() const { return formula_; }

  unsigned max_degree() const;
  /// max(point_dim * arity, number of polynomials, max degree). Formula size is not included.
  std::size_t complexity() const;

  std::vector<int> signs(std::span<const Rational> coords) const;
  bool contains(std::span<const Rational> coords) const;
  /// Membership of the tuple P[indices[0]], ..., P[indices[k-1]] (0-based, strictly increasing).
  bool contains(const OrderedPointSet& points, std::span<const std::size_t> indices) const;

  /// Concatenates the selected points into one k*d coordinate vector.
  std::vector<Rational> concatenate(const OrderedPointSet& points,
                                    std::span<const std::size_t> indices) const;

  /// Relation of arity k-1 obtained by fixing the last tuple slot to `last`.
  SemiAlgebraicRelation fix_last_slot(const Point& last) const;

  friend bool operator==(const SemiAlgebraicRelation&, const SemiAlgebraicRelation&) = default;

 private:
  std::size_t arity_ = 0;
  std::size_t point_dim_ = 0;
  std::vector<Polynomial> polys_;
  Formula formula_;
};

using SignVector = std::vector<std::int8_t>;

SignVector sign_vector(std::span<const Polynomial> family, std::span<const Rational> point);

std::size_t count_distinct_sign_vectors(std::span<const Polynomial> family,
                                        std::span<const Point> points);

/// ceil(50*D*r/d)^d. Requires r >= d >= 2 and D >= 1.
BigInt milnor_thom_bound(unsigned max_degree, std::size_t family_size, std::size_t num_vars);

}  // namespace semiramsey
