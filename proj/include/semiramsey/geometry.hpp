#pragma once

#include "semiramsey/relation.hpp"

#include <optional>
#include <span>
#include <vector>

namespace semiramsey {

/// Sign of det of the (d+1)x(d+1) matrix with columns (1, p_j).
int orientation(std::span<const Point> points);

/// Arity d+1 relation on R^d: positively oriented tuples.
SemiAlgebraicRelation order_type_relation(std::size_t d);

struct GeneralPositionReport {
  bool general = true;
  std::vector<std::size_t> witness;  // 0-based degenerate tuple
};

GeneralPositionReport general_position_points(const OrderedPointSet& points);

/// a . x = b
struct Hyperplane {
  std::vector<Rational> coeffs;
  Rational offset;

  Hyperplane() = default;
  Hyperplane(std::vector<Rational> a, Rational b);

  std::size_t dim() const { return coeffs.size(); }
  /// The point (a_1, ..., a_d, b) of R^{d+1}.
  Point representation() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

struct Arrangement {
  std::size_t dim = 0;
  std::vector<Hyperplane> hyperplanes;

  Arrangement() = default;
  Arrangement(std::size_t d, std::vector<Hyperplane> hs);

  std::size_t size() const { return hyperplanes.size(); }
  OrderedPointSet representation_points() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

/// Common point of d hyperplanes in R^d. Throws DegeneracyError if singular.
Point hyperplane_intersection(std::span<const Hyperplane> hs);

struct ArrangementPositionReport {
  bool general = true;
  /// 0-based: a singular d-subset, or two d-subsets sharing a vertex (concatenated).
  std::vector<std::size_t> witness;
};

ArrangementPositionReport general_position_hyperplanes(const Arrangement& a);

/// Arity d relation on representation points in R^{d+1}: the vertex of the d
/// hyperplanes has positive d-th coordinate. By Cramer's rule that is
/// det(A_d) and det(A) sharing a strict sign, A_d being A with its last column
/// replaced by b.
SemiAlgebraicRelation one_sided_relation(std::size_t d);

struct OneSidedMembership {
  bool member = false;
  bool degenerate = false;  // singular system or vertex on x_d = 0
};

OneSidedMembership one_sided_membership(std::span<const Hyperplane> hs);

/// All vertices strictly on one side of x_d = 0. Throws PreconditionError if the
/// arrangement is not in general position or a vertex lies on x_d = 0.
bool is_one_sided(const Arrangement& a);

/// x_d = coeffs . chart + constant on the pivot hyperplane.
struct AffineFunctional {
  std::vector<Rational> coeffs;
  Rational constant;
};

struct Projection {
  Arrangement chart;                  // dimension d-1
  std::vector<std::size_t> members;   // original indices, in order, pivot excluded
  std::size_t dropped_axis = 0;       // 0-based axis eliminated by the chart
  /// The image of x_d = 0 intersected with the pivot. When the dropped axis is
  /// the last one this is `last_coordinate` = 0 in chart coordinates.
  AffineFunctional last_coordinate;
};

/// Intersects every other hyperplane with the pivot and expresses the result in
/// the chart dropping the pivot's largest-|coefficient| axis (ties: the largest index).
/// Requires d >= 3. Throws DegeneracyError if a member is parallel to the pivot.
Projection project_onto_hyperplane(const Arrangement& a, std::size_t pivot);

/// Every point is a hull vertex. Throws PreconditionError if not in general position.
bool is_convex_position(const OrderedPointSet& points);

}  // namespace semiramsey
