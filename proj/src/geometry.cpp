#include "semiramsey/geometry.hpp"

#include "semiramsey/error.hpp"
#include "semiramsey/linalg.hpp"
#include "semiramsey/subsets.hpp"

#include <algorithm>
#include <map>

namespace semiramsey {

int orientation(std::span<const Point> points) {
  if (points.empty()) throw ArgumentError("orientation needs d+1 points");
  const std::size_t d = points.size() - 1;
  Matrix<Rational> m(d + 1, d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    if (points[j].size() != d) throw ArgumentError("orientation needs d+1 points in R^d");
    m(0, j) = Rational(1);
    for (std::size_t i = 0; i < d; ++i) m(i + 1, j) = points[j][i];
  }
  return determinant(std::move(m)).sign();
}

SemiAlgebraicRelation order_type_relation(std::size_t d) {
  if (d < 1) throw ArgumentError("order type relation requires d >= 1");
  const std::size_t vars = (d + 1) * d;
  Matrix<Polynomial> m(d + 1, d + 1, Polynomial(vars));
  for (std::size_t j = 0; j <= d; ++j) {
    m(0, j) = Polynomial::constant(vars, Rational(1));
    for (std::size_t i = 0; i < d; ++i) m(i + 1, j) = Polynomial::variable(vars, j * d + i);
  }
  return SemiAlgebraicRelation(d + 1, d, {determinant(m)}, Formula::leaf(0, Comparison::Gt));
}

GeneralPositionReport general_position_points(const OrderedPointSet& points) {
  GeneralPositionReport out;
  const std::size_t d = points.dim();
  for_each_combination(points.size(), d + 1, [&](const std::vector<std::size_t>& c) {
    std::vector<Point> tuple;
    for (auto i : c) tuple.push_back(points[i]);
    if (orientation(tuple) == 0) {
      out.general = false;
      out.witness = c;
      return false;
    }
    return true;
  });
  return out;
}

Hyperplane::Hyperplane(std::vector<Rational> a, Rational b) : coeffs(std::move(a)), offset(std::move(b)) {
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); }))
    throw ArgumentError("hyperplane coefficients are all zero");
}

Point Hyperplane::representation() const {
  Point p = coeffs;
  p.push_back(offset);
  return p;
}

Arrangement::Arrangement(std::size_t d, std::vector<Hyperplane> hs) : dim(d), hyperplanes(std::move(hs)) {
  if (d < 1) throw ArgumentError("arrangement dimension must be positive");
  for (const auto& h : hyperplanes)
    if (h.dim() != d) throw ArgumentError("hyperplane dimension does not match arrangement");
}

OrderedPointSet Arrangement::representation_points() const {
  std::vector<Point> pts;
  for (const auto& h : hyperplanes) pts.push_back(h.representation());
  return OrderedPointSet(dim + 1, std::move(pts));
}

namespace {

std::optional<Point> try_intersection(std::span<const Hyperplane> hs) {
  const std::size_t d = hs.size();
  Matrix<Rational> a(d, d);
  std::vector<Rational> b(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (hs[i].dim() != d) throw ArgumentError("intersection needs d hyperplanes in R^d");
    for (std::size_t j = 0; j < d; ++j) a(i, j) = hs[i].coeffs[j];
    b[i] = hs[i].offset;
  }
  return solve_linear(a, b);
}

std::vector<Hyperplane> pick(const Arrangement& a, std::span<const std::size_t> idx) {
  std::vector<Hyperplane> hs;
  for (auto i : idx) hs.push_back(a.hyperplanes[i]);
  return hs;
}

}  // namespace

Point hyperplane_intersection(std::span<const Hyperplane> hs) {
  if (hs.empty()) throw ArgumentError("intersection of no hyperplanes");
  auto p = try_intersection(hs);
  if (!p) throw DegeneracyError("hyperplanes do not meet in a single point");
  return *p;
}

ArrangementPositionReport general_position_hyperplanes(const Arrangement& a) {
  ArrangementPositionReport out;
  std::map<Point, std::vector<std::size_t>> seen;
  for_each_combination(a.size(), a.dim, [&](const std::vector<std::size_t>& c) {
    auto v = try_intersection(pick(a, c));
    if (!v) {
      out.general = false;
      out.witness = c;
      return false;
    }
    auto [it, fresh] = seen.emplace(*v, c);
    if (!fresh) {
      out.general = false;
      out.witness = it->second;
      out.witness.insert(out.witness.end(), c.begin(), c.end());
      return false;
    }
    return true;
  });
  return out;
}

SemiAlgebraicRelation one_sided_relation(std::size_t d) {
  if (d < 2) throw ArgumentError("one-sided relation requires d >= 2");
  const std::size_t w = d + 1;
  const std::size_t vars = d * w;
  Matrix<Polynomial> den(d, d, Polynomial(vars));
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t j = 0; j < d; ++j) den(s, j) = Polynomial::variable(vars, s * w + j);
  Matrix<Polynomial> num = den;
  for (std::size_t s = 0; s < d; ++s) num(s, d - 1) = Polynomial::variable(vars, s * w + d);
  auto positive = Formula::all_of({Formula::leaf(0, Comparison::Gt), Formula::leaf(1, Comparison::Gt)});
  auto negative = Formula::all_of({Formula::negate(Formula::leaf(0, Comparison::Ge)),
                                   Formula::negate(Formula::leaf(1, Comparison::Ge))});
  return SemiAlgebraicRelation(d, w, {determinant(num), determinant(den)},
                               Formula::any_of({std::move(positive), std::move(negative)}));
}

OneSidedMembership one_sided_membership(std::span<const Hyperplane> hs) {
  auto v = try_intersection(hs);
  if (!v) return {false, true};
  const int s = v->back().sign();
  return {s > 0, s == 0};
}

bool is_one_sided(const Arrangement& a) {
  const auto gp = general_position_hyperplanes(a);
  if (!gp.general) throw PreconditionError("arrangement is not in general position");
  int side = 0;
  bool mixed = false;
  for_each_combination(a.size(), a.dim, [&](const std::vector<std::size_t>& c) {
    const int s = hyperplane_intersection(pick(a, c)).back().sign();
    if (s == 0) throw PreconditionError("arrangement has a vertex on x_d = 0");
    if (side == 0) side = s;
    mixed = mixed || s != side;
    return true;
  });
  return !mixed;
}

Projection project_onto_hyperplane(const Arrangement& a, std::size_t pivot) {
  const std::size_t d = a.dim;
  if (d < 3) throw ArgumentError("projection requires d >= 3");
  if (pivot >= a.size()) throw ArgumentError("pivot index out of range");
  const Hyperplane& q = a.hyperplanes[pivot];

  std::size_t axis = 0;
  for (std::size_t j = 1; j < d; ++j)
    if (q.coeffs[j].abs() >= q.coeffs[axis].abs()) axis = j;
  const Rational& lead = q.coeffs[axis];

  // x_axis = (b - sum_{j != axis} a_j y_j) / a_axis
  std::vector<Rational> elim;
  for (std::size_t j = 0; j < d; ++j)
    if (j != axis) elim.push_back(-q.coeffs[j] / lead);
  const Rational elim_const = q.offset / lead;

  Projection out;
  out.dropped_axis = axis;
  std::vector<Hyperplane> chart;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == pivot) continue;
    const Hyperplane& h = a.hyperplanes[i];
    std::vector<Rational> c;
    for (std::size_t j = 0, k = 0; j < d; ++j)
      if (j != axis) c.push_back(h.coeffs[j] + h.coeffs[axis] * elim[k++]);
    Rational b = h.offset - h.coeffs[axis] * elim_const;
    auto first = std::find_if(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); });
    if (first == c.end()) throw DegeneracyError("hyperplane " + std::to_string(i + 1) + " is parallel to the pivot");
    if (first->sign() < 0) {
      for (auto& x : c) x = -x;
      b = -b;
    }
    chart.emplace_back(std::move(c), std::move(b));
    out.members.push_back(i);
  }
  out.chart = Arrangement(d - 1, std::move(chart));

  if (axis == d - 1) {
    out.last_coordinate = {elim, elim_const};
  } else {
    std::vector<Rational> unit(d - 1);
    unit[d - 2] = Rational(1);
    out.last_coordinate = {std::move(unit), Rational(0)};
  }
  return out;
}

bool is_convex_position(const OrderedPointSet& points) {
  if (points.dim() != 2) throw ArgumentError("convex position is implemented in the plane");
  if (!general_position_points(points).general) throw PreconditionError("points are not in general position");
  const std::size_t n = points.size();
  auto orient = [&](std::size_t i, std::size_t j, std::size_t k) {
    const std::array<Point, 3> t{points[i], points[j], points[k]};
    return orientation(t);
  };
  for (std::size_t p = 0; p < n; ++p) {
    const bool inside = !for_each_combination(n, 3, [&](const std::vector<std::size_t>& c) {
      if (c[0] == p || c[1] == p || c[2] == p) return true;
      const int o = orient(c[0], c[1], c[2]);
      return !(orient(c[0], c[1], p) == o && orient(c[1], c[2], p) == o && orient(c[2], c[0], p) == o);
    });
    if (inside) return false;
  }
  return true;
}

}  // namespace semiramsey
