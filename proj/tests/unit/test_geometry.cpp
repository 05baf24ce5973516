#include "semiramsey/error.hpp"
#include "semiramsey/geometry.hpp"
#include "semiramsey/homogeneous.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace semiramsey;

namespace {

Hyperplane hp(std::initializer_list<long> a, long b) { return Hyperplane({a.begin(), a.end()}, Rational(b)); }

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("orientation examples") {
  const std::vector<Point> ccw{{0, 0}, {1, 0}, {0, 1}};
  const std::vector<Point> cw{{0, 0}, {0, 1}, {1, 0}};
  const std::vector<Point> flat{{0, 0}, {1, 1}, {2, 2}};
  CHECK(orientation(ccw) == 1);
  CHECK(orientation(cw) == -1);
  CHECK(orientation(flat) == 0);
  const std::vector<Point> wrong{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(orientation(wrong), ArgumentError);
}

TEST_CASE("orientation is alternating and affine invariant") {
  CounterRng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<Point> pts;
    for (std::size_t i = 0; i <= d; ++i) pts.push_back(testsupport::random_point(rng, d, -10, 10, 3));
    const int o = orientation(pts);
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = i + 1; j <= d; ++j) {
        auto swapped = pts;
        std::swap(swapped[i], swapped[j]);
        CHECK(orientation(swapped) == -o);
      }
    const Point shift = testsupport::random_point(rng, d, -10, 10, 7);
    const Rational scale = rng.rational(1, 9, 4);
    auto moved = pts;
    for (auto& p : moved)
      for (std::size_t c = 0; c < d; ++c) p[c] = p[c] * scale + shift[c];
    CHECK(orientation(moved) == o);
  }
}

TEST_CASE("order type relation") {
  const auto rel2 = order_type_relation(2);
  CHECK(rel2.arity() == 3);
  CHECK(rel2.max_degree() == 2);  // the row of ones keeps the degree at d
  const OrderedPointSet tri(2, {{0, 0}, {1, 0}, {0, 1}});
  const std::vector<std::size_t> t{0, 1, 2};
  CHECK(rel2.contains(tri, t));

  const auto rel1 = order_type_relation(1);
  CHECK(rel1.polys().front() == Polynomial::variable(2, 1) - Polynomial::variable(2, 0));
  CHECK_THROWS_AS(order_type_relation(0), ArgumentError);

  CounterRng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 3; ++i) pts.push_back(testsupport::random_point(rng, 2, -5, 5, 2));
    const OrderedPointSet set(2, pts);
    CHECK(rel2.contains(set, t) == (orientation(pts) == 1));
  }
}

TEST_CASE("convex position points are homogeneous for orientation") {
  const OrderedPointSet hexagon(2, {{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}});
  REQUIRE(is_convex_position(hexagon));
  const auto r = max_homogeneous(hexagon, order_type_relation(2));
  CHECK(r.subset.size() == 6);
  CHECK(r.polarity == Polarity::AllIn);
}

TEST_CASE("general position of points") {
  CHECK(general_position_points(OrderedPointSet(2, {{0, 0}, {1, 0}, {0, 1}, {1, 2}})).general);
  const auto bad = general_position_points(OrderedPointSet(2, {{0, 0}, {5, 1}, {1, 1}, {2, 2}}));
  CHECK_FALSE(bad.general);
  CHECK(bad.witness == std::vector<std::size_t>{0, 2, 3});
  CHECK(general_position_points(OrderedPointSet(1, {{3}, {-1}, {Rational(1, 2)}})).general);
}

TEST_CASE("hyperplane intersection examples") {
  const std::vector<Hyperplane> axes{hp({1, 0}, 0), hp({0, 1}, 1)};
  CHECK(hyperplane_intersection(axes) == Point{0, 1});
  const std::vector<Hyperplane> pair{hp({-1, 1}, 1), hp({1, 1}, 3)};
  CHECK(hyperplane_intersection(pair) == Point{1, 2});
  const std::vector<Hyperplane> parallel{hp({0, 1}, 0), hp({0, 1}, 1)};
  CHECK_THROWS_AS(hyperplane_intersection(parallel), DegeneracyError);
  CHECK_THROWS_AS(hp({0, 0}, 1), ArgumentError);
}

TEST_CASE("general position of arrangements") {
  const Arrangement good(2, {hp({-1, 1}, 1), hp({1, 1}, 3), hp({0, 1}, 1)});
  CHECK(general_position_hyperplanes(good).general);
  const Arrangement concurrent(2, {hp({1, 0}, 0), hp({0, 1}, 0), hp({1, 1}, 0)});
  CHECK_FALSE(general_position_hyperplanes(concurrent).general);
  const Arrangement parallel(2, {hp({0, 1}, 0), hp({0, 1}, 1), hp({1, 0}, 0)});
  const auto r = general_position_hyperplanes(parallel);
  CHECK_FALSE(r.general);
  CHECK(r.witness == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(Arrangement(2, {hp({1, 0, 0}, 0)}), ArgumentError);
}

TEST_CASE("one-sided relation examples") {
  const auto rel = one_sided_relation(2);
  CHECK(rel.arity() == 2);
  CHECK(rel.point_dim() == 3);
  auto member = [&](const Hyperplane& a, const Hyperplane& b) {
    const OrderedPointSet reps(3, {a.representation(), b.representation()});
    const std::vector<std::size_t> t{0, 1};
    return rel.contains(reps, t);
  };
  CHECK(member(hp({-1, 1}, 1), hp({1, 1}, 3)));
  CHECK_FALSE(member(hp({-1, 1}, 1), hp({1, 1}, -3)));
  const std::vector<Hyperplane> below{hp({-1, 1}, 1), hp({1, 1}, -3)};
  CHECK_FALSE(one_sided_membership(below).member);
  CHECK_FALSE(one_sided_membership(below).degenerate);

  const std::vector<Hyperplane> boundary{hp({1, 1}, 2), hp({1, -1}, 2)};  // vertex (2, 0)
  CHECK_FALSE(member(boundary[0], boundary[1]));
  CHECK(one_sided_membership(boundary).degenerate);
  const std::vector<Hyperplane> singular{hp({0, 1}, 0), hp({0, 2}, 1)};
  CHECK(one_sided_membership(singular).degenerate);
  CHECK_FALSE(member(singular[0], singular[1]));
  CHECK_THROWS_AS(one_sided_relation(1), ArgumentError);
}

TEST_CASE("one-sided relation matches direct intersection") {
  CounterRng rng(77);
  for (std::size_t d : {2u, 3u}) {
    const auto rel = one_sided_relation(d);
    for (int trial = 0; trial < 10; ++trial) {
      const auto arr = testsupport::random_general_arrangement(rng, d, d + 3);
      const auto reps = arr.representation_points();
      for_each_combination(arr.size(), d, [&](const std::vector<std::size_t>& c) {
        std::vector<Hyperplane> sub;
        for (auto i : c) sub.push_back(arr.hyperplanes[i]);
        const bool direct = hyperplane_intersection(sub).back().sign() > 0;
        CHECK(rel.contains(reps, c) == direct);
        return true;
      });
    }
  }
}

TEST_CASE("is_one_sided") {
  const Arrangement up(2, {hp({-1, 1}, 1), hp({1, 1}, 3), hp({0, 1}, 1)});
  CHECK(is_one_sided(up));
  const Arrangement mixed(2, {hp({-1, 1}, 1), hp({1, 1}, -3), hp({1, 0}, 0)});
  CHECK_FALSE(is_one_sided(mixed));
  const Arrangement single(2, {hp({1, 0}, 1), hp({0, 1}, -4)});
  CHECK(is_one_sided(single));
  const Arrangement concurrent(2, {hp({1, 0}, 0), hp({0, 1}, 1), hp({1, 1}, 1)});
  CHECK_THROWS_AS(is_one_sided(concurrent), PreconditionError);
  const Arrangement touching(2, {hp({1, 1}, 2), hp({1, -1}, 2)});
  CHECK_THROWS_AS(is_one_sided(touching), PreconditionError);
}

TEST_CASE("one-sided arrangements are homogeneous for the relation") {
  CounterRng rng(5);
  std::size_t one_sided_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto arr = testsupport::random_general_arrangement(rng, 2, 5);
    bool touches = false;
    for_each_combination(arr.size(), 2, [&](const std::vector<std::size_t>& c) {
      const std::vector<Hyperplane> sub{arr.hyperplanes[c[0]], arr.hyperplanes[c[1]]};
      touches = touches || one_sided_membership(sub).degenerate;
      return !touches;
    });
    if (touches) continue;
    const auto reps = arr.representation_points();
    const auto r = max_homogeneous(reps, one_sided_relation(2));
    const bool full = r.subset == all_indices(arr.size());
    CHECK(is_one_sided(arr) == full);
    one_sided_seen += full ? 1 : 0;
  }
  // x2 < 0 everywhere is one-sided too; the homogeneous set then has polarity out.
  const Arrangement low(2, {hp({-1, 1}, -5), hp({1, 1}, -7), hp({0, 1}, -9)});
  CHECK(is_one_sided(low));
  const auto r = max_homogeneous(low.representation_points(), one_sided_relation(2));
  CHECK(r.subset.size() == 3);
  CHECK(r.polarity == Polarity::AllOut);
}

TEST_CASE("projection examples") {
  const Arrangement a(3, {hp({0, 0, 1}, 0), hp({1, 1, 1}, 1)});
  const auto p = project_onto_hyperplane(a, 0);
  CHECK(p.dropped_axis == 2);
  REQUIRE(p.chart.size() == 1);
  CHECK(p.chart.hyperplanes[0] == hp({1, 1}, 1));
  CHECK(p.members == std::vector<std::size_t>{1});

  const Arrangement b(3, {hp({1, 1, 1}, 3), hp({0, 0, 1}, 1)});
  const auto q = project_onto_hyperplane(b, 0);
  CHECK(q.dropped_axis == 2);
  CHECK(q.chart.hyperplanes[0] == hp({1, 1}, 2));
  // x3 = 3 - y1 - y2 on the pivot
  CHECK(q.last_coordinate.coeffs == std::vector<Rational>{-1, -1});
  CHECK(q.last_coordinate.constant == Rational(3));

  const Arrangement par(3, {hp({0, 0, 1}, 0), hp({0, 0, 2}, 5)});
  CHECK_THROWS_AS(project_onto_hyperplane(par, 0), DegeneracyError);
  CHECK_THROWS_AS(project_onto_hyperplane(Arrangement(2, {hp({1, 0}, 0)}), 0), ArgumentError);
}

TEST_CASE("projection preserves vertices and their last coordinate") {
  CounterRng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const auto arr = testsupport::random_general_arrangement(rng, 3, 6);
    const std::size_t pivot = static_cast<std::size_t>(rng.uniform(0, 5));
    const auto proj = project_onto_hyperplane(arr, pivot);
    for_each_combination(proj.chart.size(), 2, [&](const std::vector<std::size_t>& c) {
      const std::vector<Hyperplane> chart_pair{proj.chart.hyperplanes[c[0]], proj.chart.hyperplanes[c[1]]};
      const Point y = hyperplane_intersection(chart_pair);
      Rational x_last = proj.last_coordinate.constant;
      for (std::size_t i = 0; i < y.size(); ++i) x_last += proj.last_coordinate.coeffs[i] * y[i];
      const std::vector<Hyperplane> full{arr.hyperplanes[proj.members[c[0]]], arr.hyperplanes[proj.members[c[1]]],
                                         arr.hyperplanes[pivot]};
      const Point x = hyperplane_intersection(full);
      CHECK(x.back() == x_last);
      // The chart coordinates are the kept axes of the vertex.
      for (std::size_t j = 0, k = 0; j < 3; ++j)
        if (j != proj.dropped_axis) CHECK(x[j] == y[k++]);
      return true;
    });
  }
}

TEST_CASE("convex position") {
  CHECK(is_convex_position(OrderedPointSet(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
  CHECK_FALSE(is_convex_position(OrderedPointSet(2, {{0, 0}, {4, 0}, {0, 4}, {1, 1}})));
  CHECK_THROWS_AS(is_convex_position(OrderedPointSet(2, {{0, 0}, {1, 1}, {2, 2}})), PreconditionError);
  CHECK_THROWS_AS(is_convex_position(OrderedPointSet(1, {{0}, {1}})), ArgumentError);
}

TEST_CASE("five points in general position contain a convex quadrilateral") {
  CounterRng rng(23);
  int checked = 0;
  while (checked < 300) {
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(testsupport::random_point(rng, 2, -20, 20, 1));
    const OrderedPointSet set(2, pts);
    if (!general_position_points(set).general) continue;
    ++checked;
    const bool found = !for_each_combination(5, 4, [&](const std::vector<std::size_t>& c) {
      return !is_convex_position(set.select(c));
    });
    CHECK(found);
  }
}
