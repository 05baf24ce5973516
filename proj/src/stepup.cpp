#include "semiramsey/constructions.hpp"

#include <algorithm>

namespace semiramsey {

namespace {

Rational max_abs_coordinate(const OrderedPointSet& pts) {
  Rational best(0);
  for (const auto& p : pts.points())
    for (const auto& c : p) best = std::max(best, c.abs());
  return best;
}

// Largest 1/2^j such that every slope between the max-norm balls of this
// radius around the origin and around (1, a_1, ..., 1, a_d) stays within
// eps/2 of a: |slope - a_i| <= 2r(1 + |a_i|) / (1 - 2r).
Rational cross_ball_radius(const Point& a, const Rational& eps) {
  const Rational half_eps = eps / Rational(2);
  Rational r(1, 2);
  for (int j = 1; j < 4096; ++j, r /= Rational(2)) {
    const Rational two_r = r * Rational(2);
    bool ok = two_r < Rational(1);
    for (const auto& ai : a)
      if (ok && !(two_r * (Rational(1) + ai.abs()) <= half_eps * (Rational(1) - two_r))) ok = false;
    if (ok) return r;
  }
  throw ResourceError("no admissible step-up ball radius found");
}

}  // namespace

StepUpPoints step_up_points(const ConstructionInstance& base, const ResourceCaps& caps) {
  const auto& P = base.points;
  const std::size_t n = P.size();
  const std::size_t d = P.dim();
  const Rational& eps = base.epsilon;
  if (n < 1) throw ArgumentError("step-up requires a non-empty base point set");
  if (n >= 63 || (std::size_t{1} << n) > caps.max_points)
    throw ResourceError("step-up output would exceed the configured point cap");
  if (!verify_eps_increasing(P, eps)) throw PreconditionError("step-up base point set is not eps-increasing");
  const Rational half_eps = eps / Rational(2);
  for (const auto& p : P.points())
    for (const auto& c : p)
      if (!(c > half_eps))
        throw PreconditionError("step-up base coordinates must exceed eps/2 (translate the base first)");

  auto center = [&](std::size_t m) {
    Point c(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      c[2 * i] = Rational(1);
      c[2 * i + 1] = P[m][i];
    }
    return c;
  };

  StepUpPoints out;
  std::vector<Point> level{Point(2 * d, Rational(0)), center(0)};
  for (std::size_t m = 1; m < n; ++m) {
    const Rational radius = cross_ball_radius(P[m], eps);
    out.radii.push_back(radius);
    Point lo = level.front();
    Point hi = level.front();
    for (const auto& q : level)
      for (std::size_t c = 0; c < q.size(); ++c) {
        lo[c] = std::min(lo[c], q[c]);
        hi[c] = std::max(hi[c], q[c]);
      }
    Rational half_width(0);
    Point mid(lo.size());
    for (std::size_t c = 0; c < lo.size(); ++c) {
      half_width = std::max(half_width, (hi[c] - lo[c]) / Rational(2));
      mid[c] = (hi[c] + lo[c]) / Rational(2);
    }
    const Rational scale = radius / half_width;
    const Point far = center(m);
    std::vector<Point> next;
    next.reserve(level.size() * 2);
    for (int copy = 0; copy < 2; ++copy)
      for (const auto& q : level) {
        Point moved(q.size());
        for (std::size_t c = 0; c < q.size(); ++c) {
          moved[c] = (q[c] - mid[c]) * scale;
          if (copy == 1) moved[c] += far[c];
          if (moved[c].bit_length() > caps.max_bits)
            throw ResourceError("step-up coordinate exceeds the configured bit-length cap");
        }
        next.push_back(std::move(moved));
      }
    level = std::move(next);
  }
  out.points = OrderedPointSet(2 * d, std::move(level));

  // epsilon_1: keep consecutive points separated and perturbed slopes within eps of their target.
  Rational gap;
  bool have_gap = false;
  for (std::size_t i = 0; i + 1 < out.points.size(); ++i)
    for (std::size_t c = 0; c < 2 * d; ++c) {
      const Rational g = out.points[i + 1][c] - out.points[i][c];
      if (!have_gap || g < gap) {
        gap = g;
        have_gap = true;
      }
    }
  if (have_gap && gap.sign() <= 0) throw PreconditionError("step-up output is not increasing");
  const Rational slope_bound = max_abs_coordinate(P) + half_eps;
  Rational e(1, 2);
  for (int j = 1;; ++j, e /= Rational(2)) {
    if (j > 4096) throw ResourceError("no admissible step-up epsilon found");
    const Rational two_e = e * Rational(2);
    if (!have_gap) break;
    if (two_e < gap && two_e * (Rational(1) + slope_bound) <= half_eps * (gap - two_e)) break;
  }
  out.epsilon = e;
  return out;
}

SemiAlgebraicRelation step_up_relation(const SemiAlgebraicRelation& base) {
  const std::size_t k = base.arity();
  const std::size_t d = base.point_dim();
  if (k < 3) throw ArgumentError("algebraic step-up requires base arity >= 3");
  const std::size_t dim = 2 * d;
  const std::size_t arity = k + 1;
  const std::size_t nv = arity * dim;
  auto v = [&](std::size_t slot, std::size_t coord) { return Polynomial::variable(nv, slot * dim + coord); };
  // Slope s joins tuple slots s and s+1; coordinate i uses (x_i, y_i) = (2i, 2i+1).
  auto rise = [&](std::size_t s, std::size_t i) { return v(s + 1, 2 * i + 1) - v(s, 2 * i + 1); };
  auto run = [&](std::size_t s, std::size_t i) { return v(s + 1, 2 * i) - v(s, 2 * i); };

  std::vector<Polynomial> polys;
  std::vector<Formula> order;
  for (std::size_t s = 0; s + 1 < arity; ++s)
    for (std::size_t c = 0; c < dim; ++c) {
      order.push_back(Formula::leaf(polys.size(), Comparison::Gt));
      polys.push_back(v(s + 1, c) - v(s, c));
    }

  // cmp[s][i] has the sign of slope_s,i - slope_{s+1},i after multiplying by
  // the squared runs: rise_s run_s run_{s+1}^2 - rise_{s+1} run_{s+1} run_s^2.
  std::vector<std::vector<std::size_t>> cmp(k - 1);
  for (std::size_t s = 0; s + 1 < k; ++s)
    for (std::size_t i = 0; i < d; ++i) {
      cmp[s].push_back(polys.size());
      polys.push_back(rise(s, i) * run(s, i) * pow(run(s + 1, i), 2) -
                      rise(s + 1, i) * run(s + 1, i) * pow(run(s, i), 2));
    }
  auto slope_greater = [&](std::size_t s) {  // slope_s > slope_{s+1} coordinatewise
    std::vector<Formula> f;
    for (auto idx : cmp[s]) f.push_back(Formula::leaf(idx, Comparison::Gt));
    return f;
  };
  auto slope_less = [&](std::size_t s) {  // slope_s < slope_{s+1} coordinatewise
    std::vector<Formula> f;
    for (auto idx : cmp[s]) f.push_back(Formula::negate(Formula::leaf(idx, Comparison::Ge)));
    return f;
  };

  // Base polynomial with base slot t replaced by slope slot_of[t], denominators
  // cleared with even powers of the runs so signs are preserved.
  auto substitute = [&](const Polynomial& f, const std::vector<std::size_t>& slot_of) {
    std::vector<unsigned> clear(k * d);
    for (std::size_t var = 0; var < k * d; ++var) {
      const unsigned deg = f.degree_in(var);
      clear[var] = deg + (deg % 2);
    }
    Polynomial out(nv);
    for (const auto& [e, c] : f.terms()) {
      Polynomial term = Polynomial::constant(nv, c);
      for (std::size_t t = 0; t < k; ++t)
        for (std::size_t i = 0; i < d; ++i) {
          const std::size_t var = t * d + i;
          if (clear[var] == 0) continue;
          term = term * pow(rise(slot_of[t], i), e[var]) * pow(run(slot_of[t], i), clear[var] - e[var]);
        }
      out += term;
    }
    return out;
  };

  std::vector<std::size_t> forward(k);
  std::vector<std::size_t> backward(k);
  for (std::size_t t = 0; t < k; ++t) {
    forward[t] = t;
    backward[t] = k - 1 - t;
  }
  const std::size_t forward_offset = polys.size();
  for (const auto& f : base.polys()) polys.push_back(substitute(f, forward));
  const std::size_t backward_offset = polys.size();
  for (const auto& f : base.polys()) polys.push_back(substitute(f, backward));

  // C1: slope_1 > slope_2 and slope_3 > slope_2.
  std::vector<Formula> c1 = slope_greater(0);
  for (auto& f : slope_less(1)) c1.push_back(std::move(f));
  // C2: increasing slopes and the base relation on them.
  std::vector<Formula> c2;
  for (std::size_t s = 0; s + 1 < k; ++s)
    for (auto& f : slope_less(s)) c2.push_back(std::move(f));
  c2.push_back(base.formula().shifted(forward_offset));
  // C3: decreasing slopes and the base relation on them in reverse.
  std::vector<Formula> c3;
  for (std::size_t s = 0; s + 1 < k; ++s)
    for (auto& f : slope_greater(s)) c3.push_back(std::move(f));
  c3.push_back(base.formula().shifted(backward_offset));

  order.push_back(Formula::any_of(
      {Formula::all_of(std::move(c1)), Formula::all_of(std::move(c2)), Formula::all_of(std::move(c3))}));
  return SemiAlgebraicRelation(arity, dim, std::move(polys), Formula::all_of(std::move(order)));
}

ConstructionInstance step_up(const ConstructionInstance& base, const ResourceCaps& caps) {
  auto pts = step_up_points(base, caps);
  auto prov = base.provenance;
  std::map<std::string, std::string> out_prov{{"kind", "stepup"}};
  for (const auto& [key, value] : prov) out_prov["base." + key] = value;
  out_prov["base.epsilon"] = base.epsilon.to_string();
  out_prov["base.points"] = std::to_string(base.points.size());
  return ConstructionInstance(std::move(pts.points), step_up_relation(base.relation), pts.epsilon,
                              std::move(out_prov));
}

bool step_up_rule_membership(const ConstructionInstance& base, std::span<const std::size_t> tuple) {
  const std::size_t n = base.points.size();
  const std::size_t k = base.relation.arity();
  if (tuple.size() != k + 1) throw ArgumentError("step-up tuple must have base arity + 1 entries");
  std::vector<unsigned> delta(k);
  for (std::size_t l = 0; l < k; ++l) {
    if (tuple[l + 1] <= tuple[l]) throw ArgumentError("step-up tuple must be strictly increasing");
    delta[l] = delta_index(tuple[l] + 1, tuple[l + 1] + 1, static_cast<unsigned>(n));
  }
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t l = 0; l + 1 < k; ++l) {
    increasing = increasing && delta[l] < delta[l + 1];
    decreasing = decreasing && delta[l] > delta[l + 1];
  }
  if (increasing || decreasing) {
    std::vector<std::size_t> base_tuple(k);
    for (std::size_t l = 0; l < k; ++l) base_tuple[l] = delta[l] - 1;
    if (decreasing) std::reverse(base_tuple.begin(), base_tuple.end());
    return base.relation.contains(base.points, base_tuple);
  }
  return delta[0] > delta[1] && delta[1] < delta[2];
}

}  // namespace semiramsey
