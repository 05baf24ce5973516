#pragma once

#include "semiramsey/geometry.hpp"
#include "semiramsey/polynomial.hpp"
#include "semiramsey/random.hpp"
#include "semiramsey/relation.hpp"
#include "semiramsey/subsets.hpp"

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace testsupport {

using semiramsey::CounterRng;
using semiramsey::Exponents;
using semiramsey::OrderedPointSet;
using semiramsey::Point;
using semiramsey::Polynomial;
using semiramsey::Rational;
using semiramsey::SemiAlgebraicRelation;

// Dense univariate helpers that touch nothing but evaluation.
using Coeffs = std::vector<Rational>;  // lowest degree first

inline Rational horner(const Coeffs& c, const Rational& x) {
  Rational v;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

inline Coeffs differentiate(const Coeffs& c) {
  Coeffs d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * Rational(static_cast<long>(k)));
  return d;
}

// Upper bound for |f| on [-R, R].
inline Rational magnitude_bound(const Coeffs& f, const Rational& radius) {
  Rational m, power(1);
  for (const auto& c : f) {
    m += c.abs() * power;
    power = power * radius;
  }
  return m;
}

class BisectionCounter {
 public:
  explicit BisectionCounter(Coeffs g, int max_depth = 80)
      : g_(std::move(g)), d1_(differentiate(g_)), d2_(differentiate(d1_)), max_depth_(max_depth) {}

  // Distinct roots in the open interval (a, b); nullopt when the depth cap is hit,
  // which happens near multiple roots.
  std::optional<std::size_t> count(const Rational& a, const Rational& b) const { return rec(a, b, 0); }

 private:
  std::optional<std::size_t> rec(const Rational& l, const Rational& r, int depth) const {
    if (depth > max_depth_) return std::nullopt;
    const Rational c = (l + r) / Rational(2);
    const Rational h = (r - l) / Rational(2);
    const Rational radius = std::max(l.abs(), r.abs());
    // |g(c)| beats the largest possible drift: no root on [l, r].
    if (horner(g_, c).abs() > magnitude_bound(d1_, radius) * h) return 0;
    // g' cannot vanish on [l, r]: g is strictly monotone there.
    if (horner(d1_, c).abs() > magnitude_bound(d2_, radius) * h)
      return horner(g_, l).sign() * horner(g_, r).sign() < 0 ? 1 : 0;
    auto left = rec(l, c, depth + 1);
    if (!left) return std::nullopt;
    auto right = rec(c, r, depth + 1);
    if (!right) return std::nullopt;
    return *left + *right + (horner(g_, c).is_zero() ? 1 : 0);
  }

  Coeffs g_, d1_, d2_;
  int max_depth_;
};

inline Polynomial to_polynomial(const Coeffs& c) { return Polynomial::univariate(c); }

inline Coeffs random_coeffs(CounterRng& rng, std::size_t degree) {
  Coeffs c(degree + 1);
  for (auto& x : c) x = rng.rational(-5, 5, static_cast<std::int64_t>(rng.uniform(1, 7)));
  if (c.back().is_zero()) c.back() = Rational(1);
  return c;
}

// Every monomial of total degree <= degree gets a small integer coefficient with probability 1/2.
inline Polynomial random_polynomial(CounterRng& rng, std::size_t vars, unsigned degree) {
  Polynomial p(vars);
  Exponents e(vars, 0);
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t at, unsigned left) {
    if (at == vars) {
      if (rng.uniform(0, 1) == 1) p.add_term(e, Rational(rng.uniform(-4, 4)));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[at] = k;
      walk(at + 1, left - k);
    }
    e[at] = 0;
  };
  walk(0, degree);
  if (p.is_zero()) p.add_term(Exponents(vars, 0), Rational(1));
  return p;
}

inline Point random_point(CounterRng& rng, std::size_t dim, std::int64_t lo = -4, std::int64_t hi = 4,
                          std::int64_t den = 8) {
  Point p(dim);
  for (auto& c : p) c = rng.rational(lo, hi, den);
  return p;
}

// Largest homogeneous subset size by scanning subsets from the top size down.
// Independent of the branch-and-bound solver: no pruning, no caching shared with it.
inline std::size_t brute_hom(const OrderedPointSet& pts, const SemiAlgebraicRelation& rel) {
  const std::size_t n = pts.size();
  const std::size_t k = rel.arity();
  std::set<std::vector<std::size_t>> members;
  semiramsey::for_each_combination(n, k, [&](const std::vector<std::size_t>& c) {
    if (rel.contains(pts, c)) members.insert(c);
    return true;
  });
  if (n < k) return n;
  for (std::size_t s = n; s >= k; --s) {
    bool found = false;
    semiramsey::for_each_combination(n, s, [&](const std::vector<std::size_t>& sub) {
      int polarity = -1;
      const bool homogeneous = semiramsey::for_each_combination(s, k, [&](const std::vector<std::size_t>& pos) {
        std::vector<std::size_t> t;
        for (auto i : pos) t.push_back(sub[i]);
        const int m = members.count(t) ? 1 : 0;
        if (polarity < 0) polarity = m;
        return m == polarity;
      });
      found = homogeneous;
      return !found;
    });
    if (found) return s;
  }
  return k - 1;
}

// Rejection-samples arrangements until every d-subset meets in a distinct vertex.
inline semiramsey::Arrangement random_general_arrangement(CounterRng& rng, std::size_t d, std::size_t count) {
  using semiramsey::Hyperplane;
  while (true) {
    std::vector<Hyperplane> hs;
    while (hs.size() < count) {
      std::vector<Rational> a(d);
      for (auto& c : a) c = rng.rational(-6, 6, static_cast<std::int64_t>(rng.uniform(1, 3)));
      if (std::all_of(a.begin(), a.end(), [](const Rational& c) { return c.is_zero(); })) continue;
      hs.emplace_back(std::move(a), rng.rational(-6, 6, 2));
    }
    semiramsey::Arrangement arr(d, std::move(hs));
    if (semiramsey::general_position_hyperplanes(arr).general) return arr;
  }
}

}  // namespace testsupport
