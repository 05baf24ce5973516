#include "semiramsey/constructions.hpp"

#include "semiramsey/random.hpp"
#include "semiramsey/subsets.hpp"

#include <algorithm>

namespace semiramsey {

ConstructionInstance::ConstructionInstance(OrderedPointSet pts, SemiAlgebraicRelation rel, Rational eps,
                                           std::map<std::string, std::string> prov)
    : points(std::move(pts)), relation(std::move(rel)), epsilon(std::move(eps)), provenance(std::move(prov)) {
  if (relation.point_dim() != points.dim())
    throw ArgumentError("relation dimension does not match point set dimension");
  if (epsilon.sign() <= 0) throw ArgumentError("construction epsilon must be positive");
}

BigInt tower(unsigned height, const BigInt& x, std::size_t max_bits) {
  if (height < 1) throw ArgumentError("tower height must be at least 1");
  if (x < 0) throw ArgumentError("tower argument must be non-negative");
  BigInt value = x;
  for (unsigned level = 2; level <= height; ++level) {
    if (value > BigInt(static_cast<unsigned long>(max_bits)))
      throw ResourceError("tower value exceeds the configured bit-length cap");
    BigInt next;
    mpz_ui_pow_ui(next.get_mpz_t(), 2, value.get_ui());
    value = std::move(next);
  }
  return value;
}

namespace {

Polynomial var(std::size_t num_vars, std::size_t index) { return Polynomial::variable(num_vars, index); }

std::size_t checked_point_count(unsigned exponent, const ResourceCaps& caps) {
  if (exponent >= 63 || (std::size_t{1} << exponent) > caps.max_points)
    throw ResourceError("construction would exceed the configured point cap");
  return std::size_t{1} << exponent;
}

}  // namespace

ConstructionInstance base_construction(unsigned n, const ResourceCaps& caps) {
  if (n < 1) throw ArgumentError("base construction requires n >= 1");
  const std::size_t count = checked_point_count(n, caps);
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) pts.push_back({Rational(static_cast<long>(i))});

  // x1 < x2, x2 < x3, x1 + x3 - 2 x2 + 1/2 >= 0. The 1/2 slack agrees with the
  // unrelaxed atom on integers and keeps the relation (1/10)-deep.
  std::vector<Polynomial> polys{
      var(3, 1) - var(3, 0),
      var(3, 2) - var(3, 1),
      var(3, 0) + var(3, 2) - var(3, 1) * Rational(2) + Polynomial::constant(3, Rational(1, 2)),
  };
  Formula f = Formula::all_of({Formula::leaf(0, Comparison::Gt), Formula::leaf(1, Comparison::Gt),
                               Formula::leaf(2, Comparison::Ge)});
  return ConstructionInstance(OrderedPointSet(1, std::move(pts)),
                              SemiAlgebraicRelation(3, 1, std::move(polys), std::move(f)), Rational(1, 10),
                              {{"kind", "base"}, {"n", std::to_string(n)}});
}

unsigned delta_index(std::uint64_t a, std::uint64_t b, unsigned bits) {
  if (bits == 0 || bits > 63) throw ArgumentError("delta_index bit-width must be in 1..63");
  const std::uint64_t limit = std::uint64_t{1} << bits;
  if (a < 1 || b < 1 || a > limit || b > limit) throw ArgumentError("delta_index arguments must lie in [1, 2^N]");
  if (a == b) throw ArgumentError("delta_index requires distinct arguments");
  const std::uint64_t diff = (a - 1) ^ (b - 1);
  return 64 - static_cast<unsigned>(__builtin_clzll(diff));
}

namespace {

unsigned top_bit(std::uint64_t a, std::uint64_t b) {
  return 64 - static_cast<unsigned>(__builtin_clzll((a - 1) ^ (b - 1)));
}

bool chain_ok(std::span<const std::uint64_t> chain) {
  unsigned largest = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) largest = std::max(largest, top_bit(chain[i], chain[i + 1]));
  return top_bit(chain.front(), chain.back()) == largest;
}

}  // namespace

DeltaPropertyReport check_delta_property_a(unsigned bits) {
  if (bits == 0 || bits > 16) throw ArgumentError("property A check supports 1..16 bits");
  const std::uint64_t n = std::uint64_t{1} << bits;
  DeltaPropertyReport report;
  for (std::uint64_t b = 2; b < n; ++b)
    for (std::uint64_t a = 1; a < b; ++a) {
      const unsigned ab = top_bit(a, b);
      for (std::uint64_t c = b + 1; c <= n; ++c) {
        ++report.checked;
        if (ab == top_bit(b, c)) {
          report.holds = false;
          report.witness = {a, b, c};
          return report;
        }
      }
    }
  return report;
}

DeltaPropertyReport check_delta_property_b(unsigned bits, std::size_t random_chains, std::uint64_t seed) {
  if (bits == 0 || bits > 62) throw ArgumentError("property B check supports 1..62 bits");
  const std::uint64_t n = std::uint64_t{1} << bits;
  DeltaPropertyReport report;
  auto check = [&](std::span<const std::uint64_t> chain) {
    ++report.checked;
    if (chain_ok(chain)) return true;
    report.holds = false;
    report.witness.assign(chain.begin(), chain.end());
    return false;
  };
  if (n <= 16) {
    for (std::size_t len = 2; len <= std::min<std::size_t>(5, n); ++len) {
      const bool ok = for_each_combination(n, len, [&](const std::vector<std::size_t>& c) {
        std::vector<std::uint64_t> chain(c.begin(), c.end());
        for (auto& v : chain) ++v;
        return check(chain);
      });
      if (!ok) return report;
    }
    return report;
  }
  CounterRng rng(seed, 0xb);
  for (std::size_t t = 0; t < random_chains; ++t) {
    const auto len = static_cast<std::size_t>(rng.uniform(3, 8));
    std::vector<std::uint64_t> chain;
    while (chain.size() < len) {
      chain.push_back(static_cast<std::uint64_t>(rng.uniform(1, static_cast<std::int64_t>(n))));
      std::sort(chain.begin(), chain.end());
      chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    }
    if (!check(chain)) return report;
  }
  return report;
}

Point slope(const Point& q1, const Point& q2) {
  if (q1.size() != q2.size() || q1.size() % 2 != 0)
    throw ArgumentError("slope requires two points of equal even dimension");
  Point out;
  out.reserve(q1.size() / 2);
  for (std::size_t i = 0; i < q1.size(); i += 2) {
    const Rational run = q2[i] - q1[i];
    if (run.is_zero()) throw DegeneracyError("slope with equal x-coordinates");
    out.push_back((q2[i + 1] - q1[i + 1]) / run);
  }
  return out;
}

bool verify_eps_increasing(const OrderedPointSet& points, const Rational& eps) {
  if (eps.sign() <= 0) throw ArgumentError("epsilon must be positive");
  const Rational gap = eps * Rational(2);
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    for (std::size_t c = 0; c < points.dim(); ++c)
      if (!(points[i + 1][c] - points[i][c] > gap)) return false;
  return true;
}

DeepnessReport verify_eps_deep_sampled(const ConstructionInstance& inst, std::size_t samples_per_tuple,
                                       std::uint64_t seed) {
  const auto& rel = inst.relation;
  const std::size_t k = rel.arity();
  const std::size_t width = rel.num_vars();
  const Rational& eps = inst.epsilon;
  constexpr std::size_t kMaxExhaustiveCorners = 12;
  constexpr std::int64_t kGrid = 1024;
  CounterRng rng(seed, 0xdeef);

  DeepnessReport report;
  auto probe = [&](const std::vector<std::size_t>& tuple, const std::vector<Rational>& base, bool expected,
                   std::vector<Rational> perturbed) {
    ++report.perturbations_checked;
    if (rel.contains(perturbed) == expected) return true;
    report.deep = false;
    report.witness = DeepnessWitness{tuple, std::move(perturbed), expected};
    (void)base;
    return false;
  };

  for_each_combination(inst.points.size(), k, [&](const std::vector<std::size_t>& tuple) {
    ++report.tuples_checked;
    const auto base = rel.concatenate(inst.points, tuple);
    const bool expected = rel.contains(base);
    std::vector<Rational> perturbed(width);
    auto corner = [&](std::uint64_t bits) {
      for (std::size_t c = 0; c < width; ++c) perturbed[c] = base[c] + ((bits >> c) & 1U ? eps : -eps);
      return probe(tuple, base, expected, perturbed);
    };
    if (width <= kMaxExhaustiveCorners) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << width); ++bits)
        if (!corner(bits)) return false;
    } else {
      for (std::size_t s = 0; s < samples_per_tuple; ++s)
        if (!corner(rng.next())) return false;
    }
    for (std::size_t s = 0; s < samples_per_tuple; ++s) {
      for (std::size_t c = 0; c < width; ++c)
        perturbed[c] = base[c] + eps * Rational(rng.uniform(-kGrid, kGrid), kGrid);
      if (!probe(tuple, base, expected, perturbed)) return false;
    }
    return true;
  });
  return report;
}

std::optional<DigitClosenessWitness> check_digit_closeness(unsigned n, unsigned base_b) {
  if (n < 1 || n > 5) throw ArgumentError("digit closeness check supports 1 <= n <= 5");
  const unsigned digits = 1U << n;
  const std::size_t count = std::size_t{1} << digits;
  const BigInt b(base_b);
  std::vector<BigInt> pts(count);
  for (std::size_t m = 0; m < count; ++m) {
    BigInt v = 1;
    BigInt power = 1;
    for (unsigned i = 0; i < digits; ++i) {
      if ((m >> i) & 1U) v += power;
      power *= b;
    }
    pts[m] = v;
  }
  std::vector<BigInt> bpow(10 * digits + 2);
  bpow[0] = 1;
  for (std::size_t i = 1; i < bpow.size(); ++i) bpow[i] = bpow[i - 1] * b;

  for (std::size_t hi = 0; hi < count; ++hi)
    for (std::size_t lo = 0; lo < hi; ++lo) {
      const unsigned top = 63 - static_cast<unsigned>(__builtin_clzll(hi ^ lo));
      BigInt d = pts[hi] - pts[lo];
      BigInt d10;
      mpz_pow_ui(d10.get_mpz_t(), d.get_mpz_t(), 10);
      // b^{10i-1} < d^10  <=>  b^{10i} < b * d^10
      const bool lower_ok = bpow[10 * top] < b * d10;
      const bool upper_ok = d10 < bpow[10 * top + 1];
      if (!lower_ok || !upper_ok) return DigitClosenessWitness{pts[hi], pts[lo], top};
    }
  return std::nullopt;
}

ConstructionInstance one_dim_k4_construction(unsigned n, unsigned base_b, const ResourceCaps& caps) {
  if (n < 1) throw ArgumentError("one-dimensional construction requires n >= 1");
  if (base_b < 10) throw ArgumentError("one-dimensional construction requires base >= 10");
  if (n > 5) throw ResourceError("one-dimensional construction supports n <= 5");
  const unsigned digits = 1U << n;
  const std::size_t count = checked_point_count(digits, caps);
  const BigInt b(base_b);
  if (mpz_sizeinbase(b.get_mpz_t(), 2) * digits > caps.max_bits)
    throw ResourceError("one-dimensional construction exceeds the coordinate bit-length cap");
  if (auto w = check_digit_closeness(n, base_b))
    throw PreconditionError("base " + std::to_string(base_b) + " too small: pair (" + w->larger.get_str() + ", " +
                            w->smaller.get_str() + ") violates digit closeness at digit " +
                            std::to_string(w->top_digit));

  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    BigInt v = 1;
    BigInt power = 1;
    for (unsigned i = 0; i < digits; ++i) {
      if ((m >> i) & 1U) v += power;
      power *= b;
    }
    pts.push_back({Rational(v)});
  }

  const std::size_t nv = 4;
  const Polynomial d1 = var(nv, 1) - var(nv, 0);
  const Polynomial d2 = var(nv, 2) - var(nv, 1);
  const Polynomial d3 = var(nv, 3) - var(nv, 2);
  std::vector<Polynomial> polys{
      d1,       // 0: x1 < x2
      d2,       // 1: x2 < x3
      d3,       // 2: x3 < x4
      d1 - d2,  // 3: sign of gap1 - gap2
      d3 - d2,  // 4: sign of gap3 - gap2
      // 5: b (d1 d3)^2 - d2^4, the base atom carried through delta = log_b
      pow(d1 * d3, 2) * Rational(b) - pow(d2, 4),
  };
  using F = Formula;
  const F gap1_gt_gap2 = F::leaf(3, Comparison::Gt);
  const F gap1_lt_gap2 = F::negate(F::leaf(3, Comparison::Ge));
  const F gap3_gt_gap2 = F::leaf(4, Comparison::Gt);
  const F gap3_lt_gap2 = F::negate(F::leaf(4, Comparison::Ge));
  const F convex = F::leaf(5, Comparison::Ge);
  F formula = F::all_of({
      F::leaf(0, Comparison::Gt),
      F::leaf(1, Comparison::Gt),
      F::leaf(2, Comparison::Gt),
      F::any_of({
          F::all_of({gap1_gt_gap2, gap3_gt_gap2}),
          F::all_of({gap1_lt_gap2, gap3_gt_gap2, convex}),
          F::all_of({gap1_gt_gap2, gap3_lt_gap2, convex}),
      }),
  });
  return ConstructionInstance(OrderedPointSet(1, std::move(pts)),
                              SemiAlgebraicRelation(4, 1, std::move(polys), std::move(formula)), Rational(1, 10),
                              {{"kind", "onedim-k4"}, {"n", std::to_string(n)}, {"b", std::to_string(base_b)}});
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool FranklWilsonGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& A = vertices.at(a);
  const auto& B = vertices.at(b);
  std::size_t common = 0;
  for (auto x : A)
    if (std::find(B.begin(), B.end(), x) != B.end()) ++common;
  return (common + 1) % p == 0;
}

FranklWilsonGraph frankl_wilson_graph(unsigned m, unsigned p, const ResourceCaps& caps) {
  if (!is_prime(p)) throw ArgumentError("Frankl-Wilson graph requires a prime p");
  const unsigned r = p * p - 1;
  if (r > m) throw ArgumentError("Frankl-Wilson graph requires p^2 - 1 <= m");
  if (r > 20) throw ResourceError("Frankl-Wilson encoding supports r = p^2 - 1 <= 20");
  if (binomial(m, r) > caps.max_points) throw ResourceError("Frankl-Wilson graph exceeds the point cap");

  FranklWilsonGraph g;
  g.p = p;
  std::vector<Point> pts;
  for_each_combination(m, r, [&](const std::vector<std::size_t>& c) {
    std::vector<unsigned> v;
    Point pt;
    for (auto x : c) {
      v.push_back(static_cast<unsigned>(x + 1));
      pt.push_back(Rational(static_cast<long>(x + 1)));
    }
    g.vertices.push_back(std::move(v));
    pts.push_back(std::move(pt));
    return true;
  });
  g.points = OrderedPointSet(r, std::move(pts));

  // Poly i vanishes iff x_i equals some y_j.
  const std::size_t nv = 2 * r;
  std::vector<Polynomial> polys;
  for (unsigned i = 0; i < r; ++i) {
    Polynomial prod = Polynomial::constant(nv, Rational(1));
    for (unsigned j = 0; j < r; ++j) prod = prod * (var(nv, i) - var(nv, r + j));
    polys.push_back(std::move(prod));
  }
  std::vector<Formula> options;
  for (std::uint32_t mask = 0; mask < (1U << r); ++mask) {
    if ((static_cast<unsigned>(__builtin_popcount(mask)) + 1) % p != 0) continue;
    std::vector<Formula> conj;
    for (unsigned i = 0; i < r; ++i) {
      Formula eq = Formula::leaf(i, Comparison::Eq);
      conj.push_back((mask >> i) & 1U ? eq : Formula::negate(eq));
    }
    options.push_back(Formula::all_of(std::move(conj)));
  }
  g.relation = SemiAlgebraicRelation(2, r, std::move(polys), Formula::any_of(std::move(options)));
  return g;
}

}  // namespace semiramsey
