#pragma once

#include "semiramsey/error.hpp"
#include "semiramsey/relation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semiramsey {

/// A point set with its relation and the epsilon for which the construction
/// claims to be epsilon-increasing and epsilon-deep.
struct ConstructionInstance {
  OrderedPointSet points;
  SemiAlgebraicRelation relation;
  Rational epsilon;
  std::map<std::string, std::string> provenance;

  ConstructionInstance() = default;
  ConstructionInstance(OrderedPointSet pts, SemiAlgebraicRelation rel, Rational eps,
                       std::map<std::string, std::string> prov);

  friend bool operator==(const ConstructionInstance&, const ConstructionInstance&) = default;
};

/// twr_1(x) = x, twr_{i+1}(x) = 2^{twr_i(x)}. Throws ResourceError past max_bits.
BigInt tower(unsigned height, const BigInt& x, std::size_t max_bits = ResourceCaps{}.max_bits);

/// Points 1..2^n on the line with the relaxed order-and-convexity relation.
ConstructionInstance base_construction(unsigned n, const ResourceCaps& caps = {});

/// One plus the position of the most significant binary digit in which
/// a-1 and b-1 differ, for a, b in [1, 2^bits].
unsigned delta_index(std::uint64_t a, std::uint64_t b, unsigned bits);

struct DeltaPropertyReport {
  bool holds = true;
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> witness;  // 1-based values of the violating triple or chain
};

/// delta(a,b) != delta(b,c) for every a < b < c in [1, 2^bits].
DeltaPropertyReport check_delta_property_a(unsigned bits);

/// delta(a_1, a_n) equals the largest consecutive delta, over every increasing
/// chain of length <= 5 when 2^bits <= 16 and over `random_chains` seeded
/// chains of length 3..8 otherwise.
DeltaPropertyReport check_delta_property_b(unsigned bits, std::size_t random_chains, std::uint64_t seed);

/// Componentwise slope of two points of R^{2d} laid out (x_1, y_1, ..., x_d, y_d).
Point slope(const Point& q1, const Point& q2);

/// Consecutive points differ by more than 2*eps in every coordinate.
bool verify_eps_increasing(const OrderedPointSet& points, const Rational& eps);

struct DeepnessWitness {
  std::vector<std::size_t> tuple;        // 0-based indices of the unperturbed tuple
  std::vector<Rational> perturbed;       // concatenated perturbed coordinates
  bool original_membership = false;
};

struct DeepnessReport {
  bool deep = true;
  std::size_t tuples_checked = 0;
  std::size_t perturbations_checked = 0;
  std::optional<DeepnessWitness> witness;
};

/// Sampled necessary-condition check of epsilon-deepness with max-norm balls:
/// corner perturbations plus `samples_per_tuple` pseudorandom ones for every tuple.
DeepnessReport verify_eps_deep_sampled(const ConstructionInstance& inst, std::size_t samples_per_tuple,
                                       std::uint64_t seed);

struct StepUpPoints {
  OrderedPointSet points;
  Rational epsilon;                 // epsilon_1 of the output
  std::vector<Rational> radii;      // ball radius used at each recursion level 2..N
};

StepUpPoints step_up_points(const ConstructionInstance& base, const ResourceCaps& caps = {});
SemiAlgebraicRelation step_up_relation(const SemiAlgebraicRelation& base);
ConstructionInstance step_up(const ConstructionInstance& base, const ResourceCaps& caps = {});

/// Membership of a step-up tuple by the delta-sequence rule: monotone sequences
/// defer to the base relation, a local minimum at the second position is in,
/// everything else is out. `tuple` holds 0-based indices into the 2^N step-up points.
bool step_up_rule_membership(const ConstructionInstance& base, std::span<const std::size_t> tuple);

struct DigitClosenessWitness {
  BigInt larger;
  BigInt smaller;
  unsigned top_digit = 0;
};

/// Checks b^{10i-1} < (p-q)^{10} < b^{10i+1} for every pair p > q of the
/// one-dimensional construction; returns the first violating pair.
std::optional<DigitClosenessWitness> check_digit_closeness(unsigned n, unsigned base_b);

ConstructionInstance one_dim_k4_construction(unsigned n, unsigned base_b = 10, const ResourceCaps& caps = {});

struct FranklWilsonGraph {
  std::vector<std::vector<unsigned>> vertices;  // increasing r-subsets of {1..m}
  OrderedPointSet points;                       // the same subsets as points in R^r
  SemiAlgebraicRelation relation;               // arity 2
  unsigned p = 0;

  /// |A cap B| = -1 (mod p), computed on the sets directly.
  bool adjacent(std::size_t a, std::size_t b) const;
};

FranklWilsonGraph frankl_wilson_graph(unsigned m, unsigned p, const ResourceCaps& caps = {});

bool is_prime(std::uint64_t n);

}  // namespace semiramsey
