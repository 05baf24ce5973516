#pragma once

#include "semiramsey/relation.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace semiramsey {

enum class Polarity : std::uint8_t { AllIn, AllOut };

const char* to_string(Polarity p);

/// Per-arity record of one Erdos-Rado cascade.
struct GreedyLevel {
  std::size_t arity = 0;
  std::size_t pool_size = 0;
  std::size_t sequence_length = 0;       // M + 1 chosen points
  std::vector<std::size_t> class_counts;  // classes formed at each step
  std::size_t milnor_thom_checks = 0;     // steps where the bound hypotheses held
};

struct SolverStats {
  std::uint64_t nodes = 0;
  std::vector<GreedyLevel> levels;
  std::size_t recursion_depth = 0;
};

struct HomogeneousResult {
  std::vector<std::size_t> subset;  // 0-based, increasing
  Polarity polarity = Polarity::AllIn;
  bool certified = false;  // every induced k-tuple re-checked against the relation
  bool maximal = false;    // search proved no larger homogeneous subset exists
  SolverStats stats;
};

/// Membership cache over k-subsets of a point set. Small instances are
/// precomputed into a bitset; larger ones are filled lazily.
class MembershipOracle {
 public:
  MembershipOracle(const OrderedPointSet& points, const SemiAlgebraicRelation& relation);

  std::size_t size() const { return points_.size(); }
  std::size_t arity() const { return relation_.arity(); }
  /// `sorted` must be strictly increasing 0-based indices.
  bool operator()(std::span<const std::size_t> sorted) const;
  std::uint64_t evaluations() const { return evaluations_; }

 private:
  std::uint64_t rank(std::span<const std::size_t> sorted) const;
  const OrderedPointSet& points_;
  const SemiAlgebraicRelation& relation_;
  std::vector<std::vector<std::uint64_t>> choose_;  // choose_[n][k]
  bool dense_ = false;
  std::vector<std::uint8_t> dense_bits_;
  mutable std::unordered_map<std::uint64_t, bool> lazy_;
  mutable std::uint64_t evaluations_ = 0;
};

/// Re-evaluates the relation on every k-subset of `subset` (no caching) and
/// checks it equals `polarity`.
bool certify_homogeneous(const OrderedPointSet& points, const SemiAlgebraicRelation& relation,
                         std::span<const std::size_t> subset, Polarity polarity);

/// Maximum homogeneous subset by branch and bound over both polarities.
/// When `node_budget` runs out the best subset found is returned with maximal == false.
HomogeneousResult max_homogeneous(const OrderedPointSet& points, const SemiAlgebraicRelation& relation,
                                  std::uint64_t node_budget = 50'000'000);

struct GreedyOptions {
  std::uint64_t pair_search_budget = 5'000'000;
  /// Re-evaluate memberships after every class split to confirm the kept class is homogeneous.
  bool check_invariants = true;
};

/// Erdos-Rado style cascade: builds q_1, q_2, ... keeping the largest class of
/// candidates with identical atom truth values, then recurses on the induced
/// (k-1)-ary relation obtained by fixing the last chosen point.
/// Throws std::logic_error if an internal invariant check fails.
HomogeneousResult erdos_rado_greedy(const OrderedPointSet& points, const SemiAlgebraicRelation& relation,
                                    const GreedyOptions& options = {});

}  // namespace semiramsey
