#include "semiramsey/homogeneous.hpp"

#include "semiramsey/error.hpp"
#include "semiramsey/subsets.hpp"

#include <algorithm>

namespace semiramsey {

const char* to_string(Polarity p) { return p == Polarity::AllIn ? "in" : "out"; }

namespace {
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;
}

MembershipOracle::MembershipOracle(const OrderedPointSet& points, const SemiAlgebraicRelation& relation)
    : points_(points), relation_(relation) {
  const std::size_t n = points.size();
  const std::size_t k = relation.arity();
  if (points.dim() != relation.point_dim()) throw ArgumentError("point set dimension does not match relation");
  choose_.assign(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= k; ++j) choose_[i][j] = binomial(i, j);
  const std::uint64_t total = choose_[n][k];
  if (total == UINT64_MAX) throw ResourceError("too many tuples to index");
  if (total <= kDenseLimit) {
    dense_ = true;
    dense_bits_.assign(total, 0);
    for_each_combination(n, k, [&](const std::vector<std::size_t>& c) {
      dense_bits_[rank(c)] = relation_.contains(points_, c) ? 1 : 0;
      ++evaluations_;
      return true;
    });
  }
}

std::uint64_t MembershipOracle::rank(std::span<const std::size_t> sorted) const {
  // Combinatorial number system.
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += choose_[sorted[i]][i + 1];
  return r;
}

bool MembershipOracle::operator()(std::span<const std::size_t> sorted) const {
  const auto r = rank(sorted);
  if (dense_) return dense_bits_[r] != 0;
  auto it = lazy_.find(r);
  if (it != lazy_.end()) return it->second;
  ++evaluations_;
  const bool v = relation_.contains(points_, sorted);
  lazy_.emplace(r, v);
  return v;
}

bool certify_homogeneous(const OrderedPointSet& points, const SemiAlgebraicRelation& relation,
                         std::span<const std::size_t> subset, Polarity polarity) {
  const bool want = polarity == Polarity::AllIn;
  const std::size_t k = relation.arity();
  for (std::size_t i = 1; i < subset.size(); ++i)
    if (subset[i] <= subset[i - 1]) return false;
  std::vector<std::size_t> tuple(k);
  return for_each_combination(subset.size(), k, [&](const std::vector<std::size_t>& c) {
    for (std::size_t i = 0; i < k; ++i) tuple[i] = subset[c[i]];
    return relation.contains(points, tuple) == want;
  });
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const MembershipOracle& oracle, bool want, std::uint64_t budget, std::uint64_t& nodes)
      : oracle_(oracle), want_(want), budget_(budget), nodes_(nodes), k_(oracle.arity()) {}

  /// Returns false if the budget ran out.
  bool run(std::vector<std::size_t>& best) {
    best_ = best;
    std::vector<std::size_t> all(oracle_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> current;
    const bool finished = extend(current, all);
    best = best_;
    return finished;
  }

 private:
  bool extend(std::vector<std::size_t>& current, const std::vector<std::size_t>& candidates) {
    if (++nodes_ > budget_) return false;
    if (current.size() > best_.size()) best_ = current;
    for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
      if (current.size() + (candidates.size() - pos) <= best_.size()) return true;
      const std::size_t v = candidates[pos];
      std::vector<std::size_t> next;
      next.reserve(candidates.size() - pos - 1);
      for (std::size_t q = pos + 1; q < candidates.size(); ++q)
        if (compatible(current, v, candidates[q])) next.push_back(candidates[q]);
      current.push_back(v);
      const bool ok = extend(current, next);
      current.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  // Every k-tuple made of (k-2) members of `current`, then v, then w has the wanted membership.
  bool compatible(const std::vector<std::size_t>& current, std::size_t v, std::size_t w) {
    if (current.size() + 2 < k_) return true;
    std::vector<std::size_t> tuple(k_);
    return for_each_combination(current.size(), k_ - 2, [&](const std::vector<std::size_t>& c) {
      for (std::size_t i = 0; i + 2 < k_; ++i) tuple[i] = current[c[i]];
      tuple[k_ - 2] = v;
      tuple[k_ - 1] = w;
      return oracle_(tuple) == want_;
    });
  }

  const MembershipOracle& oracle_;
  bool want_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::size_t k_;
  std::vector<std::size_t> best_;
};

}  // namespace

HomogeneousResult max_homogeneous(const OrderedPointSet& points, const SemiAlgebraicRelation& relation,
                                  std::uint64_t node_budget) {
  if (relation.arity() < 1) throw ArgumentError("relation arity must be positive");
  MembershipOracle oracle(points, relation);
  HomogeneousResult result;
  bool finished = true;
  std::vector<std::size_t> best;
  // All-in first; all-out replaces it only when strictly larger.
  for (Polarity pol : {Polarity::AllIn, Polarity::AllOut}) {
    std::vector<std::size_t> found = best;
    BranchAndBound search(oracle, pol == Polarity::AllIn, node_budget, result.stats.nodes);
    finished = search.run(found) && finished;
    if (found.size() > best.size() || (pol == Polarity::AllIn && best.empty())) {
      best = std::move(found);
      result.polarity = pol;
    }
    if (!finished) break;
  }
  result.subset = best;
  result.maximal = finished;
  result.certified = certify_homogeneous(points, relation, result.subset, result.polarity);
  return result;
}

}  // namespace semiramsey
