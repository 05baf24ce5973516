#include "semiramsey/combinatorics.hpp"

#include "semiramsey/error.hpp"
#include "semiramsey/homogeneous.hpp"
#include "semiramsey/random.hpp"
#include "semiramsey/subsets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace semiramsey {

// ---------------------------------------------------------------------------
// Monotone subsequences

namespace {

template <typename Less>
std::vector<std::size_t> longest_chain(std::span<const Rational> seq, Less less) {
  std::vector<std::size_t> tails;  // tails[l] = index ending a chain of length l+1
  std::vector<std::ptrdiff_t> prev(seq.size(), -1);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), i,
                               [&](std::size_t t, std::size_t cur) { return less(seq[t], seq[cur]); });
    if (it != tails.begin()) prev[i] = static_cast<std::ptrdiff_t>(*(it - 1));
    if (it == tails.end())
      tails.push_back(i);
    else
      *it = i;
  }
  std::vector<std::size_t> out;
  if (tails.empty()) return out;
  for (auto i = static_cast<std::ptrdiff_t>(tails.back()); i >= 0; i = prev[static_cast<std::size_t>(i)])
    out.push_back(static_cast<std::size_t>(i));
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

MonotoneSubsequence longest_monotone_subsequence(std::span<const Rational> seq) {
  std::vector<Rational> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ArgumentError("monotone subsequence input must have distinct entries");
  auto inc = longest_chain(seq, std::less<>());
  auto dec = longest_chain(seq, std::greater<>());
  if (dec.size() > inc.size()) return {std::move(dec), false};
  return {std::move(inc), true};
}

// ---------------------------------------------------------------------------
// Transitive colorings

std::uint64_t transitive_ramsey_number(unsigned s, unsigned n) {
  if (s < 3 || n < 3) throw ArgumentError("transitive Ramsey number requires s, n >= 3");
  return binomial(s + n - 4, s - 2) + 1;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

struct TripleIndex {
  explicit TripleIndex(unsigned n) : n(n), rank(n * n * n, SIZE_MAX) {
    for_each_combination(n, 3, [&](const std::vector<std::size_t>& c) {
      rank[(c[0] * n + c[1]) * n + c[2]] = triples.size();
      triples.push_back({c[0], c[1], c[2]});
      return true;
    });
  }
  std::size_t of(std::size_t a, std::size_t b, std::size_t c) const { return rank[(a * n + b) * n + c]; }
  unsigned n;
  std::vector<std::size_t> rank;
  std::vector<Triple> triples;
};

// (a,b,c) and (b,c,e) share a colour => (a,b,e) and (a,c,e) take it too.
bool four_set_ok(const TripleIndex& ix, const std::vector<int>& color, std::size_t a, std::size_t b,
                 std::size_t c, std::size_t e) {
  const int x = color[ix.of(a, b, c)];
  if (x != color[ix.of(b, c, e)]) return true;
  return color[ix.of(a, b, e)] == x && color[ix.of(a, c, e)] == x;
}

class TransitiveSearch {
 public:
  TransitiveSearch(unsigned s, unsigned n, unsigned N, std::uint64_t budget, TransitiveRamseyReport& report)
      : s_(s), n_(n), ix_(N), budget_(budget), report_(report), color_(ix_.triples.size(), -1) {}

  // Returns false to abort (counterexample found or budget exhausted).
  bool assign(std::size_t t) {
    if (++report_.nodes > budget_) {
      report_.verdict = Verdict::Inconclusive;
      return false;
    }
    if (t == ix_.triples.size()) {
      ++report_.colorings_checked;
      report_.verdict = Verdict::Fails;
      std::vector<Triple> red;
      for (std::size_t i = 0; i < color_.size(); ++i)
        if (color_[i] == 1) red.push_back(ix_.triples[i]);
      report_.counterexample = std::move(red);
      return false;
    }
    for (int c : {1, 0}) {
      color_[t] = c;
      if (!consistent(t)) continue;
      if (completes_clique(t)) {
        ++report_.colorings_checked;
        continue;
      }
      if (!assign(t + 1)) return false;
    }
    color_[t] = -1;
    return true;
  }

 private:
  // Checks every 4-set whose lexicographically largest triple is t.
  bool consistent(std::size_t t) const {
    const auto [b, c, e] = ix_.triples[t];
    for (std::size_t a = 0; a < b; ++a)
      if (!four_set_ok(ix_, color_, a, b, c, e)) return false;
    return true;
  }

  // Whether a monochromatic clique of the required size has t as its largest triple.
  bool completes_clique(std::size_t t) const {
    const int c = color_[t];
    const std::size_t size = c == 1 ? s_ : n_;
    const auto [a, b, e] = ix_.triples[t];
    if (a + 3 < size) return false;
    std::vector<std::size_t> members{a, b, e};
    return extend(members, a, size - 3, c);
  }

  bool extend(std::vector<std::size_t>& members, std::size_t below, std::size_t need, int c) const {
    if (need == 0) return true;
    for (std::size_t v = below; v-- > 0;) {
      bool ok = true;
      for (std::size_t i = 0; i < members.size() && ok; ++i)
        for (std::size_t j = i + 1; j < members.size() && ok; ++j) {
          std::array<std::size_t, 3> t{v, members[i], members[j]};
          std::sort(t.begin(), t.end());
          ok = color_[ix_.of(t[0], t[1], t[2])] == c;
        }
      if (!ok) continue;
      members.push_back(v);
      const bool found = extend(members, v, need - 1, c);
      members.pop_back();
      if (found) return true;
    }
    return false;
  }

  unsigned s_;
  unsigned n_;
  TripleIndex ix_;
  std::uint64_t budget_;
  TransitiveRamseyReport& report_;
  std::vector<int> color_;
};

}  // namespace

TransitiveRamseyReport verify_transitive_ramsey(unsigned s, unsigned n, unsigned N, std::uint64_t node_budget) {
  if (s < 3 || n < 3) throw ArgumentError("transitive Ramsey verification requires s, n >= 3");
  if (N > 12) throw ResourceError("transitive Ramsey verification supports N <= 12");
  TransitiveRamseyReport report;
  TransitiveSearch search(s, n, N, node_budget, report);
  if (search.assign(0)) report.verdict = Verdict::Holds;
  return report;
}

bool is_transitive_coloring(unsigned N, const std::vector<bool>& red) {
  TripleIndex ix(N);
  if (red.size() != ix.triples.size()) throw ArgumentError("coloring size does not match C(N,3)");
  std::vector<int> color(red.begin(), red.end());
  return for_each_combination(N, 4, [&](const std::vector<std::size_t>& q) {
    return four_set_ok(ix, color, q[0], q[1], q[2], q[3]);
  });
}

// ---------------------------------------------------------------------------
// Hypergraphs

Hypergraph3::Hypergraph3(std::size_t n, std::vector<Triple> edges) : n_(n) {
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (e[2] >= n_) throw ArgumentError("hyperedge vertex out of range");
    if (e[0] == e[1] || e[1] == e[2]) throw ArgumentError("hyperedge with repeated vertex");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Hypergraph3::is_independent(std::span<const std::size_t> vertices) const {
  std::vector<bool> in(n_, false);
  for (auto v : vertices) {
    if (v >= n_) return false;
    in[v] = true;
  }
  return std::none_of(edges_.begin(), edges_.end(),
                      [&](const Triple& e) { return in[e[0]] && in[e[1]] && in[e[2]]; });
}

bool meets_spencer_bound(std::size_t n, std::size_t edges, std::size_t set_size) {
  const BigInt lhs = BigInt(27) * BigInt(static_cast<unsigned long>(edges)) *
                     BigInt(static_cast<unsigned long>(set_size)) * BigInt(static_cast<unsigned long>(set_size));
  const BigInt nn(static_cast<unsigned long>(n));
  return lhs >= BigInt(4) * nn * nn * nn;
}

SpencerResult spencer_independent_set(const Hypergraph3& h, std::uint64_t seed, std::size_t max_rounds) {
  const std::size_t n = h.size();
  const std::size_t m = h.edges().size();
  if (3 * m < n) throw PreconditionError("deletion method requires |E| >= N/3");
  const double p = std::sqrt(static_cast<double>(n) / (3.0 * static_cast<double>(m)));
  SpencerResult result;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    CounterRng rng(seed, round);
    std::vector<bool> keep(n);
    for (std::size_t v = 0; v < n; ++v) keep[v] = rng.unit() < p;
    for (const auto& e : h.edges())
      if (keep[e[0]] && keep[e[1]] && keep[e[2]]) keep[e[2]] = false;
    std::vector<std::size_t> set;
    for (std::size_t v = 0; v < n; ++v)
      if (keep[v]) set.push_back(v);
    if (meets_spencer_bound(n, m, set.size())) {
      result.independent_set = std::move(set);
      result.rounds = round + 1;
      return result;
    }
  }
  throw BudgetError("deletion method did not meet the bound within the round cap");
}

Hypergraph3 relation_hypergraph(const OrderedPointSet& points, const SemiAlgebraicRelation& relation) {
  if (relation.arity() != 3) throw ArgumentError("relation hypergraph requires arity 3");
  std::vector<Triple> edges;
  for_each_combination(points.size(), 3, [&](const std::vector<std::size_t>& c) {
    if (relation.contains(points, c)) edges.push_back({c[0], c[1], c[2]});
    return true;
  });
  return Hypergraph3(points.size(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Freeness and bad triples

namespace {

void require_arity3(const SemiAlgebraicRelation& relation) {
  if (relation.arity() != 3) throw ArgumentError("predicate requires an arity-3 relation");
}

bool clique_search(const MembershipOracle& member, std::vector<std::size_t>& current,
                   const std::vector<std::size_t>& candidates, std::size_t target) {
  if (current.size() == target) return true;
  for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
    if (current.size() + candidates.size() - pos < target) return false;
    const std::size_t v = candidates[pos];
    std::vector<std::size_t> next;
    for (std::size_t q = pos + 1; q < candidates.size(); ++q) {
      const std::size_t w = candidates[q];
      bool ok = true;
      for (std::size_t a = 0; a < current.size() && ok; ++a) {
        const std::array<std::size_t, 3> t{current[a], v, w};
        ok = member(t);
      }
      if (ok) next.push_back(w);
    }
    current.push_back(v);
    if (clique_search(member, current, next, target)) return true;
    current.pop_back();
  }
  return false;
}

}  // namespace

FreenessResult is_ks3_free(const OrderedPointSet& points, const SemiAlgebraicRelation& relation, std::size_t s) {
  require_arity3(relation);
  FreenessResult out;
  if (s < 3) {
    // Fewer than three points contain no triple at all, in E or not.
    if (points.size() >= s) {
      out.free = false;
      for (std::size_t i = 0; i < s; ++i) out.witness.push_back(i);
    }
    return out;
  }
  MembershipOracle member(points, relation);
  std::vector<std::size_t> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  // Pairs are unconstrained; the search filters candidates from the third vertex on.
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      std::vector<std::size_t> current{a, b};
      std::vector<std::size_t> cand;
      for (std::size_t w = b + 1; w < all.size(); ++w) {
        const std::array<std::size_t, 3> t{a, b, w};
        if (member(t)) cand.push_back(w);
      }
      if (clique_search(member, current, cand, s)) {
        out.free = false;
        out.witness = current;
        return out;
      }
    }
  return out;
}

FreenessResult is_k4e_free(const OrderedPointSet& points, const SemiAlgebraicRelation& relation) {
  require_arity3(relation);
  MembershipOracle member(points, relation);
  FreenessResult out;
  for_each_combination(points.size(), 4, [&](const std::vector<std::size_t>& q) {
    int count = 0;
    for_each_combination(4, 3, [&](const std::vector<std::size_t>& c) {
      const std::array<std::size_t, 3> t{q[c[0]], q[c[1]], q[c[2]]};
      count += member(t) ? 1 : 0;
      return true;
    });
    if (count > 2) {
      out.free = false;
      out.witness = q;
      return false;
    }
    return true;
  });
  return out;
}

BadTripleReport find_bad_triples(const OrderedPointSet& points, const SemiAlgebraicRelation& relation) {
  require_arity3(relation);
  if (relation.point_dim() != 1) throw ArgumentError("bad triples are defined for points on the line");
  BadTripleReport report;
  std::set<Triple> bad;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& pi = points[i][0];
      const Rational& pj = points[j][0];
      for (const auto& f : relation.polys())
        for (std::size_t free_slot = 0; free_slot < 3; ++free_slot) {
          std::vector<std::pair<std::size_t, Rational>> fixed;
          std::size_t used = 0;
          for (std::size_t slot = 0; slot < 3; ++slot)
            if (slot != free_slot) fixed.emplace_back(slot, used++ == 0 ? pi : pj);
          const Polynomial h = f.restrict(fixed);
          if (h.is_zero()) {
            ++report.zero_restrictions;
            continue;
          }
          if (h.is_constant()) continue;
          for (std::size_t m = 0; m < n; ++m) {
            if (m == i || m == j) continue;
            const std::array<Rational, 1> at{points[m][0]};
            if (h.evaluate(at).is_zero()) {
              Triple t{i, j, m};
              std::sort(t.begin(), t.end());
              bad.insert(t);
            }
          }
        }
    }
  report.triples.assign(bad.begin(), bad.end());
  return report;
}

}  // namespace semiramsey
