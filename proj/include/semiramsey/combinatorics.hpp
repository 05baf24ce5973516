#pragma once

#include "semiramsey/relation.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace semiramsey {

using Triple = std::array<std::size_t, 3>;

// ---------------------------------------------------------------------------
// Monotone subsequences

struct MonotoneSubsequence {
  std::vector<std::size_t> indices;  // 0-based positions in the input
  bool increasing = true;
};

/// Longest increasing or decreasing subsequence (ties prefer increasing).
/// Throws ArgumentError on repeated entries.
MonotoneSubsequence longest_monotone_subsequence(std::span<const Rational> seq);

// ---------------------------------------------------------------------------
// Transitive colorings of triples

/// C(s+n-4, s-2) + 1 for s, n >= 3.
std::uint64_t transitive_ramsey_number(unsigned s, unsigned n);

enum class Verdict : std::uint8_t { Holds, Fails, Inconclusive };

const char* to_string(Verdict v);

struct TransitiveRamseyReport {
  Verdict verdict = Verdict::Inconclusive;
  std::uint64_t nodes = 0;
  std::uint64_t colorings_checked = 0;  // complete transitive colorings reached
  /// On Fails: a transitive coloring with no red K_s and no blue K_n, as the
  /// list of red triples (0-based, increasing); all other triples are blue.
  std::optional<std::vector<Triple>> counterexample;
};

/// True iff every transitive red/blue coloring of the triples of [N] has a red
/// s-clique or a blue n-clique. Backtracks over colorings with transitivity
/// pruning; returns Inconclusive if `node_budget` runs out.
TransitiveRamseyReport verify_transitive_ramsey(unsigned s, unsigned n, unsigned N,
                                                std::uint64_t node_budget = 50'000'000);

/// Checks the transitivity constraint on a full coloring (red[t] for triple rank t
/// in lexicographic order).
bool is_transitive_coloring(unsigned N, const std::vector<bool>& red);

// ---------------------------------------------------------------------------
// 3-uniform hypergraphs and Spencer's deletion method

class Hypergraph3 {
 public:
  Hypergraph3() = default;
  /// Vertices 0..n-1; edges are normalised to increasing order and deduplicated.
  Hypergraph3(std::size_t n, std::vector<Triple> edges);

  std::size_t size() const { return n_; }
  const std::vector<Triple>& edges() const { return edges_; }
  bool is_independent(std::span<const std::size_t> vertices) const;

  friend bool operator==(const Hypergraph3&, const Hypergraph3&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Triple> edges_;
};

/// True iff 27 |E| |S|^2 >= 4 N^3, i.e. |S| >= (2N/3) sqrt(N / (3|E|)).
bool meets_spencer_bound(std::size_t n, std::size_t edges, std::size_t set_size);

struct SpencerResult {
  std::vector<std::size_t> independent_set;
  std::size_t rounds = 0;
};

/// Deletion method: keep each vertex with probability sqrt(N / (3|E|)), then
/// drop one vertex from every surviving edge; repeat seeded rounds until the
/// bound is met. Throws PreconditionError if |E| < N/3 and BudgetError after
/// `max_rounds` failed rounds.
SpencerResult spencer_independent_set(const Hypergraph3& h, std::uint64_t seed, std::size_t max_rounds = 10'000);

/// The member triples of an arity-3 relation as a hypergraph.
Hypergraph3 relation_hypergraph(const OrderedPointSet& points, const SemiAlgebraicRelation& relation);

// ---------------------------------------------------------------------------
// Freeness predicates and bad triples for arity-3 relations

struct FreenessResult {
  bool free = true;
  std::vector<std::size_t> witness;  // 0-based, on failure
};

/// No s points with all triples in the relation.
FreenessResult is_ks3_free(const OrderedPointSet& points, const SemiAlgebraicRelation& relation, std::size_t s);

/// Every four points induce at most two member triples.
FreenessResult is_k4e_free(const OrderedPointSet& points, const SemiAlgebraicRelation& relation);

struct BadTripleReport {
  std::vector<Triple> triples;        // increasing, deduplicated, lexicographic
  std::size_t zero_restrictions = 0;  // identically-zero restrictions skipped
};

/// Triples {i < j < m} for which some nonzero univariate restriction of a
/// relation polynomial through two of the points vanishes at the third.
BadTripleReport find_bad_triples(const OrderedPointSet& points, const SemiAlgebraicRelation& relation);

}  // namespace semiramsey
