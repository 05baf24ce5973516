// Acceptance checks. Usage: acceptance [id ...]; no ids runs all of them.
// Prints one line per check and exits nonzero if any selected check fails.

#include "semiramsey/combinatorics.hpp"
#include "semiramsey/constructions.hpp"
#include "semiramsey/geometry.hpp"
#include "semiramsey/homogeneous.hpp"
#include "semiramsey/sturm.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace semiramsey;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string list(std::span<const std::size_t> idx) {
  std::ostringstream s;
  for (std::size_t i = 0; i < idx.size(); ++i) s << (i ? "," : "") << idx[i] + 1;
  return s.str();
}

Outcome base_hom() {
  std::ostringstream d;
  bool ok = true;
  double last = 0;
  for (unsigned n = 2; n <= 4; ++n) {
    const auto t0 = Clock::now();
    const auto inst = base_construction(n);
    const auto r = max_homogeneous(inst.points, inst.relation);
    last = seconds_since(t0);
    std::vector<std::size_t> powers;
    for (std::size_t p = 1; p <= inst.points.size(); p *= 2) powers.push_back(p - 1);
    const bool witness = certify_homogeneous(inst.points, inst.relation, powers, Polarity::AllIn);
    ok = ok && r.maximal && r.certified && r.subset.size() == n + 1 && witness;
    d << "n=" << n << " hom=" << r.subset.size() << (witness ? "" : " (powers of two not homogeneous)") << "; ";
  }
  ok = ok && last < 60;
  d << "n=4 took " << last << " s";
  return {ok, d.str()};
}

Outcome stepup_hom_bound() {
  const auto t0 = Clock::now();
  const auto up = step_up(base_construction(2));
  const auto r = max_homogeneous(up.points, up.relation);
  const double t = seconds_since(t0);
  const std::size_t bound = 2 * 3 + 3 - 4;
  std::ostringstream d;
  d << "hom=" << r.subset.size() << " bound=" << bound << " witness {" << list(r.subset) << "} "
    << to_string(r.polarity) << (r.maximal ? "" : " (budget exhausted)") << "; " << t << " s";
  return {r.maximal && r.subset.size() <= bound && t < 300, d.str()};
}

Outcome stepup_consistency() {
  const auto base = base_construction(2);
  const auto up = step_up(base);
  std::size_t tuples = 0, mismatches = 0;
  for_each_combination(up.points.size(), 4, [&](const std::vector<std::size_t>& c) {
    ++tuples;
    mismatches += up.relation.contains(up.points, c) != step_up_rule_membership(base, c) ? 1 : 0;
    return true;
  });
  std::ostringstream d;
  d << tuples << " tuples, " << mismatches << " mismatches";
  return {tuples == 1820 && mismatches == 0, d.str()};
}

Outcome delta_properties() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::uint64_t triples = 0, chains = 0;
  for (unsigned bits = 1; bits <= 10; ++bits) {
    const auto a = check_delta_property_a(bits);
    const auto b = check_delta_property_b(bits, 20000, bits);
    ok = ok && a.holds && b.holds;
    triples += a.checked;
    chains += b.checked;
  }
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << triples << " triples, " << chains << " chains; " << t << " s";
  return {ok && t < 60, d.str()};
}

Outcome onedim_k4() {
  const auto t0 = Clock::now();
  const bool close = !check_digit_closeness(2, 10).has_value();
  const auto inst = one_dim_k4_construction(2, 10);
  const auto r = max_homogeneous(inst.points, inst.relation);
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "digit closeness " << (close ? "holds" : "fails") << "; hom=" << r.subset.size() << " (limit 4), witness {"
    << list(r.subset) << "} " << to_string(r.polarity) << "; " << t << " s";
  return {close && r.maximal && r.subset.size() < 5 && t < 300, d.str()};
}

Outcome sturm_oracle() {
  CounterRng rng(6);
  std::size_t compared = 0, agree = 0, skipped = 0;
  while (compared < 1000) {
    const auto g = testsupport::random_coeffs(rng, static_cast<std::size_t>(rng.uniform(1, 8)));
    const Rational a = rng.rational(-8, 8, 4);
    const Rational b = a + rng.rational(1, 12, 4);
    if (testsupport::horner(g, a).is_zero() || testsupport::horner(g, b).is_zero()) continue;
    const auto expected = testsupport::BisectionCounter(g).count(a, b);
    if (!expected) {
      ++skipped;
      continue;
    }
    ++compared;
    agree += count_real_roots(testsupport::to_polynomial(g), a, b) == *expected ? 1 : 0;
  }
  std::ostringstream d;
  d << agree << "/" << compared << " agree (" << skipped << " oracle-inconclusive draws replaced)";
  return {agree == compared, d.str()};
}

Outcome transitive_ramsey() {
  const std::pair<unsigned, unsigned> cases[] = {{3, 3}, {4, 3}, {3, 4}, {4, 4}};
  const std::uint64_t expected[] = {3, 4, 4, 7};
  bool ok = true;
  std::ostringstream d;
  for (int i = 0; i < 4; ++i) {
    const auto [s, n] = cases[i];
    const auto v = transitive_ramsey_number(s, n);
    const auto at = verify_transitive_ramsey(s, n, static_cast<unsigned>(v));
    const auto below = verify_transitive_ramsey(s, n, static_cast<unsigned>(v - 1));
    const bool good = v == expected[i] && at.verdict == Verdict::Holds && below.verdict == Verdict::Fails &&
                      below.counterexample.has_value();
    ok = ok && good;
    d << "(" << s << "," << n << ")=" << v << (good ? "" : " MISMATCH") << " ";
  }
  return {ok, d.str()};
}

Outcome milnor_thom() {
  CounterRng rng(8);
  std::size_t violations = 0, largest = 0;
  const std::size_t families = 100, samples = 10000;
  for (std::size_t f = 0; f < families; ++f) {
    const auto d = static_cast<std::size_t>(rng.uniform(2, 3));
    const auto r = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(d), 6));
    const auto deg = static_cast<unsigned>(rng.uniform(1, 3));
    std::vector<Polynomial> fam;
    for (std::size_t i = 0; i < r; ++i) fam.push_back(testsupport::random_polynomial(rng, d, deg));
    std::vector<Point> pts;
    pts.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) pts.push_back(testsupport::random_point(rng, d, -4, 4, 16));
    const auto seen = count_distinct_sign_vectors(fam, pts);
    largest = std::max(largest, seen);
    if (BigInt(static_cast<unsigned long>(seen)) > milnor_thom_bound(deg, r, d)) ++violations;
  }
  std::ostringstream d;
  d << families << " families x " << samples << " points, " << violations << " violations, largest count " << largest;
  return {violations == 0, d.str()};
}

// Largest clique of the graph given by `adj`, by plain recursion over candidates.
std::size_t clique_number(const std::vector<std::vector<bool>>& adj) {
  std::function<std::size_t(std::vector<std::size_t>)> grow = [&](std::vector<std::size_t> cand) -> std::size_t {
    std::size_t best = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (adj[cand[i]][cand[j]]) next.push_back(cand[j]);
      best = std::max(best, 1 + grow(next));
    }
    return best;
  };
  std::vector<std::size_t> all(adj.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return grow(all);
}

Outcome frankl_wilson() {
  const auto t0 = Clock::now();
  const auto fw = frankl_wilson_graph(6, 2);
  const std::size_t n = fw.vertices.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n)), co(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) {
        adj[a][b] = fw.adjacent(a, b);
        co[a][b] = !adj[a][b];
      }
  const auto omega = clique_number(adj);
  const auto alpha = clique_number(co);
  const auto r = max_homogeneous(fw.points, fw.relation);
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << n << " vertices, clique " << omega << ", independent " << alpha << ", solver hom " << r.subset.size() << "; "
    << t << " s";
  return {n == 20 && omega <= 6 && alpha <= 6 && r.subset.size() == std::max(omega, alpha) && t < 60, d.str()};
}

Outcome greedy_soundness() {
  struct Named {
    std::string name;
    OrderedPointSet points;
    SemiAlgebraicRelation relation;
  };
  std::vector<Named> instances;
  for (unsigned n = 2; n <= 8; ++n) {
    auto b = base_construction(n);
    instances.push_back({"base" + std::to_string(n), b.points, b.relation});
  }
  for (unsigned n = 1; n <= 3; ++n) {
    auto u = step_up(base_construction(n));
    instances.push_back({"stepup" + std::to_string(n), u.points, u.relation});
  }
  for (unsigned n = 1; n <= 2; ++n) {
    auto k = one_dim_k4_construction(n);
    instances.push_back({"onedim" + std::to_string(n), k.points, k.relation});
  }
  CounterRng rng(10);
  for (std::size_t d : {2u, 3u}) {
    std::vector<Point> pts;
    for (int i = 0; i < 60; ++i) pts.push_back(testsupport::random_point(rng, d, -50, 50, 1));
    instances.push_back({"order-type" + std::to_string(d), OrderedPointSet(d, pts), order_type_relation(d)});
    const auto arr = testsupport::random_general_arrangement(rng, d, d == 2 ? 14 : 10);
    instances.push_back({"one-sided" + std::to_string(d), arr.representation_points(), one_sided_relation(d)});
  }
  std::size_t certified = 0, runs = 0;
  std::ostringstream d;
  for (const auto& inst : instances) {
    if (inst.relation.arity() < 3 || inst.points.size() > 300) continue;
    ++runs;
    const auto r = erdos_rado_greedy(inst.points, inst.relation);
    const bool ok = r.certified && certify_homogeneous(inst.points, inst.relation, r.subset, r.polarity);
    certified += ok ? 1 : 0;
    if (!ok) d << inst.name << " uncertified; ";
  }
  d << certified << "/" << runs << " runs certified";
  return {runs > 0 && certified == runs, d.str()};
}

Outcome erdos_szekeres() {
  CounterRng rng(11);
  std::size_t below = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 100));
    std::vector<Rational> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = Rational(static_cast<long>(i));
    for (std::size_t i = n; i > 1; --i)
      std::swap(s[i - 1], s[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
    const auto len = longest_monotone_subsequence(s).indices.size();
    below += len * len < n ? 1 : 0;
  }
  bool tight = true;
  for (std::size_t n = 2; n <= 10; ++n) {
    const std::size_t m = n - 1;
    std::vector<Rational> s;
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t i = m; i-- > 0;) s.push_back(Rational(static_cast<long>(b * m + i)));
    tight = tight && longest_monotone_subsequence(s).indices.size() == m;
  }
  std::ostringstream d;
  d << "10000 permutations, " << below << " below ceil(sqrt N); extremal permutations " << (tight ? "tight" : "NOT tight");
  return {below == 0 && tight, d.str()};
}

Outcome spencer() {
  CounterRng rng(12);
  std::size_t ok = 0, runs = 0, rounds = 0;
  while (runs < 100) {
    const auto n = static_cast<std::size_t>(rng.uniform(3, 200));
    const auto want = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>((n + 2) / 3),
                                                           static_cast<std::int64_t>(4 * n)));
    std::vector<Triple> edges;
    while (edges.size() < want) {
      Triple t{static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1)),
               static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1)),
               static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1))};
      if (t[0] != t[1] && t[1] != t[2] && t[0] != t[2]) edges.push_back(t);
    }
    const Hypergraph3 h(n, edges);
    if (3 * h.edges().size() < n) continue;
    ++runs;
    try {
      const auto r = spencer_independent_set(h, runs);
      rounds = std::max(rounds, r.rounds);
      ok += h.is_independent(r.independent_set) && meets_spencer_bound(n, h.edges().size(), r.independent_set.size());
    } catch (const BudgetError&) {
    }
  }
  std::ostringstream d;
  d << ok << "/" << runs << " hypergraphs, most rounds " << rounds;
  return {ok == runs, d.str()};
}

Outcome geometry() {
  CounterRng rng(13);
  std::size_t tuples = 0, mismatches = 0;
  for (std::size_t d : {2u, 3u}) {
    const auto rel = one_sided_relation(d);
    for (int a = 0; a < 50; ++a) {
      const auto arr = testsupport::random_general_arrangement(rng, d, d + 5);
      const auto reps = arr.representation_points();
      for_each_combination(arr.size(), d, [&](const std::vector<std::size_t>& c) {
        std::vector<Hyperplane> sub;
        for (auto i : c) sub.push_back(arr.hyperplanes[i]);
        ++tuples;
        mismatches += rel.contains(reps, c) != (hyperplane_intersection(sub).back().sign() > 0) ? 1 : 0;
        return true;
      });
    }
  }
  std::size_t sets = 0, klein_failures = 0;
  while (sets < 10000) {
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(testsupport::random_point(rng, 2, -100, 100, 1));
    const OrderedPointSet set(2, pts);
    if (!general_position_points(set).general) continue;
    ++sets;
    const bool found = !for_each_combination(5, 4, [&](const std::vector<std::size_t>& c) {
      return !is_convex_position(set.select(c));
    });
    klein_failures += found ? 0 : 1;
  }
  std::ostringstream d;
  d << tuples << " tuples, " << mismatches << " mismatches; " << sets << " five-point sets, " << klein_failures
    << " without a convex quadrilateral";
  return {mismatches == 0 && klein_failures == 0, d.str()};
}

const std::map<int, std::pair<const char*, std::function<Outcome()>>> checks = {
    {1, {"base-case hom equals n+1", base_hom}},
    {2, {"step-up hom within 2*hom + k - 4", stepup_hom_bound}},
    {3, {"step-up polynomial membership matches the delta rule", stepup_consistency}},
    {4, {"delta properties A and B", delta_properties}},
    {5, {"one-dimensional k=4 instance has no homogeneous 5-set", onedim_k4}},
    {6, {"Sturm counts match the bisection oracle", sturm_oracle}},
    {7, {"transitive Ramsey closed form matches search", transitive_ramsey}},
    {8, {"sign patterns within the Milnor-Thom bound", milnor_thom}},
    {9, {"Frankl-Wilson clique and independence numbers", frankl_wilson}},
    {10, {"greedy results certify", greedy_soundness}},
    {11, {"Erdos-Szekeres bound and tightness", erdos_szekeres}},
    {12, {"deletion method meets its bound", spencer}},
    {13, {"one-sided relation and Klein property", geometry}},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    for (const auto& [id, _] : checks) ids.push_back(id);
  bool all = true;
  for (int id : ids) {
    const auto it = checks.find(id);
    if (it == checks.end()) {
      std::cerr << "unknown criterion " << id << '\n';
      return 2;
    }
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << it->second.first << " -- "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
