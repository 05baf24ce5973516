#include "semiramsey/error.hpp"
#include "semiramsey/homogeneous.hpp"
#include "semiramsey/subsets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semiramsey {

namespace {

struct LevelResult {
  std::vector<std::size_t> subset;
  std::optional<Polarity> polarity;  // empty when the subset is too small to contain a tuple
};

std::vector<Atom> distinct_atoms(const Formula& f) {
  std::vector<Atom> out;
  auto visit = [&](auto&& self, const Formula& node) -> void {
    if (node.op() == Formula::Op::Leaf) {
      if (std::find(out.begin(), out.end(), node.atom()) == out.end()) out.push_back(node.atom());
      return;
    }
    for (const auto& c : node.children()) self(self, c);
  };
  visit(visit, f);
  return out;
}

class Cascade {
 public:
  Cascade(const OrderedPointSet& points, const GreedyOptions& options, SolverStats& stats)
      : points_(points), options_(options), stats_(stats) {}

  LevelResult run(const std::vector<std::size_t>& pool, const SemiAlgebraicRelation& rel) {
    ++stats_.recursion_depth;
    const std::size_t j = rel.arity();
    if (pool.size() < j) return {pool, std::nullopt};
    if (j == 2) return pair_search(pool, rel);

    GreedyLevel level;
    level.arity = j;
    level.pool_size = pool.size();
    const auto atoms = distinct_atoms(rel.formula());
    std::vector<std::size_t> used_polys;
    for (const auto& a : atoms)
      if (std::find(used_polys.begin(), used_polys.end(), a.poly_index) == used_polys.end())
        used_polys.push_back(a.poly_index);

    std::vector<std::size_t> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(j - 2));
    std::vector<std::size_t> rest(pool.begin() + static_cast<std::ptrdiff_t>(j - 2), pool.end());
    while (!rest.empty()) {
      const std::size_t next = rest.front();
      rest.erase(rest.begin());
      if (!rest.empty()) rest = keep_largest_class(rel, atoms, used_polys, chosen, next, rest, level);
      chosen.push_back(next);
    }
    level.sequence_length = chosen.size();
    stats_.levels.push_back(level);

    const std::size_t last = chosen.back();
    chosen.pop_back();
    LevelResult sub = run(chosen, rel.fix_last_slot(points_[last]));
    sub.subset.push_back(last);
    if (sub.subset.size() < j) sub.polarity.reset();
    return sub;
  }

 private:
  LevelResult pair_search(const std::vector<std::size_t>& pool, const SemiAlgebraicRelation& rel) {
    const auto local = points_.select(pool);
    auto res = max_homogeneous(local, rel, options_.pair_search_budget);
    stats_.nodes += res.stats.nodes;
    LevelResult out;
    for (auto i : res.subset) out.subset.push_back(pool[i]);
    if (out.subset.size() >= 2) out.polarity = res.polarity;
    return out;
  }

  // Groups `rest` by the truth values of every atom restricted to
  // (T, next, x) for all (j-2)-subsets T of `chosen`, and returns the largest
  // group (ties go to the group holding the smallest index).
  std::vector<std::size_t> keep_largest_class(const SemiAlgebraicRelation& rel, const std::vector<Atom>& atoms,
                                              const std::vector<std::size_t>& used_polys,
                                              const std::vector<std::size_t>& chosen, std::size_t next,
                                              const std::vector<std::size_t>& rest, GreedyLevel& level) {
    const std::size_t j = rel.arity();
    const std::size_t d = rel.point_dim();

    struct Restricted {
      std::vector<Polynomial> by_poly;  // aligned with used_polys
    };
    std::vector<Restricted> families;
    std::vector<std::vector<std::size_t>> prefixes;
    unsigned max_deg = 0;
    for_each_combination(chosen.size(), j - 2, [&](const std::vector<std::size_t>& c) {
      std::vector<std::pair<std::size_t, Rational>> fixed;
      std::vector<std::size_t> prefix;
      for (std::size_t slot = 0; slot < j - 2; ++slot) {
        prefix.push_back(chosen[c[slot]]);
        for (std::size_t coord = 0; coord < d; ++coord)
          fixed.emplace_back(slot * d + coord, points_[chosen[c[slot]]][coord]);
      }
      for (std::size_t coord = 0; coord < d; ++coord) fixed.emplace_back((j - 2) * d + coord, points_[next][coord]);
      Restricted r;
      for (auto pi : used_polys) {
        r.by_poly.push_back(rel.polys()[pi].restrict(fixed));
        max_deg = std::max(max_deg, r.by_poly.back().degree());
      }
      families.push_back(std::move(r));
      prefix.push_back(next);
      prefixes.push_back(std::move(prefix));
      return true;
    });

    std::vector<std::size_t> atom_slot(atoms.size());
    for (std::size_t a = 0; a < atoms.size(); ++a)
      atom_slot[a] = static_cast<std::size_t>(
          std::find(used_polys.begin(), used_polys.end(), atoms[a].poly_index) - used_polys.begin());

    std::map<std::vector<bool>, std::size_t> class_of;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<int> signs(used_polys.size());
    for (auto x : rest) {
      std::vector<bool> key;
      key.reserve(families.size() * atoms.size());
      for (const auto& fam : families) {
        for (std::size_t p = 0; p < used_polys.size(); ++p) signs[p] = fam.by_poly[p].sign_at(points_[x]);
        for (std::size_t a = 0; a < atoms.size(); ++a) key.push_back(satisfies(signs[atom_slot[a]], atoms[a].cmp));
      }
      auto [it, inserted] = class_of.try_emplace(std::move(key), classes.size());
      if (inserted) classes.emplace_back();
      classes[it->second].push_back(x);
    }
    level.class_counts.push_back(classes.size());

    const std::size_t family_size = families.size() * used_polys.size();
    if (d >= 2 && family_size >= d && max_deg >= 1) {
      ++level.milnor_thom_checks;
      if (BigInt(static_cast<unsigned long>(classes.size())) > milnor_thom_bound(max_deg, family_size, d))
        throw std::logic_error("greedy class count exceeds the Milnor-Thom bound");
    }

    std::size_t best = 0;
    for (std::size_t c = 1; c < classes.size(); ++c)
      if (classes[c].size() > classes[best].size()) best = c;

    if (options_.check_invariants) {
      const auto& kept = classes[best];
      for (const auto& prefix : prefixes) {
        std::vector<std::size_t> tuple = prefix;
        tuple.push_back(kept.front());
        const bool expected = rel.contains(points_, tuple);
        for (auto x : kept) {
          tuple.back() = x;
          if (rel.contains(points_, tuple) != expected)
            throw std::logic_error("greedy kept class is not homogeneous");
        }
      }
    }
    return classes[best];
  }

  const OrderedPointSet& points_;
  const GreedyOptions& options_;
  SolverStats& stats_;
};

}  // namespace

HomogeneousResult erdos_rado_greedy(const OrderedPointSet& points, const SemiAlgebraicRelation& relation,
                                    const GreedyOptions& options) {
  if (relation.arity() < 3) throw ArgumentError("greedy cascade requires arity >= 3");
  if (points.size() < relation.arity()) throw ArgumentError("greedy cascade requires at least k points");
  if (points.dim() != relation.point_dim()) throw ArgumentError("point set dimension does not match relation");

  HomogeneousResult result;
  std::vector<std::size_t> pool(points.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  Cascade cascade(points, options, result.stats);
  auto level = cascade.run(pool, relation);
  result.subset = std::move(level.subset);
  result.polarity = level.polarity.value_or(Polarity::AllIn);
  result.certified = certify_homogeneous(points, relation, result.subset, result.polarity);
  return result;
}

}  // namespace semiramsey
