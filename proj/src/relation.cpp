#include "semiramsey/relation.hpp"

#include "semiramsey/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace semiramsey {

OrderedPointSet::OrderedPointSet(std::size_t dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.size() != dim_) throw ArgumentError("point dimension does not match point set dimension");
}

OrderedPointSet OrderedPointSet::select(std::span<const std::size_t> indices) const {
  std::vector<Point> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(points_.at(i));
  return OrderedPointSet(dim_, std::move(out));
}

Formula Formula::leaf(std::size_t poly_index, Comparison cmp) {
  Formula f;
  f.op_ = Op::Leaf;
  f.atom_ = Atom{poly_index, cmp};
  return f;
}

Formula Formula::all_of(std::vector<Formula> children) {
  Formula f;
  f.op_ = Op::And;
  f.children_ = std::move(children);
  return f;
}

Formula Formula::any_of(std::vector<Formula> children) {
  Formula f;
  f.op_ = Op::Or;
  f.children_ = std::move(children);
  return f;
}

Formula Formula::negate(Formula child) {
  Formula f;
  f.op_ = Op::Not;
  f.children_.push_back(std::move(child));
  return f;
}

bool Formula::evaluate(std::span<const int> signs) const {
  switch (op_) {
    case Op::Leaf: return satisfies(signs[atom_.poly_index], atom_.cmp);
    case Op::Not: return !children_.front().evaluate(signs);
    case Op::And:
      return std::all_of(children_.begin(), children_.end(),
                         [&](const Formula& c) { return c.evaluate(signs); });
    case Op::Or:
      return std::any_of(children_.begin(), children_.end(),
                         [&](const Formula& c) { return c.evaluate(signs); });
  }
  return false;
}

Formula Formula::shifted(std::size_t offset) const {
  Formula f = *this;
  if (f.op_ == Op::Leaf) f.atom_.poly_index += offset;
  for (auto& c : f.children_) c = c.shifted(offset);
  return f;
}

std::size_t Formula::max_poly_index_plus_one() const {
  std::size_t best = op_ == Op::Leaf ? atom_.poly_index + 1 : 0;
  for (const auto& c : children_) best = std::max(best, c.max_poly_index_plus_one());
  return best;
}

std::size_t Formula::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children_) n += c.node_count();
  return n;
}

SemiAlgebraicRelation::SemiAlgebraicRelation(std::size_t arity, std::size_t point_dim,
                                             std::vector<Polynomial> polys, Formula formula)
    : arity_(arity), point_dim_(point_dim), polys_(std::move(polys)), formula_(std::move(formula)) {
  if (arity_ == 0 || point_dim_ == 0) throw ArgumentError("relation arity and dimension must be positive");
  for (const auto& p : polys_)
    if (p.num_vars() != num_vars())
      throw ArgumentError("relation polynomial has " + std::to_string(p.num_vars()) +
                          " variables, expected arity*dim = " + std::to_string(num_vars()));
  if (formula_.max_poly_index_plus_one() > polys_.size())
    throw ArgumentError("formula references a polynomial index out of range");
}

unsigned SemiAlgebraicRelation::max_degree() const {
  unsigned d = 0;
  for (const auto& p : polys_) d = std::max(d, p.degree());
  return d;
}

std::size_t SemiAlgebraicRelation::complexity() const {
  return std::max({num_vars(), polys_.size(), static_cast<std::size_t>(max_degree())});
}

std::vector<int> SemiAlgebraicRelation::signs(std::span<const Rational> coords) const {
  if (coords.size() != num_vars()) throw ArgumentError("coordinate vector length does not match arity*dim");
  std::vector<int> out;
  out.reserve(polys_.size());
  for (const auto& p : polys_) out.push_back(p.sign_at(coords));
  return out;
}

bool SemiAlgebraicRelation::contains(std::span<const Rational> coords) const {
  const auto s = signs(coords);
  return formula_.evaluate(s);
}

std::vector<Rational> SemiAlgebraicRelation::concatenate(const OrderedPointSet& points,
                                                         std::span<const std::size_t> indices) const {
  if (points.dim() != point_dim_) throw ArgumentError("point set dimension does not match relation");
  if (indices.size() != arity_) throw ArgumentError("tuple length does not match relation arity");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= points.size()) throw ArgumentError("tuple index out of range");
    if (i > 0 && indices[i] <= indices[i - 1]) throw ArgumentError("tuple indices must be strictly increasing");
  }
  std::vector<Rational> coords;
  coords.reserve(num_vars());
  for (auto i : indices) coords.insert(coords.end(), points[i].begin(), points[i].end());
  return coords;
}

bool SemiAlgebraicRelation::contains(const OrderedPointSet& points,
                                     std::span<const std::size_t> indices) const {
  return contains(concatenate(points, indices));
}

SemiAlgebraicRelation SemiAlgebraicRelation::fix_last_slot(const Point& last) const {
  if (arity_ < 2) throw ArgumentError("cannot fix the only slot of a unary relation");
  if (last.size() != point_dim_) throw ArgumentError("fixed point dimension does not match relation");
  std::vector<std::pair<std::size_t, Rational>> fixed;
  const std::size_t base = (arity_ - 1) * point_dim_;
  for (std::size_t c = 0; c < point_dim_; ++c) fixed.emplace_back(base + c, last[c]);
  std::vector<Polynomial> polys;
  polys.reserve(polys_.size());
  for (const auto& p : polys_) polys.push_back(p.restrict(fixed));
  return SemiAlgebraicRelation(arity_ - 1, point_dim_, std::move(polys), formula_);
}

SignVector sign_vector(std::span<const Polynomial> family, std::span<const Rational> point) {
  SignVector out;
  out.reserve(family.size());
  for (const auto& p : family) out.push_back(static_cast<std::int8_t>(p.sign_at(point)));
  return out;
}

namespace {
struct SignVectorHash {
  std::size_t operator()(const SignVector& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto s : v) h = (h ^ static_cast<std::size_t>(s + 1)) * 1099511628211ULL;
    return h;
  }
};
}  // namespace

std::size_t count_distinct_sign_vectors(std::span<const Polynomial> family,
                                        std::span<const Point> points) {
  std::unordered_set<SignVector, SignVectorHash> seen;
  for (const auto& p : points) seen.insert(sign_vector(family, p));
  return seen.size();
}

BigInt milnor_thom_bound(unsigned max_degree, std::size_t family_size, std::size_t num_vars) {
  if (num_vars < 2) throw ArgumentError("Milnor-Thom bound requires d >= 2");
  if (family_size < num_vars) throw ArgumentError("Milnor-Thom bound requires r >= d");
  if (max_degree < 1) throw ArgumentError("Milnor-Thom bound requires D >= 1");
  const Rational base(BigInt(50) * max_degree * BigInt(static_cast<unsigned long>(family_size)),
                      BigInt(static_cast<unsigned long>(num_vars)));
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.ceil().get_mpz_t(), num_vars);
  return result;
}

}  // namespace semiramsey
