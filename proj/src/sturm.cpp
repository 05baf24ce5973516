#include "semiramsey/sturm.hpp"

#include "semiramsey/error.hpp"

#include <array>

namespace semiramsey {

SturmSequence::SturmSequence(const Polynomial& g) {
  if (g.num_vars() != 1) throw ArgumentError("Sturm sequence requires a univariate polynomial");
  if (g.is_zero()) throw ArgumentError("Sturm sequence of the zero polynomial");
  polys_.push_back(g);
  Polynomial next = g.derivative();
  while (!next.is_zero()) {
    polys_.push_back(std::move(next));
    const auto& prev = polys_[polys_.size() - 2];
    next = -prev.divmod(polys_.back()).second;
  }
}

std::size_t SturmSequence::sign_changes(const Rational& xi) const {
  const std::array<Rational, 1> point{xi};
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : polys_) {
    const int s = p.sign_at(point);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw ArgumentError("root counting interval requires a < b");
  const std::array<Rational, 1> pa{a};
  const std::array<Rational, 1> pb{b};
  if (polys_.front().sign_at(pa) == 0 || polys_.front().sign_at(pb) == 0)
    throw PreconditionError("polynomial vanishes at an interval endpoint");
  return sign_changes(a) - sign_changes(b);
}

}  // namespace semiramsey
