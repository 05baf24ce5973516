#include "semiramsey/polynomial.hpp"

#include "semiramsey/error.hpp"

#include <algorithm>
#include <sstream>

namespace semiramsey {

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw ArgumentError("variable index out of range");
  Polynomial p(num_vars);
  Exponents e(num_vars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::univariate(std::span<const Rational> coeffs) {
  Polynomial p(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term(Exponents{static_cast<std::uint32_t>(i)}, coeffs[i]);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](std::uint32_t e) { return e == 0; }));
}

unsigned Polynomial::degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned total = 0;
    for (auto x : e) total += x;
    best = std::max(best, total);
  }
  return best;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max<unsigned>(best, e.at(var));
  return best;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != num_vars_) throw ArgumentError("exponent vector length does not match num_vars");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_)
    throw ArgumentError("evaluation point has " + std::to_string(point.size()) +
                        " coordinates, polynomial has " + std::to_string(num_vars_) + " variables");
  // Power tables avoid recomputing x_i^k for every term.
  std::vector<std::vector<Rational>> powers(num_vars_);
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      auto& table = powers[i];
      if (table.empty()) table.push_back(Rational(1));
      while (table.size() <= e[i]) table.push_back(table.back() * point[i]);
      term *= table[e[i]];
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::restrict(std::span<const std::pair<std::size_t, Rational>> fixed) const {
  std::vector<std::optional<Rational>> value(num_vars_);
  for (const auto& [idx, v] : fixed) {
    if (idx >= num_vars_) throw ArgumentError("restricted variable index out of range");
    value[idx] = v;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < num_vars_; ++i)
    if (!value[i]) keep.push_back(i);

  Polynomial out(keep.size());
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (value[i] && e[i] != 0) coeff *= pow(*value[i], e[i]);
    Exponents reduced(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) reduced[j] = e[keep[j]];
    out.add_term(reduced, coeff);
  }
  return out;
}

Polynomial Polynomial::remap(std::size_t new_num_vars, std::span<const std::size_t> var_map) const {
  if (var_map.size() != num_vars_) throw ArgumentError("variable map size mismatch");
  Polynomial out(new_num_vars);
  for (const auto& [e, c] : terms_) {
    Exponents mapped(new_num_vars, 0);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (var_map[i] >= new_num_vars) throw ArgumentError("variable map target out of range");
      mapped[var_map[i]] += e[i];
    }
    out.add_term(mapped, c);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw ArgumentError("adding polynomials over different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw ArgumentError("subtracting polynomials over different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw ArgumentError("multiplying polynomials over different variable counts");
  Polynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.num_vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.num_vars(), Rational(1));
  Polynomial base = p;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

void Polynomial::require_univariate(const char* op) const {
  if (num_vars_ != 1) throw ArgumentError(std::string(op) + " requires a univariate polynomial");
}

Rational Polynomial::leading_coefficient() const {
  require_univariate("leading_coefficient");
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

Polynomial Polynomial::derivative() const {
  require_univariate("derivative");
  Polynomial out(1);
  for (const auto& [e, c] : terms_)
    if (e[0] > 0) out.add_term(Exponents{e[0] - 1}, c * Rational(static_cast<long>(e[0])));
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  require_univariate("divmod");
  divisor.require_univariate("divmod");
  if (divisor.is_zero()) throw ArgumentError("polynomial division by zero");
  const unsigned dd = divisor.degree();
  const Rational lead = divisor.leading_coefficient();
  Polynomial quotient(1);
  Polynomial rem = *this;
  while (!rem.is_zero() && rem.degree() >= dd) {
    const unsigned shift = rem.degree() - dd;
    const Rational factor = rem.leading_coefficient() / lead;
    quotient.add_term(Exponents{shift}, factor);
    for (const auto& [e, c] : divisor.terms_) rem.add_term(Exponents{e[0] + shift}, -(c * factor));
  }
  return {std::move(quotient), std::move(rem)};
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second << ")";
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*x" << (i + 1);
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

}  // namespace semiramsey
