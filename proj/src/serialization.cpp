#include "semiramsey/serialization.hpp"

#include "semiramsey/error.hpp"

namespace semiramsey {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ArgumentError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ArgumentError(std::string("malformed ") + what);
  }
}

std::size_t one_based(const Json& j, std::size_t limit, const char* what) {
  const auto v = as<long long>(j, what);
  if (v < 1 || static_cast<unsigned long long>(v) > limit) throw ArgumentError(std::string(what) + " out of range");
  return static_cast<std::size_t>(v - 1);
}

Comparison comparison_from(const std::string& s) {
  if (s == "ge") return Comparison::Ge;
  if (s == "gt") return Comparison::Gt;
  if (s == "eq") return Comparison::Eq;
  throw ArgumentError("unknown comparison \"" + s + "\"");
}

const char* comparison_name(Comparison c) {
  switch (c) {
    case Comparison::Ge: return "ge";
    case Comparison::Gt: return "gt";
    case Comparison::Eq: return "eq";
  }
  return "ge";
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ArgumentError("rational must be a \"num/den\" string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"c", to_json(c)}, {"e", e}});
  return {{"vars", p.num_vars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j) {
  const auto vars = as<std::size_t>(field(j, "vars"), "polynomial vars");
  Polynomial p(vars);
  for (const auto& t : field(j, "terms")) {
    auto e = as<Exponents>(field(t, "e"), "exponent vector");
    if (e.size() != vars) throw ArgumentError("exponent vector length does not match vars");
    p.add_term(e, rational_from_json(field(t, "c")));
  }
  return p;
}

Json to_json(const Formula& f) {
  switch (f.op()) {
    case Formula::Op::Leaf:
      return {{"op", "atom"}, {"poly", f.atom().poly_index}, {"cmp", comparison_name(f.atom().cmp)}};
    case Formula::Op::Not:
      return {{"op", "not"}, {"arg", to_json(f.children().front())}};
    case Formula::Op::And:
    case Formula::Op::Or: {
      Json args = Json::array();
      for (const auto& c : f.children()) args.push_back(to_json(c));
      return {{"op", f.op() == Formula::Op::And ? "and" : "or"}, {"args", std::move(args)}};
    }
  }
  return {};
}

Formula formula_from_json(const Json& j) {
  const auto op = as<std::string>(field(j, "op"), "formula op");
  if (op == "atom")
    return Formula::leaf(as<std::size_t>(field(j, "poly"), "atom poly"),
                         comparison_from(as<std::string>(field(j, "cmp"), "atom cmp")));
  if (op == "not") return Formula::negate(formula_from_json(field(j, "arg")));
  if (op == "and" || op == "or") {
    std::vector<Formula> args;
    for (const auto& c : field(j, "args")) args.push_back(formula_from_json(c));
    return op == "and" ? Formula::all_of(std::move(args)) : Formula::any_of(std::move(args));
  }
  throw ArgumentError("unknown formula op \"" + op + "\"");
}

Json to_json(const SemiAlgebraicRelation& r) {
  Json polys = Json::array();
  for (const auto& p : r.polys()) polys.push_back(to_json(p));
  return {{"arity", r.arity()}, {"dim", r.point_dim()}, {"polys", std::move(polys)}, {"formula", to_json(r.formula())}};
}

SemiAlgebraicRelation relation_from_json(const Json& j) {
  std::vector<Polynomial> polys;
  for (const auto& p : field(j, "polys")) polys.push_back(polynomial_from_json(p));
  return SemiAlgebraicRelation(as<std::size_t>(field(j, "arity"), "arity"), as<std::size_t>(field(j, "dim"), "dim"),
                               std::move(polys), formula_from_json(field(j, "formula")));
}

Json to_json(const OrderedPointSet& p) {
  Json out = Json::array();
  for (const auto& pt : p.points()) {
    Json row = Json::array();
    for (const auto& c : pt) row.push_back(to_json(c));
    out.push_back(std::move(row));
  }
  return out;
}

OrderedPointSet points_from_json(const Json& j, std::size_t dim_hint) {
  if (!j.is_array()) throw ArgumentError("points must be a list");
  std::vector<Point> pts;
  for (const auto& row : j) {
    if (!row.is_array()) throw ArgumentError("point must be a list of coordinates");
    Point p;
    for (const auto& c : row) p.push_back(rational_from_json(c));
    pts.push_back(std::move(p));
  }
  const std::size_t dim = pts.empty() ? dim_hint : pts.front().size();
  return OrderedPointSet(dim, std::move(pts));
}

Json to_json(const InstanceFile& inst) {
  Json out = {{"points", to_json(inst.points)}, {"relation", to_json(inst.relation)}};
  if (inst.epsilon) out["epsilon"] = to_json(*inst.epsilon);
  out["provenance"] = inst.provenance;
  for (const auto& [k, v] : inst.extra.items()) out[k] = v;
  return out;
}

Json to_json(const ConstructionInstance& inst) {
  return to_json(InstanceFile{inst.points, inst.relation, inst.epsilon, inst.provenance});
}

InstanceFile instance_file_from_json(const Json& j) {
  InstanceFile out;
  out.relation = relation_from_json(field(j, "relation"));
  out.points = points_from_json(field(j, "points"), out.relation.point_dim());
  if (out.points.dim() != out.relation.point_dim())
    throw ArgumentError("point dimension does not match relation dimension");
  if (j.contains("epsilon")) out.epsilon = rational_from_json(j.at("epsilon"));
  if (j.contains("provenance")) out.provenance = as<std::map<std::string, std::string>>(j.at("provenance"), "provenance");
  for (const auto& [k, v] : j.items())
    if (k != "points" && k != "relation" && k != "epsilon" && k != "provenance") out.extra[k] = v;
  return out;
}

ConstructionInstance instance_from_json(const Json& j) {
  auto f = instance_file_from_json(j);
  if (!f.epsilon) throw ArgumentError("instance has no epsilon");
  return ConstructionInstance(std::move(f.points), std::move(f.relation), *f.epsilon, std::move(f.provenance));
}

Json to_json(const HomogeneousResult& r) {
  Json subset = Json::array();
  for (auto i : r.subset) subset.push_back(i + 1);
  Json classes = Json::array();
  for (const auto& level : r.stats.levels) classes.push_back(level.class_counts);
  return {{"subset", std::move(subset)},
          {"polarity", to_string(r.polarity)},
          {"certified", r.certified},
          {"maximal", r.maximal},
          {"stats", {{"nodes", r.stats.nodes}, {"classes_per_level", std::move(classes)}}}};
}

HomogeneousResult result_from_json(const Json& j) {
  HomogeneousResult r;
  for (const auto& v : field(j, "subset")) r.subset.push_back(one_based(v, SIZE_MAX, "subset index"));
  const auto pol = as<std::string>(field(j, "polarity"), "polarity");
  if (pol != "in" && pol != "out") throw ArgumentError("polarity must be \"in\" or \"out\"");
  r.polarity = pol == "in" ? Polarity::AllIn : Polarity::AllOut;
  r.certified = as<bool>(field(j, "certified"), "certified");
  if (j.contains("maximal")) r.maximal = as<bool>(j.at("maximal"), "maximal");
  return r;
}

Json to_json(const Hypergraph3& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back({e[0] + 1, e[1] + 1, e[2] + 1});
  return {{"n", h.size()}, {"edges", std::move(edges)}};
}

Hypergraph3 hypergraph_from_json(const Json& j) {
  const auto n = as<std::size_t>(field(j, "n"), "vertex count");
  std::vector<Triple> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 3) throw ArgumentError("hyperedge must have three vertices");
    edges.push_back({one_based(e[0], n, "vertex"), one_based(e[1], n, "vertex"), one_based(e[2], n, "vertex")});
  }
  return Hypergraph3(n, std::move(edges));
}

Json to_json(const Hyperplane& h) {
  Json a = Json::array();
  for (const auto& c : h.coeffs) a.push_back(to_json(c));
  return {{"a", std::move(a)}, {"b", to_json(h.offset)}};
}

Hyperplane hyperplane_from_json(const Json& j) {
  std::vector<Rational> a;
  const auto& arr = field(j, "a");
  if (!arr.is_array()) throw ArgumentError("hyperplane \"a\" must be a list");
  for (const auto& c : arr) a.push_back(rational_from_json(c));
  return Hyperplane(std::move(a), rational_from_json(field(j, "b")));
}

Json to_json(const Arrangement& a) {
  Json out = Json::array();
  for (const auto& h : a.hyperplanes) out.push_back(to_json(h));
  return out;
}

Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ArgumentError("arrangement must be a non-empty list of hyperplanes");
  std::vector<Hyperplane> hs;
  for (const auto& h : j) hs.push_back(hyperplane_from_json(h));
  const std::size_t d = hs.front().dim();
  return Arrangement(d, std::move(hs));
}

}  // namespace semiramsey
