#pragma once

#include "semiramsey/combinatorics.hpp"
#include "semiramsey/constructions.hpp"
#include "semiramsey/geometry.hpp"
#include "semiramsey/homogeneous.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace semiramsey {

using Json = nlohmann::ordered_json;

// All parsers throw ArgumentError on malformed input. Indices in files are 1-based.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const Formula& f);
Formula formula_from_json(const Json& j);

Json to_json(const SemiAlgebraicRelation& r);
SemiAlgebraicRelation relation_from_json(const Json& j);

Json to_json(const OrderedPointSet& p);
OrderedPointSet points_from_json(const Json& j, std::size_t dim_hint = 0);

/// Points plus relation, with the optional fields of a construction bundle.
struct InstanceFile {
  OrderedPointSet points;
  SemiAlgebraicRelation relation;
  std::optional<Rational> epsilon;
  std::map<std::string, std::string> provenance;
  Json extra = Json::object();  // kind-specific fields, written after the core ones
};

Json to_json(const ConstructionInstance& inst);
Json to_json(const InstanceFile& inst);
InstanceFile instance_file_from_json(const Json& j);
/// Requires an epsilon.
ConstructionInstance instance_from_json(const Json& j);

Json to_json(const HomogeneousResult& r);
/// Reads subset, polarity and certified; stats are not restored.
HomogeneousResult result_from_json(const Json& j);

Json to_json(const Hypergraph3& h);
Hypergraph3 hypergraph_from_json(const Json& j);

Json to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const Json& j);
Json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

}  // namespace semiramsey
