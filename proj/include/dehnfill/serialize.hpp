#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dehnfill/bounds.hpp"
#include "dehnfill/constants.hpp"
#include "dehnfill/farey.hpp"
#include "dehnfill/manifold.hpp"
#include "dehnfill/oracle.hpp"

namespace dehnfill {

using Json = nlohmann::json;

// Numbers while they fit in 64 bits, decimal strings beyond.
Json to_json(const Integer& x);
Json to_json(const Slope& s);
Json to_json(const FareyTriangle& t);
Json to_json(const GeodesicStep& s);
Json to_json(const ManifoldData& m);
Json to_json(const std::vector<Violation>& v);
Json to_json(const NormResult& r);
Json to_json(const LayeringPlan& p);
Json to_json(const BoundsReport& r);
Json to_json(const FamilyReport& r);
Json to_json(const AdmissibleBound& b);
Json to_json(const Rational& r);  // "p/q", or the integer when q = 1
Json to_json(const BoundPair& b);
Json to_json(const InflationTerms& t);
Json to_json(const GapForm& g);
Json to_json(const ConstructionChain& c);
// n0 is written as a decimal string together with its digit count.
Json to_json(const ConstantGapParams& p);
Json to_json(const OracleCheck& c);

// All throw Error(parse) on malformed input.
Integer integer_from_json(const Json& j);
Slope slope_from_json(const Json& j);
FareyTriangle triangle_from_json(const Json& j);
ManifoldData manifold_from_json(const Json& j);
ManifoldData parse_manifold(std::string_view text);
ManifoldData load_manifold(const std::string& path);
std::vector<FareyTriangle> parse_path(std::string_view text);

// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace dehnfill
