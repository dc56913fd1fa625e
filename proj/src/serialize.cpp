#include "dehnfill/serialize.hpp"

#include <fstream>
#include <sstream>

#include "dehnfill/error.hpp"

namespace dehnfill {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::parse, what); }

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t int_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::optional<std::string> optional_string(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) bad(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

SurfaceRecord record_from_json(const Json& j) {
  if (!j.is_object()) bad("surface record must be an object");
  SurfaceRecord r;
  if (const Json& s = field(j, "slope"); !s.is_null()) r.slope = slope_from_json(s);
  r.euler = int_field(j, "euler");
  const Json& o = field(j, "orientable");
  if (!o.is_boolean()) bad("field 'orientable' must be a boolean");
  r.orientable = o.get<bool>();
  if (auto it = j.find("pattern"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 3) bad("pattern must be an array of three integers");
    r.pattern = Pattern{integer_from_json((*it)[0]), integer_from_json((*it)[1]),
                        integer_from_json((*it)[2])};
  }
  return r;
}

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Integer& x) {
  if (auto small = x.to_int64()) return *small;
  return x.str();
}

Json to_json(const Slope& s) { return s.str(); }

Json to_json(const FareyTriangle& t) {
  Json out = Json::array();
  for (const auto& v : t.vertices()) out.push_back(v.str());
  return out;
}

Json to_json(const GeodesicStep& s) {
  return {{"from", to_json(s.from)}, {"layered_edge", to_json(s.layered_edge)}, {"to", to_json(s.to)}};
}

Json to_json(const ManifoldData& m) {
  Json surfaces = Json::array();
  for (const auto& r : m.surfaces) {
    Json pattern = nullptr;
    if (r.pattern) {
      pattern = Json::array({to_json((*r.pattern)[0]), to_json((*r.pattern)[1]), to_json((*r.pattern)[2])});
    }
    surfaces.push_back({{"slope", r.slope ? to_json(*r.slope) : Json(nullptr)},
                        {"euler", r.euler},
                        {"orientable", r.orientable},
                        {"pattern", pattern}});
  }
  Json out = {{"name", m.name},
              {"size", m.size},
              {"even_class", Json::array({m.even_class.rp(), m.even_class.rq()})},
              {"base_triangle", Json::array({m.base_order[0].str(), m.base_order[1].str(),
                                             m.base_order[2].str()})},
              {"surfaces", surfaces}};
  if (m.isosig) out["isosig"] = *m.isosig;
  if (m.notes) out["notes"] = *m.notes;
  return out;
}

Json to_json(const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    out.push_back({{"record", x.record ? Json(*x.record) : Json(nullptr)}, {"message", x.message}});
  }
  return out;
}

Json to_json(const NormResult& r) {
  return {{"slope", to_json(r.slope)},
          {"norm", r.norm},
          {"witness", r.witness},
          {"dual_norm", optional_int(r.dual_norm)}};
}

Json to_json(const LayeringPlan& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps) steps.push_back(to_json(s));
  return {{"steps", steps},
          {"fold_triangle", to_json(p.fold_triangle)},
          {"filled_slope", to_json(p.filled_slope)},
          {"tetrahedra", p.tetrahedra}};
}

Json to_json(const BoundsReport& r) {
  return {{"slope", to_json(r.slope)}, {"norm", r.norm},   {"witness", r.witness},
          {"lower", r.lower},          {"upper", r.upper}, {"gap", r.gap},
          {"labeled_size", r.labeled_size}, {"caveat", r.caveat}};
}

Json to_json(const FamilyReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json row = to_json(e.bounds);
    row["k"] = e.k;
    row["seed"] = e.seed;
    row["generic_upper"] = optional_int(e.generic_upper);
    row["closed_form_mismatch"] = e.closed_form_mismatch;
    entries.push_back(std::move(row));
  }
  return {{"alpha", to_json(r.alpha)},
          {"alpha_rep", r.alpha_rep.str()},
          {"beta", r.beta.str()},
          {"start_triangle", to_json(r.start)},
          {"start_norm", r.start_norm},
          {"start_size", r.start_size},
          {"premise_holds", r.premise_holds},
          {"closed_form_gap", optional_int(r.closed_form_gap)},
          {"entries", entries}};
}

Json to_json(const AdmissibleBound& b) {
  return {{"bound", b.bound}, {"pivot_index", b.pivot_index}, {"admissible_start", b.admissible_start}};
}

Json to_json(const Rational& r) {
  if (denominator(r) == 1) return to_json(Integer(BigInt(numerator(r))));
  return numerator(r).str() + "/" + denominator(r).str();
}

Json to_json(const BoundPair& b) {
  return {{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}, {"gap", to_json(b.gap())}};
}

Json to_json(const InflationTerms& t) {
  return {{"ideal_size", to_json(t.ideal_size)}, {"edges", to_json(t.edges)}, {"flips", to_json(t.flips)},
          {"extra", to_json(t.extra)},           {"total", to_json(t.total)}};
}

Json to_json(const GapForm& g) {
  return {{"size", to_json(g.size)},
          {"exact", to_json(g.exact)},
          {"published_numerator", to_json(g.published_numerator)},
          {"published_denominator", to_json(g.published_denominator)},
          {"published", to_json(g.published)}};
}

Json to_json(const ConstructionChain& c) {
  return {{"prisms", to_json(c.prisms)},
          {"prism_tetrahedra", to_json(c.prism_tetrahedra)},
          {"prism_boundary_triangles", to_json(c.prism_boundary_triangles)},
          {"sphere_tetrahedra", to_json(c.sphere_tetrahedra)},
          {"exterior_tetrahedra", to_json(c.exterior_tetrahedra)},
          {"boundary_triangles", to_json(c.boundary_triangles)},
          {"boundary_edges", to_json(c.boundary_edges)},
          {"boundary_vertices", to_json(c.boundary_vertices)},
          {"reduction_tetrahedra", to_json(c.reduction_tetrahedra)},
          {"total_tetrahedra", to_json(c.total_tetrahedra)}};
}

Json to_json(const ConstantGapParams& p) {
  return {{"n", p.n},
          {"variant", to_string(p.variant)},
          {"m0_statement", to_json(p.m0_statement)},
          {"m0_proof", to_json(p.m0_proof)},
          {"m0", to_json(p.m0)},
          {"n0", p.n0.str()},
          {"n0_digits", decimal_digits(p.n0)},
          {"n0_digits_estimate", estimated_n0_digits(p.m0)},
          {"gap", p.gap().str()},
          {"chain", to_json(p.chain)}};
}

Json to_json(const OracleCheck& c) {
  Json j{{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}};
  if (!c.ok()) j["first_failure"] = c.first_failure;
  return j;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Integer::parse(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      bad("malformed integer '" + j.get<std::string>() + "'");
    }
  }
  bad("expected an integer");
}

Slope slope_from_json(const Json& j) {
  if (!j.is_string()) bad("slope must be a string \"p/q\"");
  return Slope::parse(j.get<std::string>());
}

FareyTriangle triangle_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) bad("triangle must be an array of three slopes");
  return FareyTriangle(slope_from_json(j[0]), slope_from_json(j[1]), slope_from_json(j[2]));
}

ManifoldData manifold_from_json(const Json& j) {
  if (!j.is_object()) bad("dataset must be an object");
  ManifoldData m;
  const Json& name = field(j, "name");
  if (!name.is_string()) bad("field 'name' must be a string");
  m.name = name.get<std::string>();
  m.size = int_field(j, "size");
  const Json& ec = field(j, "even_class");
  if (!ec.is_array() || ec.size() != 2 || !ec[0].is_number_integer() || !ec[1].is_number_integer()) {
    bad("even_class must be an array of two integers");
  }
  m.even_class = EvenClass(ec[0].get<int>(), ec[1].get<int>());
  const Json& bt = field(j, "base_triangle");
  if (!bt.is_array() || bt.size() != 3) bad("base_triangle must be an array of three slopes");
  m.base_order = {slope_from_json(bt[0]), slope_from_json(bt[1]), slope_from_json(bt[2])};
  const Json& surfaces = field(j, "surfaces");
  if (!surfaces.is_array()) bad("surfaces must be an array");
  for (const auto& s : surfaces) m.surfaces.push_back(record_from_json(s));
  m.isosig = optional_string(j, "isosig");
  m.notes = optional_string(j, "notes");
  return m;
}

ManifoldData parse_manifold(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  return manifold_from_json(j);
}

ManifoldData load_manifold(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifold(buf.str());
}

std::vector<FareyTriangle> parse_path(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) bad("path must be an array of triangles");
  std::vector<FareyTriangle> out;
  for (const auto& t : j) out.push_back(triangle_from_json(t));
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dehnfill
