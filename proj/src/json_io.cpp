#include "gkz/json_io.hpp"

#include "gkz/errors.hpp"

namespace gkz::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

long long_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<long>();
}

IndexSet indices_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("index list must be an array");
  IndexSet out;
  for (const auto& x : j) {
    long v = long_from_json(x, "index");
    if (v < 0) throw SchemaError("negative index");
    out.push_back(static_cast<Index>(v));
  }
  return out;
}

}  // namespace

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw SchemaError("rational must be a string \"p/q\" or an integer");
}

Json to_json(const Rat& q) { return to_string(q); }

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("vector must be an array");
  Vec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const LexVec& v) { return to_json(v.coords()); }

Json to_json(const LexValue& v) { return v.is_infinite() ? Json("inf") : to_json(v.vec()); }

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("matrix must be an array of rows");
  Matrix m;
  for (const auto& r : j) m.push_back(vec_from_json(r));
  return m;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (const auto& r : m) a.push_back(to_json(r));
  return a;
}

PointConfig config_from_json(const Json& j) {
  long dim = long_from_json(field(j, "dim"), "dim");
  if (dim <= 0) throw SchemaError("dim must be positive");
  Matrix pts = matrix_from_json(field(j, "points"));
  return PointConfig(static_cast<std::size_t>(dim), pts);
}

std::optional<MarkedSubdivision> subdivision_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cells")) return std::nullopt;
  const Json& cells = j.at("cells");
  if (!cells.is_array()) throw SchemaError("cells must be an array");
  std::vector<MarkedCell> out;
  for (const auto& c : cells) out.push_back({indices_from_json(field(c, "vertices")), indices_from_json(field(c, "marking"))});
  return MarkedSubdivision(out);
}

Json cells_to_json(const MarkedSubdivision& s) {
  Json cells = Json::array();
  for (const auto& c : s.cells()) cells.push_back({{"vertices", c.vertices}, {"marking", c.marking}});
  return cells;
}

Json to_json(const PointConfig& cfg, const MarkedSubdivision& s) {
  return {{"dim", cfg.dim()}, {"points", to_json(cfg.points())}, {"cells", cells_to_json(s)}};
}

WeightMatrix matrix_psi_from_json(const Json& j) {
  Matrix rows = matrix_from_json(field(j, "Psi"));
  if (rows.empty()) throw SchemaError("Psi must have at least one row");
  return WeightMatrix::from_rows(rows);
}

Json to_json(const WeightMatrix& psi) { return {{"Psi", to_json(psi.row_list())}}; }

Expr expr_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw SchemaError("expression must be an array of terms");
  Expr f;
  for (const auto& t : j) {
    GradedPoint u;
    u.d = long_from_json(field(t, "d"), "d");
    const Json& eta = field(t, "eta");
    if (!eta.is_array()) throw SchemaError("eta must be an array");
    for (const auto& e : eta) u.eta.push_back(long_from_json(e, "eta entry"));
    if (u.eta.size() != dim)
      throw DimensionMismatch("term has eta of length " + std::to_string(u.eta.size()) + ", expected " +
                              std::to_string(dim));
    Rat c = t.contains("coeff") ? rat_from_json(t.at("coeff")) : Rat(1);
    f = expr_add(f, monomial(u, c));
  }
  return f;
}

Json to_json(const GradedPoint& u) { return {{"d", u.d}, {"eta", u.eta}}; }

Json to_json(const Expr& f) {
  Json a = Json::array();
  for (const auto& [u, c] : f) a.push_back({{"d", u.d}, {"eta", u.eta}, {"coeff", to_string(c)}});
  return a;
}

Json to_json(const PolyCone& c) { return {{"generators", to_json(c.generators())}, {"normals", to_json(c.normals())}}; }

PolyCone cone_from_json(const Json& j) {
  if (j.contains("generators")) {
    Matrix g = matrix_from_json(j.at("generators"));
    if (g.empty()) {
      long dim = long_from_json(field(j, "dim"), "dim");
      return PolyCone::zero(static_cast<std::size_t>(dim));
    }
    return PolyCone::from_generators(g[0].size(), g);
  }
  Matrix n = matrix_from_json(field(j, "normals"));
  if (n.empty()) {
    long dim = long_from_json(field(j, "dim"), "dim");
    return PolyCone::full(static_cast<std::size_t>(dim));
  }
  return PolyCone::from_normals(n[0].size(), n);
}

Json to_json(const MuCone& m) { return {{"N", m.N}, {"copolar_generators", to_json(m.generators())}}; }

MuCone mucone_from_json(const Json& j) {
  long n = long_from_json(field(j, "N"), "N");
  if (n <= 0) throw SchemaError("N must be positive");
  Matrix g = matrix_from_json(field(j, "copolar_generators"));
  if (g.empty()) throw SchemaError("copolar_generators must be nonempty (use dim for the zero cone)");
  return MuCone{static_cast<std::size_t>(n), PolyCone::from_generators(g[0].size(), g)};
}

Json to_json(const StanleyReisner& sr) {
  return {{"variables", sr.variables}, {"nonfaces", sr.nonfaces}, {"nilpotent", sr.nilpotent}};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace gkz::io
