#pragma once

#include "gkz/degeneration.hpp"

#include <json.hpp>

namespace gkz::io {

using Json = nlohmann::json;

Rat rat_from_json(const Json& j);
Json to_json(const Rat& q);
Vec vec_from_json(const Json& j);
Json to_json(const Vec& v);
Json to_json(const LexVec& v);
Json to_json(const LexValue& v);
Matrix matrix_from_json(const Json& j);
Json to_json(const Matrix& m);

/// {"dim": d, "points": [[...]], "cells": [...]}; cells are optional.
PointConfig config_from_json(const Json& j);
std::optional<MarkedSubdivision> subdivision_from_json(const Json& j);
Json to_json(const PointConfig& cfg, const MarkedSubdivision& s);
Json cells_to_json(const MarkedSubdivision& s);

/// {"Psi": [[row], ...]}, top row first.
WeightMatrix matrix_psi_from_json(const Json& j);
Json to_json(const WeightMatrix& psi);

/// [{"d": d, "eta": [...], "coeff": "p/q"}].
Expr expr_from_json(const Json& j, std::size_t dim);
Json to_json(const Expr& f);
Json to_json(const GradedPoint& u);

Json to_json(const PolyCone& c);
PolyCone cone_from_json(const Json& j);
Json to_json(const MuCone& m);
MuCone mucone_from_json(const Json& j);

Json to_json(const StanleyReisner& sr);

/// Parses text, mapping parse and type errors to SchemaError.
Json parse(const std::string& text);

}  // namespace gkz::io
