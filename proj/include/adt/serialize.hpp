#pragma once

#include "json.hpp"

#include "adt/linear_code.hpp"
#include "adt/network.hpp"

namespace adt {

// Matrix wire format: {"rows": r, "cols": c, "data": ["0101...", ...]},
// one string per row, leftmost character = column 0.
void to_json(nlohmann::json& j, const Gf2Matrix& m);
void from_json(const nlohmann::json& j, Gf2Matrix& m);

// {"kind":"sym","m":..,"n":..,"L":..} or {"kind":"general","n11":..,...}.
void to_json(nlohmann::json& j, const NetParams& p);
void from_json(const nlohmann::json& j, NetParams& p);

void to_json(nlohmann::json& j, const LinearCode& c);
void from_json(const nlohmann::json& j, LinearCode& c);

}  // namespace adt
