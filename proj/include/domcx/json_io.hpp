#pragma once

#include <string>

#include "json.hpp"

#include "domcx/builders.hpp"

namespace domcx {

/// Bundle file format "domcx.bundle/1": the complex as
/// {"vertices":[{"id","label",...}],"edges":[[a,b],...]} plus surface,
/// weight, kind, triangulation, and for D the biperipheral edges and
/// projection. Byte-stable for identical inputs.
nlohmann::json bundle_to_json(const ComplexBundle& bundle);
ComplexBundle bundle_from_json(const nlohmann::json& j);

nlohmann::json triangulation_to_json(const Triangulation& tr);
nlohmann::json exchange_set_to_json(const ExchangeSet& e);
nlohmann::json perm_group_to_json(const PermGroup& g);

std::string bundle_to_dot(const ComplexBundle& bundle);

}  // namespace domcx
