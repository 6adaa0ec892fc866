#pragma once

#include <json.hpp>

#include "pathtrans/catalog.hpp"

namespace pathtrans {

/// Parsers for the JSON descriptors documented under schemas/. All throw
/// ConfigError on malformed input. Matrix entries may be plain numbers or
/// [re, im] pairs.

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);
Eigen::VectorXd vector_from_json(const nlohmann::json& j);
Interval interval_from_json(const nlohmann::json& j);

Path path_from_json(const nlohmann::json& j);
Reparam reparam_from_json(const nlohmann::json& j);
ConnectionField connection_from_json(const nlohmann::json& j);
GaugePotential potential_from_json(const nlohmann::json& j);
IntegratorConfig integrator_from_json(const nlohmann::json& j);

/// Catalog entry by name; params may override the entry's defaults
/// (theta0, B, a, matrix).
CatalogEntry catalog_entry_from_json(const std::string& name,
                                     const nlohmann::json& params);

}  // namespace pathtrans
