#pragma once

#include <nlohmann/json.hpp>

#include "phantom/config.hpp"

namespace phantom::detail {

using Json = nlohmann::ordered_json;

Json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const Json& document);

}  // namespace phantom::detail
