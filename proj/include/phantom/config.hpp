#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "phantom/believability.hpp"
#include "phantom/generation.hpp"
#include "phantom/scanners.hpp"

namespace phantom {

inline constexpr std::uint64_t kDefaultSeed = 42;

// Everything that parameterises an experiment run. Every field has a default;
// a config document only needs the keys it overrides.
struct ExperimentConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t replicates = 1;   // instances per (org, type, method) cell
  std::size_t threads = 1;      // generation/scoring fan-out
  std::size_t comparisons = 8;  // Bonferroni m for the main table
  GenerationOptions generation;
  EvaluatorConfig evaluator;
  ScanConfig scanning;
  CompositeParams composite;
  IdealZoneParams ideal_zone;
};

void validate(const ExperimentConfig& config);

// JSON config document. Unknown keys are rejected. Throws ParseError on
// malformed JSON or wrong value types, ValidationError on invariant violations.
ExperimentConfig parse_config(std::string_view document);
ExperimentConfig load_config_file(const std::filesystem::path& path);
// Full config with every key, pretty-printed.
std::string render_config(const ExperimentConfig& config);

}  // namespace phantom
