#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phantom/believability.hpp"
#include "phantom/config.hpp"
#include "phantom/scanners.hpp"
#include "phantom/stats.hpp"
#include "phantom/tokens.hpp"

namespace phantom {

struct TokenRecord {
  HoneyToken token;
  std::string org;           // builtin profile key
  std::string content_hash;  // fnv1a-64 of content, 16 hex digits
  ComponentScores components;
  double b = 0.0;
  bool fooled = false;
  ScanResult scan;
  double h = 0.0;
  bool in_ideal_zone = false;
};

// Template group against contextual group for one metric.
struct MetricComparison {
  std::string metric;
  std::string group;  // type, org or scanner name; empty for the main table
  stats::SampleSummary template_summary;
  stats::SampleSummary contextual_summary;
  double delta = 0.0;  // contextual mean - template mean
  stats::TestResult test;
  // false when both groups are constant and equal, so no test is possible.
  bool defined = true;
};

struct RateComparison {
  std::string metric;
  std::size_t template_hits = 0;
  std::size_t template_n = 0;
  std::size_t contextual_hits = 0;
  std::size_t contextual_n = 0;
  double template_rate = 0.0;
  double contextual_rate = 0.0;
  double delta = 0.0;
  stats::ProportionTest test;
  double p_adjusted = 1.0;
  stats::Significance label = stats::Significance::NotSignificant;
};

struct ExperimentReport {
  std::uint64_t seed = kDefaultSeed;
  ExperimentConfig config;
  std::vector<TokenRecord> records;  // org, type, method, replicate order
  std::vector<MetricComparison> main;         // b, s_v, s_c, s_n, s_h, dr, h
  RateComparison fooled;
  RateComparison ideal_zone;
  std::vector<MetricComparison> per_type;     // b per token type
  std::vector<MetricComparison> per_org;      // b per organisation
  std::vector<MetricComparison> per_scanner;  // pd1, pd2, pd3

  const MetricComparison& metric(std::string_view name) const;  // main table lookup
};

// Score one token against its profile.
TokenRecord score_token(const HoneyToken& token, const OrgProfile& profile, std::string org,
                        const ExperimentConfig& config);

// All tokens for (seed, config), in report order.
std::vector<TokenRecord> generate_records(std::uint64_t seed, const ExperimentConfig& config);

// Group statistics over records. Deterministic sequential reduce.
ExperimentReport aggregate(std::vector<TokenRecord> records, std::uint64_t seed, const ExperimentConfig& config);

// Full experiment over the builtin organisations.
ExperimentReport run_experiment(std::uint64_t seed, const ExperimentConfig& config = {});

// Shared comparison helper, exposed for tests.
MetricComparison compare(std::string metric, std::string group, std::span<const double> template_values,
                         std::span<const double> contextual_values, std::size_t comparisons);

std::string content_hash(std::string_view content);

}  // namespace phantom
