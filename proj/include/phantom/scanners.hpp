#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "phantom/profile.hpp"
#include "phantom/tokens.hpp"

namespace phantom {

// Nine generic markers listed in secret-scanner rule sets. Matching is
// case-insensitive substring.
class RedFlagList {
 public:
  static constexpr std::size_t kSize = 9;

  RedFlagList();  // defaults
  explicit RedFlagList(std::vector<std::string> flags);  // throws ValidationError on "red_flags"

  const std::vector<std::string>& flags() const noexcept { return flags_; }
  // Distinct flags occurring in content.
  std::size_t count_hits(std::string_view content) const;
  bool any_hit(std::string_view content) const { return count_hits(content) > 0; }

  bool operator==(const RedFlagList&) const = default;

 private:
  std::vector<std::string> flags_;
};

// Distinct org_terms(profile) occurring in content (case-insensitive).
std::size_t count_org_hits(std::string_view content, const OrgProfile& profile);

struct ScannerWeights {
  double lambda1 = 0.40;  // regex
  double lambda2 = 0.30;  // entropy
  double lambda3 = 0.30;  // ML
};
void validate(const ScannerWeights& weights);

enum class EntropyRule {
  // Uniform entropy across values is anomalous (low spread -> detection).
  UniformIsAnomalous,
  // High spread is anomalous.
  SpreadIsAnomalous,
};

struct ScannerParams {
  double regex_saturation_hits = 3.0;
  double entropy_uniformity_weight = 0.7;
  double entropy_low_mean_weight = 0.3;
  double entropy_low_mean_threshold = 2.0;
  EntropyRule entropy_rule = EntropyRule::UniformIsAnomalous;
  double ml_base = 0.65;
  double ml_specificity_slope = 0.60;
  double ml_red_flag_bonus = 0.05;
  double ml_specificity_cap = 5.0;
};
void validate(const ScannerParams& params);

struct ScanResult {
  double pd1 = 0.0;
  double pd2 = 0.0;
  double pd3 = 0.0;
  double pd_combined = 0.0;
  double dr = 1.0;
};

struct CompositeParams {
  double lambda_exp = 0.6;
  double mu_exp = 0.4;
};
void validate(const CompositeParams& params);

struct IdealZoneParams {
  double tau_b = 0.70;
  double tau_dr = 0.70;
};
void validate(const IdealZoneParams& params);

// S1: min(1, distinct red-flag hits / saturation).
double scan_regex(const HoneyToken& token, const RedFlagList& flags = {}, const ScannerParams& params = {});
// S2: entropy-profile anomaly over the extracted credential values.
double scan_entropy(const HoneyToken& token, const ScannerParams& params = {});
// S3: context classifier, high when org-specific fingerprints are missing.
double scan_ml(const HoneyToken& token, const OrgProfile& profile, const RedFlagList& flags = {},
               const ScannerParams& params = {});

// pd_combined = sum lambda_j pd_j, dr = 1 - pd_combined.
// Throws ValidationError on bad weights and PreconditionError on pd outside [0, 1].
ScanResult combined_detection(const std::array<double, 3>& pd, const ScannerWeights& weights = {});

// B^lambda * DR^mu.
double composite_score(double b, double dr, const CompositeParams& params = {});
bool in_ideal_zone(double b, double dr, const IdealZoneParams& params = {});

struct ScanConfig {
  RedFlagList flags;
  ScannerParams params;
  ScannerWeights weights;
};

ScanResult scan(const HoneyToken& token, const OrgProfile& profile, const ScanConfig& config = {});

}  // namespace phantom
