#pragma once

#include <string>
#include <vector>

#include "phantom/profile.hpp"
#include "phantom/scanners.hpp"
#include "phantom/tokens.hpp"

namespace phantom {

struct ComponentScores {
  double s_v = 0.0;  // syntactic validity
  double s_c = 0.0;  // semantic coherence
  double s_n = 0.0;  // statistical normality
  double s_h = 0.0;  // human acceptance
};

struct BelievabilityWeights {
  double w1 = 0.20;
  double w2 = 0.30;
  double w3 = 0.20;
  double w4 = 0.30;
};
void validate(const BelievabilityWeights& weights);

struct BelievabilityResult {
  ComponentScores components;
  double b = 0.0;
  bool fooled = false;
};

// Constants of the rule-based evaluator. Only the direction of each rule is
// fixed; the magnitudes are calibration values.
struct SemanticParams {
  double base = 0.45;
  double per_org_hit = 0.10;
  double org_hit_cap = 4.0;
  double per_red_flag = 0.15;
};

struct StatisticalParams {
  double base = 0.5;
  double spread_gain = 0.8;
  double tercile_penalty = 0.3;
  double tercile_min_entropy = 3.0;
  double band_low = 3.0;
  double band_high = 5.5;
  double in_band = 0.7;
  double out_of_band = 0.4;
};

struct HumanParams {
  double semantic_weight = 0.55;
  double statistical_weight = 0.25;
  double syntactic_weight = 0.20;
  double threshold = 0.55;
};

struct EvaluatorConfig {
  BelievabilityWeights weights;
  SemanticParams semantic;
  StatisticalParams statistical;
  HumanParams human;
  double fooled_threshold = 0.65;
  RedFlagList flags;
};
void validate(const EvaluatorConfig& config);

struct SyntacticCheck {
  std::string name;
  bool passed = false;
};

// Per-type structural checklist.
std::vector<SyntacticCheck> syntactic_checks(const HoneyToken& token);
// Fraction of checks passed.
double score_syntactic(const HoneyToken& token);

double score_semantic(const HoneyToken& token, const OrgProfile& profile, const RedFlagList& flags = {},
                      const SemanticParams& params = {});

double score_statistical(const HoneyToken& token, const StatisticalParams& params = {});

// Weighted proxy for expert review; returns 1 or 0.
double human_raw(double s_v, double s_c, double s_n, const HumanParams& params = {});
double score_human(double s_v, double s_c, double s_n, const HumanParams& params = {});

// b = w . components, fooled = b >= fooled_threshold.
BelievabilityResult believability(const ComponentScores& components, const BelievabilityWeights& weights = {},
                                  double fooled_threshold = 0.65);

// All four components plus B for one token.
BelievabilityResult evaluate(const HoneyToken& token, const OrgProfile& profile, const EvaluatorConfig& config = {});

}  // namespace phantom
