#include "phantom/scanners.hpp"

#include <algorithm>
#include <cmath>

#include "phantom/error.hpp"
#include "phantom/generation.hpp"
#include "phantom/stats.hpp"
#include "phantom/text.hpp"

namespace phantom {

namespace {

constexpr double kSumTolerance = 1e-9;

void require_unit(std::string_view field, double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw ValidationError(std::string(field), "must lie in [0, 1]");
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("detection probabilities must lie in [0, 1]");
}

}  // namespace

RedFlagList::RedFlagList()
    : flags_{"example.com", "admin@example", "/example/repo", "changeme", "password123",
             "hunter2",     "test_secret",   "dummy",         "foobar"} {}

RedFlagList::RedFlagList(std::vector<std::string> flags) {
  if (flags.size() != kSize) throw ValidationError("red_flags", "exactly 9 entries required");
  for (auto& f : flags) {
    if (f.empty()) throw ValidationError("red_flags", "entries must be non-empty");
    f = text::to_lower(f);
  }
  flags_ = std::move(flags);
}

std::size_t RedFlagList::count_hits(std::string_view content) const {
  std::vector<std::string_view> seen;
  for (const auto& f : flags_) {
    if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
    if (text::contains_ci(content, f)) seen.push_back(f);
  }
  return seen.size();
}

std::size_t count_org_hits(std::string_view content, const OrgProfile& profile) {
  const auto terms = org_terms(profile);
  return static_cast<std::size_t>(
      std::count_if(terms.begin(), terms.end(), [&](const std::string& t) { return text::contains_ci(content, t); }));
}

void validate(const ScannerWeights& w) {
  for (auto [name, v] : {std::pair{"lambda1", w.lambda1}, {"lambda2", w.lambda2}, {"lambda3", w.lambda3}}) {
    if (!(v >= 0.0)) throw ValidationError(name, "scanner weight must be non-negative");
  }
  if (std::fabs(w.lambda1 + w.lambda2 + w.lambda3 - 1.0) > kSumTolerance) {
    throw ValidationError("scanner_weights", "lambda1 + lambda2 + lambda3 must equal 1");
  }
}

void validate(const ScannerParams& p) {
  if (!(p.regex_saturation_hits > 0.0)) throw ValidationError("regex_saturation_hits", "must be > 0");
  if (!(p.ml_specificity_cap > 0.0)) throw ValidationError("ml_specificity_cap", "must be > 0");
  require_unit("entropy_uniformity_weight", p.entropy_uniformity_weight);
  require_unit("entropy_low_mean_weight", p.entropy_low_mean_weight);
}

void validate(const CompositeParams& p) {
  if (!(p.lambda_exp > 0.0) || !(p.mu_exp > 0.0)) throw ValidationError("composite", "exponents must be > 0");
  if (std::fabs(p.lambda_exp + p.mu_exp - 1.0) > kSumTolerance) {
    throw ValidationError("composite", "lambda + mu must equal 1");
  }
}

void validate(const IdealZoneParams& p) {
  require_unit("tau_b", p.tau_b);
  require_unit("tau_dr", p.tau_dr);
}

double scan_regex(const HoneyToken& token, const RedFlagList& flags, const ScannerParams& params) {
  const auto hits = static_cast<double>(flags.count_hits(token.content));
  return std::min(1.0, hits / params.regex_saturation_hits);
}

double scan_entropy(const HoneyToken& token, const ScannerParams& params) {
  const auto values = text::extract_values(token.content);
  const auto profile = stats::entropy_profile(values);
  const double anomaly =
      params.entropy_rule == EntropyRule::UniformIsAnomalous ? 1.0 - profile.spread_norm : profile.spread_norm;
  const double low_mean = profile.mean_e < params.entropy_low_mean_threshold ? 1.0 : 0.0;
  return std::clamp(params.entropy_uniformity_weight * anomaly + params.entropy_low_mean_weight * low_mean, 0.0, 1.0);
}

double scan_ml(const HoneyToken& token, const OrgProfile& profile, const RedFlagList& flags,
               const ScannerParams& params) {
  const auto hits = static_cast<double>(count_org_hits(token.content, profile));
  const double specificity = std::min(hits, params.ml_specificity_cap) / params.ml_specificity_cap;
  const double flagged = flags.any_hit(token.content) ? 1.0 : 0.0;
  return std::clamp(params.ml_base - params.ml_specificity_slope * specificity + params.ml_red_flag_bonus * flagged,
                    0.0, 1.0);
}

ScanResult combined_detection(const std::array<double, 3>& pd, const ScannerWeights& weights) {
  validate(weights);
  for (double p : pd) require_probability(p);
  ScanResult r;
  r.pd1 = pd[0];
  r.pd2 = pd[1];
  r.pd3 = pd[2];
  r.pd_combined = std::clamp(weights.lambda1 * pd[0] + weights.lambda2 * pd[1] + weights.lambda3 * pd[2], 0.0, 1.0);
  r.dr = 1.0 - r.pd_combined;
  return r;
}

double composite_score(double b, double dr, const CompositeParams& params) {
  validate(params);
  if (!(b >= 0.0 && b <= 1.0) || !(dr >= 0.0 && dr <= 1.0)) {
    throw PreconditionError("composite_score requires b and dr in [0, 1]");
  }
  return std::pow(b, params.lambda_exp) * std::pow(dr, params.mu_exp);
}

bool in_ideal_zone(double b, double dr, const IdealZoneParams& params) {
  return b >= params.tau_b && dr >= params.tau_dr;
}

ScanResult scan(const HoneyToken& token, const OrgProfile& profile, const ScanConfig& config) {
  validate(config.params);
  return combined_detection({scan_regex(token, config.flags, config.params), scan_entropy(token, config.params),
                             scan_ml(token, profile, config.flags, config.params)},
                            config.weights);
}

}  // namespace phantom
