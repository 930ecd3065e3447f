#include "phantom/config.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "json_io.hpp"
#include "phantom/error.hpp"

namespace phantom {

namespace detail {

namespace {

std::string_view to_string(EntropyRule rule) {
  return rule == EntropyRule::UniformIsAnomalous ? "uniform_is_anomalous" : "spread_is_anomalous";
}

EntropyRule parse_entropy_rule(const std::string& s) {
  if (s == "uniform_is_anomalous") return EntropyRule::UniformIsAnomalous;
  if (s == "spread_is_anomalous") return EntropyRule::SpreadIsAnomalous;
  throw ValidationError("scanners.entropy_rule", "expected uniform_is_anomalous or spread_is_anomalous");
}

// Reads an object, rejecting keys not consumed by the caller.
class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ParseError(0, path_.empty() ? "<root>" : path_, "expected a JSON object");
  }
  ~Reader() noexcept(false) {
    if (std::uncaught_exceptions() > 0) return;
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.contains(key)) throw ValidationError(qualify(key), "unknown configuration key");
    }
  }

  template <typename T>
  void get(const char* key, T& out) {
    seen_.insert(key);
    if (!j_.contains(key)) return;
    try {
      out = j_.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError(0, qualify(key), "wrong value type");
    }
  }

  Reader child(const char* key) {
    seen_.insert(key);
    static const Json empty = Json::object();
    return Reader(j_.contains(key) ? j_.at(key) : empty, qualify(key));
  }

  bool has(const char* key) const { return j_.contains(key); }
  std::string qualify(std::string_view key) const { return path_.empty() ? std::string(key) : path_ + "." + std::string(key); }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string, std::less<>> seen_;
};

}  // namespace

Json config_to_json(const ExperimentConfig& c) {
  const auto& e = c.evaluator;
  const auto& s = c.scanning;
  return Json{
      {"seed", c.seed},
      {"replicates", c.replicates},
      {"threads", c.threads},
      {"comparisons", c.comparisons},
      {"red_flags", s.flags.flags()},
      {"generation", {{"aws_key_id_random_chars", c.generation.aws_key_id_random_chars}}},
      {"believability",
       {{"weights", {{"w1", e.weights.w1}, {"w2", e.weights.w2}, {"w3", e.weights.w3}, {"w4", e.weights.w4}}},
        {"fooled_threshold", e.fooled_threshold},
        {"semantic",
         {{"base", e.semantic.base},
          {"per_org_hit", e.semantic.per_org_hit},
          {"org_hit_cap", e.semantic.org_hit_cap},
          {"per_red_flag", e.semantic.per_red_flag}}},
        {"statistical",
         {{"base", e.statistical.base},
          {"spread_gain", e.statistical.spread_gain},
          {"tercile_penalty", e.statistical.tercile_penalty},
          {"tercile_min_entropy", e.statistical.tercile_min_entropy},
          {"band_low", e.statistical.band_low},
          {"band_high", e.statistical.band_high},
          {"in_band", e.statistical.in_band},
          {"out_of_band", e.statistical.out_of_band}}},
        {"human",
         {{"semantic_weight", e.human.semantic_weight},
          {"statistical_weight", e.human.statistical_weight},
          {"syntactic_weight", e.human.syntactic_weight},
          {"threshold", e.human.threshold}}}}},
      {"scanners",
       {{"weights", {{"lambda1", s.weights.lambda1}, {"lambda2", s.weights.lambda2}, {"lambda3", s.weights.lambda3}}},
        {"regex_saturation_hits", s.params.regex_saturation_hits},
        {"entropy_uniformity_weight", s.params.entropy_uniformity_weight},
        {"entropy_low_mean_weight", s.params.entropy_low_mean_weight},
        {"entropy_low_mean_threshold", s.params.entropy_low_mean_threshold},
        {"entropy_rule", to_string(s.params.entropy_rule)},
        {"ml_base", s.params.ml_base},
        {"ml_specificity_slope", s.params.ml_specificity_slope},
        {"ml_red_flag_bonus", s.params.ml_red_flag_bonus},
        {"ml_specificity_cap", s.params.ml_specificity_cap}}},
      {"composite", {{"lambda", c.composite.lambda_exp}, {"mu", c.composite.mu_exp}}},
      {"ideal_zone", {{"tau_b", c.ideal_zone.tau_b}, {"tau_dr", c.ideal_zone.tau_dr}}},
  };
}

ExperimentConfig config_from_json(const Json& document) {
  ExperimentConfig c;
  {
    Reader root(document, "");
    root.get("seed", c.seed);
    root.get("replicates", c.replicates);
    root.get("threads", c.threads);
    root.get("comparisons", c.comparisons);
    if (root.has("red_flags")) {
      std::vector<std::string> flags;
      root.get("red_flags", flags);
      c.scanning.flags = RedFlagList(std::move(flags));
      c.evaluator.flags = c.scanning.flags;
    }
    {
      auto g = root.child("generation");
      g.get("aws_key_id_random_chars", c.generation.aws_key_id_random_chars);
    }
    {
      auto b = root.child("believability");
      auto& e = c.evaluator;
      {
        auto w = b.child("weights");
        w.get("w1", e.weights.w1);
        w.get("w2", e.weights.w2);
        w.get("w3", e.weights.w3);
        w.get("w4", e.weights.w4);
      }
      b.get("fooled_threshold", e.fooled_threshold);
      {
        auto s = b.child("semantic");
        s.get("base", e.semantic.base);
        s.get("per_org_hit", e.semantic.per_org_hit);
        s.get("org_hit_cap", e.semantic.org_hit_cap);
        s.get("per_red_flag", e.semantic.per_red_flag);
      }
      {
        auto s = b.child("statistical");
        s.get("base", e.statistical.base);
        s.get("spread_gain", e.statistical.spread_gain);
        s.get("tercile_penalty", e.statistical.tercile_penalty);
        s.get("tercile_min_entropy", e.statistical.tercile_min_entropy);
        s.get("band_low", e.statistical.band_low);
        s.get("band_high", e.statistical.band_high);
        s.get("in_band", e.statistical.in_band);
        s.get("out_of_band", e.statistical.out_of_band);
      }
      {
        auto h = b.child("human");
        h.get("semantic_weight", e.human.semantic_weight);
        h.get("statistical_weight", e.human.statistical_weight);
        h.get("syntactic_weight", e.human.syntactic_weight);
        h.get("threshold", e.human.threshold);
      }
    }
    {
      auto s = root.child("scanners");
      auto& sc = c.scanning;
      {
        auto w = s.child("weights");
        w.get("lambda1", sc.weights.lambda1);
        w.get("lambda2", sc.weights.lambda2);
        w.get("lambda3", sc.weights.lambda3);
      }
      s.get("regex_saturation_hits", sc.params.regex_saturation_hits);
      s.get("entropy_uniformity_weight", sc.params.entropy_uniformity_weight);
      s.get("entropy_low_mean_weight", sc.params.entropy_low_mean_weight);
      s.get("entropy_low_mean_threshold", sc.params.entropy_low_mean_threshold);
      if (s.has("entropy_rule")) {
        std::string rule;
        s.get("entropy_rule", rule);
        sc.params.entropy_rule = parse_entropy_rule(rule);
      }
      s.get("ml_base", sc.params.ml_base);
      s.get("ml_specificity_slope", sc.params.ml_specificity_slope);
      s.get("ml_red_flag_bonus", sc.params.ml_red_flag_bonus);
      s.get("ml_specificity_cap", sc.params.ml_specificity_cap);
    }
    {
      auto k = root.child("composite");
      k.get("lambda", c.composite.lambda_exp);
      k.get("mu", c.composite.mu_exp);
    }
    {
      auto z = root.child("ideal_zone");
      z.get("tau_b", c.ideal_zone.tau_b);
      z.get("tau_dr", c.ideal_zone.tau_dr);
    }
  }
  validate(c);
  return c;
}

}  // namespace detail

void validate(const ExperimentConfig& c) {
  if (c.replicates == 0) throw ValidationError("replicates", "must be >= 1");
  if (c.threads == 0) throw ValidationError("threads", "must be >= 1");
  if (c.comparisons == 0) throw ValidationError("comparisons", "must be >= 1");
  validate(c.generation);
  validate(c.evaluator);
  validate(c.scanning.params);
  validate(c.scanning.weights);
  validate(c.composite);
  validate(c.ideal_zone);
}

ExperimentConfig parse_config(std::string_view document) {
  detail::Json j;
  try {
    j = detail::Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    const auto upto = document.substr(0, std::min<std::size_t>(e.byte, document.size()));
    const auto line = 1 + static_cast<std::size_t>(std::count(upto.begin(), upto.end(), '\n'));
    throw ParseError(line, "", "invalid JSON");
  }
  return detail::config_from_json(j);
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open config");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string render_config(const ExperimentConfig& config) { return detail::config_to_json(config).dump(2) + "\n"; }

}  // namespace phantom
