#include "phantom/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <exception>
#include <thread>
#include <tuple>

#include "phantom/error.hpp"
#include "phantom/generation.hpp"
#include "phantom/profile.hpp"
#include "phantom/rng.hpp"

namespace phantom {

namespace {

constexpr std::size_t kPerScannerComparisons = 3;

struct Cell {
  std::size_t org_index;
  TokenType type;
  GenerationMethod method;
  std::size_t replicate;
};

std::vector<double> collect(const std::vector<TokenRecord>& records, GenerationMethod method,
                            const std::function<bool(const TokenRecord&)>& keep,
                            const std::function<double(const TokenRecord&)>& value) {
  std::vector<double> out;
  for (const auto& r : records) {
    if (r.token.method == method && keep(r)) out.push_back(value(r));
  }
  return out;
}

RateComparison compare_rate(std::string metric, const std::vector<TokenRecord>& records,
                            const std::function<bool(const TokenRecord&)>& hit, std::size_t comparisons) {
  RateComparison out;
  out.metric = std::move(metric);
  for (const auto& r : records) {
    const bool h = hit(r);
    if (r.token.method == GenerationMethod::Template) {
      ++out.template_n;
      out.template_hits += h ? 1 : 0;
    } else {
      ++out.contextual_n;
      out.contextual_hits += h ? 1 : 0;
    }
  }
  if (out.template_n == 0 || out.contextual_n == 0) throw PreconditionError("rate comparison needs both methods");
  out.template_rate = static_cast<double>(out.template_hits) / static_cast<double>(out.template_n);
  out.contextual_rate = static_cast<double>(out.contextual_hits) / static_cast<double>(out.contextual_n);
  out.delta = out.contextual_rate - out.template_rate;
  out.test = stats::two_proportion_z(out.template_hits, out.template_n, out.contextual_hits, out.contextual_n);
  out.p_adjusted = stats::bonferroni(out.test.p_raw, comparisons);
  out.label = stats::significance_label(out.p_adjusted);
  return out;
}

const auto kAll = [](const TokenRecord&) { return true; };

}  // namespace

std::string content_hash(std::string_view content) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(content)));
  return buf;
}

const MetricComparison& ExperimentReport::metric(std::string_view name) const {
  for (const auto& m : main) {
    if (m.metric == name) return m;
  }
  throw PreconditionError("no metric " + std::string(name));
}

MetricComparison compare(std::string metric, std::string group, std::span<const double> template_values,
                         std::span<const double> contextual_values, std::size_t comparisons) {
  MetricComparison out;
  out.metric = std::move(metric);
  out.group = std::move(group);
  out.template_summary = stats::summarize(template_values);
  out.contextual_summary = stats::summarize(contextual_values);
  out.delta = out.contextual_summary.mean - out.template_summary.mean;
  try {
    out.test = stats::welch_t(out.template_summary, out.contextual_summary);
  } catch (const UndefinedStatistic&) {
    out.defined = false;
    out.test = stats::TestResult{};
    return out;
  }
  try {
    out.test.cohens_d = stats::cohens_d(out.template_summary, out.contextual_summary);
  } catch (const UndefinedStatistic&) {
    out.test.cohens_d = std::copysign(std::numeric_limits<double>::infinity(), out.delta);
  }
  out.test.p_adjusted = stats::bonferroni(out.test.p_raw, comparisons);
  out.test.label = stats::significance_label(out.test.p_adjusted);
  return out;
}

TokenRecord score_token(const HoneyToken& token, const OrgProfile& profile, std::string org,
                        const ExperimentConfig& config) {
  TokenRecord r;
  r.token = token;
  r.org = std::move(org);
  r.content_hash = content_hash(token.content);
  const auto belief = evaluate(token, profile, config.evaluator);
  r.components = belief.components;
  r.b = belief.b;
  r.fooled = belief.fooled;
  r.scan = scan(token, profile, config.scanning);
  r.h = composite_score(r.b, r.scan.dr, config.composite);
  r.in_ideal_zone = in_ideal_zone(r.b, r.scan.dr, config.ideal_zone);
  return r;
}

std::vector<TokenRecord> generate_records(std::uint64_t seed, const ExperimentConfig& config) {
  validate(config);
  const auto& orgs = builtin_entries();
  std::vector<Cell> cells;
  for (std::size_t o = 0; o < orgs.size(); ++o) {
    for (auto type : kAllTokenTypes) {
      for (auto method : kAllMethods) {
        for (std::size_t rep = 0; rep < config.replicates; ++rep) cells.push_back({o, type, method, rep});
      }
    }
  }

  std::vector<TokenRecord> records(cells.size());
  auto work = [&](std::size_t i) {
    const auto& cell = cells[i];
    const auto& entry = orgs[cell.org_index];
    auto token = generate_seeded(entry.profile, cell.type, cell.method, seed, config.generation, cell.replicate);
    records[i] = score_token(token, entry.profile, std::string(entry.key), config);
  };

  const std::size_t n_threads = std::min(config.threads, cells.size());
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) work(i);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n_threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells.size() && !failed; i = next++) {
        try {
          work(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

ExperimentReport aggregate(std::vector<TokenRecord> records, std::uint64_t seed, const ExperimentConfig& config) {
  ExperimentReport rep;
  rep.seed = seed;
  rep.config = config;
  rep.records = std::move(records);
  const auto& rs = rep.records;
  const auto m = config.comparisons;

  using Getter = std::function<double(const TokenRecord&)>;
  const std::vector<std::pair<std::string, Getter>> metrics = {
      {"b", [](const TokenRecord& r) { return r.b; }},
      {"s_v", [](const TokenRecord& r) { return r.components.s_v; }},
      {"s_c", [](const TokenRecord& r) { return r.components.s_c; }},
      {"s_n", [](const TokenRecord& r) { return r.components.s_n; }},
      {"s_h", [](const TokenRecord& r) { return r.components.s_h; }},
      {"dr", [](const TokenRecord& r) { return r.scan.dr; }},
      {"h", [](const TokenRecord& r) { return r.h; }},
  };
  auto cmp = [&](const std::string& metric, std::string group, const std::function<bool(const TokenRecord&)>& keep,
                 const Getter& get, std::size_t family) {
    const auto t = collect(rs, GenerationMethod::Template, keep, get);
    const auto c = collect(rs, GenerationMethod::Contextual, keep, get);
    return compare(metric, std::move(group), t, c, family);
  };

  for (const auto& [name, get] : metrics) rep.main.push_back(cmp(name, "", kAll, get, m));
  rep.fooled = compare_rate("fooled", rs, [](const TokenRecord& r) { return r.fooled; }, m);
  rep.ideal_zone = compare_rate("ideal_zone", rs, [](const TokenRecord& r) { return r.in_ideal_zone; }, 1);

  const Getter b = [](const TokenRecord& r) { return r.b; };
  for (auto type : kAllTokenTypes) {
    rep.per_type.push_back(cmp("b", std::string(to_string(type)),
                               [type](const TokenRecord& r) { return r.token.token_type == type; }, b,
                               kAllTokenTypes.size()));
  }
  std::vector<std::string> orgs;
  for (const auto& r : rs) {
    if (std::find(orgs.begin(), orgs.end(), r.org) == orgs.end()) orgs.push_back(r.org);
  }
  for (const auto& org : orgs) {
    rep.per_org.push_back(cmp("b", org, [&org](const TokenRecord& r) { return r.org == org; }, b, orgs.size()));
  }
  const std::vector<std::tuple<std::string, std::string, Getter>> scanners = {
      {"pd1", "S1", [](const TokenRecord& r) { return r.scan.pd1; }},
      {"pd2", "S2", [](const TokenRecord& r) { return r.scan.pd2; }},
      {"pd3", "S3", [](const TokenRecord& r) { return r.scan.pd3; }},
  };
  for (const auto& [metric, group, get] : scanners) {
    rep.per_scanner.push_back(cmp(metric, group, kAll, get, kPerScannerComparisons));
  }
  return rep;
}

ExperimentReport run_experiment(std::uint64_t seed, const ExperimentConfig& config) {
  return aggregate(generate_records(seed, config), seed, config);
}

}  // namespace phantom
