// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "phantom/believability.hpp"
#include "phantom/generation.hpp"
#include "phantom/harness.hpp"
#include "phantom/report.hpp"
#include "phantom/rng.hpp"
#include "phantom/scanners.hpp"
#include "phantom/stats.hpp"

using namespace phantom;

namespace {

int failures = 0;

void criterion(const char* name, bool ok, const std::string& detail) {
  std::printf("%s  %-66s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  failures += ok ? 0 : 1;
}

std::string f(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

double mean_gap(const ExperimentReport& r, const char* metric) { return r.metric(metric).delta; }

}  // namespace

int main() {
  // 1. Formula fidelity
  const double h_ctx = composite_score(0.778, 0.870);
  criterion("composite_score(0.778, 0.870) = 0.813 +- 0.001", std::abs(h_ctx - 0.813) <= 0.001, f("got %.4f", h_ctx));
  const double h_tpl = composite_score(0.576, 0.609);
  criterion("composite_score(0.576, 0.609) = 0.588 +- 0.001", std::abs(h_tpl - 0.588) <= 0.001, f("got %.4f", h_tpl));
  const stats::SampleSummary a{32, 0.576, 0.058}, b{32, 0.778, 0.057};
  const auto wt = stats::welch_t(a, b);
  criterion("welch_t headline summaries: t = 14.07 +- 0.2, p < 0.001",
            std::abs(wt.t_stat - 14.07) <= 0.2 && wt.p_raw < 0.001, f("t=%.3f p=%.2e", wt.t_stat, wt.p_raw));
  const double d = stats::cohens_d(a, b);
  criterion("cohens_d headline summaries = 3.52 +- 0.05", std::abs(d - 3.52) <= 0.05, f("d=%.3f", d));

  // 2. Experiment reproduction, seed 42, defaults
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = run_experiment(42);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  criterion("contextual fooled rate = 100%", rep.fooled.contextual_rate == 1.0,
            f("%.1f%%", 100 * rep.fooled.contextual_rate));
  criterion("template fooled rate <= 15%", rep.fooled.template_rate <= 0.15,
            f("%.1f%%", 100 * rep.fooled.template_rate));
  criterion("mean B gap >= 0.15", mean_gap(rep, "b") >= 0.15, f("delta=%+.3f", mean_gap(rep, "b")));
  criterion("mean DR gap >= 0.15", mean_gap(rep, "dr") >= 0.15, f("delta=%+.3f", mean_gap(rep, "dr")));
  criterion("mean S_c gap >= 0.20", mean_gap(rep, "s_c") >= 0.20, f("delta=%+.3f", mean_gap(rep, "s_c")));
  criterion("S_c gap > S_v gap", mean_gap(rep, "s_c") > mean_gap(rep, "s_v"),
            f("s_c=%+.3f s_v=%+.3f", mean_gap(rep, "s_c"), mean_gap(rep, "s_v")));
  const auto& sv = rep.metric("s_v");
  criterion("S_v |gap| <= 0.10 and not significant after correction",
            std::abs(sv.delta) <= 0.10 && sv.test.label == stats::Significance::NotSignificant,
            f("delta=%+.3f p_adj=%.3f", sv.delta, sv.test.p_adjusted) + " " +
                std::string(stats::to_string(sv.test.label)));
  bool scanners_ok = true;
  std::string scanner_detail;
  double largest = 0.0;
  std::string largest_name;
  for (const auto& m : rep.per_scanner) {
    scanners_ok = scanners_ok && m.delta < 0.0 && m.defined && m.test.p_adjusted < 0.001;
    scanner_detail += m.group + f("=%+.3f ", m.delta);
    if (std::abs(m.delta) > largest) {
      largest = std::abs(m.delta);
      largest_name = m.group;
    }
  }
  criterion("per-scanner pd lower for contextual on S1-S3, each p_adj < 0.001", scanners_ok, scanner_detail);
  criterion("S3 has the largest absolute pd gap", largest_name == "S3", "largest " + largest_name);
  criterion("ideal zone (0.70/0.70): 100% contextual", rep.ideal_zone.contextual_rate == 1.0,
            f("%.1f%%", 100 * rep.ideal_zone.contextual_rate));
  criterion("ideal zone (0.70/0.70): <= 15% template", rep.ideal_zone.template_rate <= 0.15,
            f("%.1f%%", 100 * rep.ideal_zone.template_rate));
  bool orgs_ok = rep.per_org.size() == 4;
  std::string org_detail;
  for (const auto& m : rep.per_org) {
    orgs_ok = orgs_ok && m.contextual_summary.mean > m.template_summary.mean;
    org_detail += m.group + f("=%+.3f ", m.delta);
  }
  criterion("per-org contextual mean B > template mean B in all 4", orgs_ok, org_detail);
  criterion("full run under 5 seconds", seconds < 5.0, f("%.3f s", seconds));

  // 3. Properties
  const auto json = render_json(rep);
  criterion("identical (seed, config) gives byte-identical reports", render_json(run_experiment(42)) == json,
            f("%.0f bytes", static_cast<double>(json.size())));
  const auto other = run_experiment(43);
  std::size_t changed = 0;
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    changed += rep.records[i].token.content != other.records[i].token.content ? 1 : 0;
  }
  criterion("changing the seed changes at least one token", changed >= 1, f("%.0f/64 changed", double(changed)));

  bool format_ok = rep.records.size() == 64;
  double min_sv = 1.0;
  for (const auto& r : rep.records) {
    min_sv = std::min(min_sv, r.components.s_v);
    format_ok = format_ok && r.components.s_v >= 0.5;
  }
  criterion("all 64 tokens pass structural checks with s_v >= 0.5", format_ok, f("min s_v=%.3f", min_sv));
  bool context_ok = true;
  const auto flags = RedFlagList().flags();
  for (const auto& r : rep.records) {
    const auto terms = org_terms(builtin_profile(r.org));
    const auto org_hits = oracle::count_distinct_ci(r.token.content, terms);
    const auto flag_hits = oracle::count_distinct_ci(r.token.content, flags);
    if (r.token.method == GenerationMethod::Contextual) {
      context_ok = context_ok && org_hits >= 3 && flag_hits == 0;
    } else {
      context_ok = context_ok && flag_hits >= 1 && org_hits == 0;
    }
  }
  criterion("context separation: org terms and red flags per method", context_ok, "");

  DeterministicRng rng(1000);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::string s;
    const auto len = rng.between(1, 120);
    const auto k = static_cast<std::uint64_t>(rng.between(1, 90));
    for (int j = 0; j < len; ++j) s.push_back(static_cast<char>(33 + rng.below(k)));
    worst = std::max(worst, std::abs(stats::shannon_entropy(s) - oracle::entropy(s)));
  }
  criterion("shannon_entropy matches frequency oracle on 1000 strings (1e-9)", worst < 1e-9, f("max err %.2e", worst));
  double worst_p = 0.0;
  for (double t : {0.5, 1.0, 2.0, 5.0}) {
    for (double df : {5.0, 30.0, 62.0}) {
      worst_p = std::max(worst_p, std::abs(stats::student_t_sf(t, df) - oracle::t_sf_simpson(t, df)));
    }
  }
  criterion("Student-t tail matches integration oracle on grid (1e-6)", worst_p < 1e-6, f("max err %.2e", worst_p));

  bool dr_exact = true;
  for (const auto& r : rep.records) {
    dr_exact = dr_exact && r.scan.dr == 1.0 - (0.40 * r.scan.pd1 + 0.30 * r.scan.pd2 + 0.30 * r.scan.pd3);
  }
  criterion("dr = 1 - sum lambda_j pd_j exactly on every record", dr_exact, "");

  bool monotone_b = true, monotone_h = true;
  DeterministicRng mr(77);
  auto u = [&] { return static_cast<double>(mr.below(1000001)) / 1e6; };
  for (int i = 0; i < 2000; ++i) {
    std::array<double, 4> c = {u(), u(), u(), u()};
    const double base = believability({c[0], c[1], c[2], c[3]}).b;
    const int k = static_cast<int>(mr.below(4));
    auto up = c;
    up[k] = up[k] + u() * (1.0 - up[k]);
    monotone_b = monotone_b && believability({up[0], up[1], up[2], up[3]}).b >= base;
    const double x = u(), y = u(), dx = u() * (1.0 - x), dy = u() * (1.0 - y);
    monotone_h = monotone_h && composite_score(x + dx, y) >= composite_score(x, y) &&
                 composite_score(x, y + dy) >= composite_score(x, y);
  }
  criterion("B monotone in each component", monotone_b, "2000 random trials");
  criterion("composite monotone in b and dr", monotone_h, "2000 random trials");

  bool antisym = true;
  for (int i = 0; i < 200; ++i) {
    const stats::SampleSummary p{static_cast<std::size_t>(mr.between(2, 50)), u(), 0.01 + u()};
    const stats::SampleSummary q{static_cast<std::size_t>(mr.between(2, 50)), u(), 0.01 + u()};
    const auto pq = stats::welch_t(p, q), qp = stats::welch_t(q, p);
    antisym = antisym && pq.t_stat == -qp.t_stat && std::abs(pq.p_raw - qp.p_raw) < 1e-15;
  }
  criterion("welch_t antisymmetric under group swap", antisym, "200 random pairs");

  std::printf("%s: %d failing criteria\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
