#include "phantom/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "phantom/error.hpp"

namespace phantom::stats {

namespace {

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 500;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) return h;
  }
  return h;
}

}  // namespace

double shannon_entropy(std::string_view s) {
  if (s.empty()) return 0.0;
  std::array<std::size_t, 256> counts{};
  for (unsigned char c : s) ++counts[c];
  const double n = static_cast<double>(s.size());
  double h = 0.0;
  for (auto count : counts) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / n;
    h -= p * std::log2(p);
  }
  return h;
}

EntropyProfile entropy_profile(std::span<const std::string> values) {
  EntropyProfile profile;
  for (const auto& v : values) {
    if (v.size() >= kMinProfileLength) profile.per_value_entropies.push_back(shannon_entropy(v));
  }
  const auto& e = profile.per_value_entropies;
  if (e.empty()) return profile;
  profile.mean_e = std::accumulate(e.begin(), e.end(), 0.0) / static_cast<double>(e.size());
  const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
  profile.min_e = *lo;
  profile.max_e = *hi;
  profile.spread_norm = std::clamp((profile.max_e - profile.min_e) / kSpreadScale, 0.0, 1.0);
  return profile;
}

double entropy_variance(const EntropyProfile& profile) {
  const auto& e = profile.per_value_entropies;
  if (e.size() < 2) return 0.0;
  return std::pow(summarize(e).sd, 2);
}

SampleSummary summarize(std::span<const double> xs) {
  SampleSummary s;
  s.n = xs.size();
  if (xs.empty()) return s;
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(s.n);
  if (s.n < 2) return s;
  double ss = 0.0;
  for (double x : xs) ss += (x - s.mean) * (x - s.mean);
  s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
  return s;
}

std::string_view to_string(Significance label) {
  switch (label) {
    case Significance::NotSignificant: return "ns";
    case Significance::P05: return "*";
    case Significance::P01: return "**";
    case Significance::P001: return "***";
  }
  return "ns";
}

double incomplete_beta(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0) throw PreconditionError("incomplete_beta requires a, b > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  // The fraction converges fastest on the side of the mean.
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_sf(double t, double df) {
  if (df <= 0.0) throw PreconditionError("student_t_sf requires df > 0");
  if (std::isinf(t)) return t > 0 ? 0.0 : 1.0;
  const double tail = 0.5 * incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
  return t >= 0.0 ? tail : 1.0 - tail;
}

TestResult welch_t(const SampleSummary& a, const SampleSummary& b) {
  if (a.n < 2 || b.n < 2) throw PreconditionError("welch_t requires n >= 2 in both samples");
  TestResult r;
  const double va = a.sd * a.sd / static_cast<double>(a.n);
  const double vb = b.sd * b.sd / static_cast<double>(b.n);
  const double diff = b.mean - a.mean;
  if (va + vb == 0.0) {
    if (diff == 0.0) throw UndefinedStatistic("welch_t: both samples constant with equal means");
    r.t_stat = diff > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    r.df = static_cast<double>(a.n + b.n - 2);
    r.p_raw = 0.0;
  } else {
    r.t_stat = diff / std::sqrt(va + vb);
    const double denom = va * va / static_cast<double>(a.n - 1) + vb * vb / static_cast<double>(b.n - 1);
    r.df = (va + vb) * (va + vb) / denom;
    r.p_raw = std::min(1.0, 2.0 * student_t_sf(std::fabs(r.t_stat), r.df));
  }
  r.p_adjusted = r.p_raw;
  r.label = significance_label(r.p_adjusted);
  return r;
}

double cohens_d(const SampleSummary& a, const SampleSummary& b) {
  if (a.n < 2 || b.n < 2) throw PreconditionError("cohens_d requires n >= 2 in both samples");
  const double pooled_var = ((static_cast<double>(a.n) - 1) * a.sd * a.sd + (static_cast<double>(b.n) - 1) * b.sd * b.sd) /
                            static_cast<double>(a.n + b.n - 2);
  if (pooled_var == 0.0) throw UndefinedStatistic("cohens_d: pooled standard deviation is zero");
  return (b.mean - a.mean) / std::sqrt(pooled_var);
}

double bonferroni(double p_raw, std::size_t comparisons) {
  if (comparisons == 0) throw PreconditionError("bonferroni requires at least one comparison");
  if (p_raw < 0.0 || p_raw > 1.0) throw PreconditionError("bonferroni requires p in [0, 1]");
  return std::min(1.0, p_raw * static_cast<double>(comparisons));
}

Significance significance_label(double p_adjusted) {
  if (p_adjusted < 0.001) return Significance::P001;
  if (p_adjusted < 0.01) return Significance::P01;
  if (p_adjusted < 0.05) return Significance::P05;
  return Significance::NotSignificant;
}

ProportionTest two_proportion_z(std::size_t successes_a, std::size_t n_a, std::size_t successes_b, std::size_t n_b) {
  if (n_a == 0 || n_b == 0 || successes_a > n_a || successes_b > n_b) {
    throw PreconditionError("two_proportion_z requires 0 <= successes <= n and n >= 1");
  }
  const double pa = static_cast<double>(successes_a) / static_cast<double>(n_a);
  const double pb = static_cast<double>(successes_b) / static_cast<double>(n_b);
  const double pooled = static_cast<double>(successes_a + successes_b) / static_cast<double>(n_a + n_b);
  ProportionTest r;
  const double var = pooled * (1.0 - pooled) * (1.0 / static_cast<double>(n_a) + 1.0 / static_cast<double>(n_b));
  if (var <= 0.0) return r;
  r.z = (pb - pa) / std::sqrt(var);
  r.p_raw = std::erfc(std::fabs(r.z) / std::sqrt(2.0));
  return r;
}

}  // namespace phantom::stats
