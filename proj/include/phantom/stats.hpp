#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phantom::stats {

// Values shorter than this are left out of entropy profiles.
inline constexpr std::size_t kMinProfileLength = 8;
// Entropy range (bits/char) that maps to spread_norm = 1.
inline constexpr double kSpreadScale = 4.0;

// Shannon entropy in bits per character over byte frequencies. "" -> 0.
double shannon_entropy(std::string_view s);

struct EntropyProfile {
  std::vector<double> per_value_entropies;
  double mean_e = 0.0;
  double min_e = 0.0;
  double max_e = 0.0;
  double spread_norm = 0.0;  // clamp((max_e - min_e) / 4, 0, 1)
};

EntropyProfile entropy_profile(std::span<const std::string> values);
// Sample variance (n-1) of the per-value entropies; 0 below two values.
double entropy_variance(const EntropyProfile& profile);

struct SampleSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;  // n-1 denominator
};

SampleSummary summarize(std::span<const double> xs);

enum class Significance { NotSignificant, P05, P01, P001 };
std::string_view to_string(Significance label);  // "ns", "*", "**", "***"

struct TestResult {
  double t_stat = 0.0;
  double df = 0.0;
  double p_raw = 1.0;
  double p_adjusted = 1.0;
  double cohens_d = 0.0;
  Significance label = Significance::NotSignificant;
};

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);
// P(T > t) for Student's t with df degrees of freedom.
double student_t_sf(double t, double df);

// Welch two-sample test of b against a: t = (b.mean - a.mean) / se.
// p_adjusted equals p_raw and cohens_d is left 0; see cohens_d / bonferroni.
// Throws PreconditionError for n < 2, UndefinedStatistic when both samples
// are constant and equal. Constant unequal samples give t = +-inf, p = 0.
TestResult welch_t(const SampleSummary& a, const SampleSummary& b);

// (b.mean - a.mean) / pooled sd. Throws UndefinedStatistic when pooled sd is 0.
double cohens_d(const SampleSummary& a, const SampleSummary& b);

double bonferroni(double p_raw, std::size_t comparisons);
Significance significance_label(double p_adjusted);

struct ProportionTest {
  double z = 0.0;
  double p_raw = 1.0;
};

// Two-sided two-proportion z-test (pooled normal approximation) of
// successes_b/n_b against successes_a/n_a. Degenerate pooled rate 0 or 1 -> z = 0, p = 1.
ProportionTest two_proportion_z(std::size_t successes_a, std::size_t n_a, std::size_t successes_b, std::size_t n_b);

}  // namespace phantom::stats
