#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "residue/gausscensus.hpp"

namespace residue {

/// Outcome of one goodness-of-fit test.
struct StatReport {
  std::string test_name;
  std::uint64_t sample_size = 0;
  double statistic = 0.0;
  double p_value = 1.0;
  std::optional<SectorHistogram> bins;
};

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s).
/// Power series for x < s + 1, Lentz continued fraction otherwise.
double gamma_q(double s, double x);

/// Survival function of the chi-square distribution.
double chi_square_sf(double statistic, double dof);

/// Kolmogorov limiting survival function Q(lambda) = P(sqrt(n) D > lambda).
double kolmogorov_sf(double lambda);

/// Pearson chi-square of observed counts against expected counts, dof =
/// bins - 1. Every expected count must be at least 5.
StatReport chi_square_counts(std::string test_name, std::span<const std::uint64_t> observed,
                             std::span<const double> expected);

/// Chi-square against the uniform density on [lo, hi] with equal-width
/// bins. Throws DomainError for samples outside [lo, hi] or fewer than 5
/// expected per bin.
StatReport chi_square_uniform(std::span<const double> samples, double lo, double hi, std::size_t bins,
                              std::string test_name = "chi_square_uniform");

/// Chi-square with equal-width bins on [lo, hi] against a reference CDF.
StatReport chi_square_cdf(std::span<const double> samples, double lo, double hi, std::size_t bins,
                          const std::function<double(double)>& cdf, std::string test_name);

/// One-sample Kolmogorov-Smirnov against a continuous CDF. The p-value is
/// the limiting distribution at (sqrt(n) + 0.12 + 0.11 / sqrt(n)) * D.
/// Requires at least 10 samples.
StatReport ks_test(std::span<const double> samples, const std::function<double(double)>& cdf,
                   std::string test_name);

/// KS against the uniform CDF on [lo, hi]. Requires lo < hi, samples inside.
StatReport ks_uniform(std::span<const double> samples, double lo, double hi,
                      std::string test_name = "ks_uniform");

}  // namespace residue
