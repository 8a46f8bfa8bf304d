#include "residue/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "residue/error.hpp"

namespace residue {
namespace {

constexpr int kMaxIterations = 10000;
constexpr double kEps = 1e-16;

// P(s, x) by its power series; converges quickly for x < s + 1.
double gamma_p_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (s + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Q(s, x) by the modified Lentz continued fraction; for x >= s + 1.
double gamma_q_fraction(double s, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
}

void check_range(std::span<const double> samples, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("empty sample range [lo, hi]");
  for (double v : samples) {
    if (!(v >= lo && v <= hi)) throw DomainError("sample outside [lo, hi]");
  }
}

}  // namespace

double gamma_q(double s, double x) {
  if (!(s > 0) || !(x >= 0)) throw DomainError("gamma_q: need s > 0 and x >= 0");
  if (x == 0) return 1.0;
  if (x < s + 1) return std::clamp(1.0 - gamma_p_series(s, x), 0.0, 1.0);
  return std::clamp(gamma_q_fraction(s, x), 0.0, 1.0);
}

double chi_square_sf(double statistic, double dof) {
  if (statistic <= 0) return 1.0;
  return gamma_q(dof / 2, statistic / 2);
}

double kolmogorov_sf(double lambda) {
  if (lambda <= 0) return 1.0;
  if (lambda < 1.18) {
    // Jacobi-theta form of the CDF; converges fast for small lambda.
    const double w = std::numbers::pi * std::numbers::pi / (8 * lambda * lambda);
    double sum = 0;
    for (int k = 1; k < 100; ++k) {
      const double term = std::exp(-(2 * k - 1) * (2 * k - 1) * w);
      sum += term;
      if (term < 1e-18) break;
    }
    return std::clamp(1.0 - std::sqrt(2 * std::numbers::pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0;
  double sign = 1;
  for (int k = 1; k < 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    sign = -sign;
    if (term < 1e-18) break;
  }
  return std::clamp(2 * sum, 0.0, 1.0);
}

StatReport chi_square_counts(std::string test_name, std::span<const std::uint64_t> observed,
                             std::span<const double> expected) {
  if (observed.size() != expected.size()) throw DomainError("chi_square: observed/expected size mismatch");
  if (observed.size() < 2) throw DomainError("chi_square: need at least 2 bins");
  StatReport r;
  r.test_name = std::move(test_name);
  double stat = 0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    if (!(expected[k] >= 5)) {
      throw DomainError("chi_square: expected count " + std::to_string(expected[k]) + " below 5 in bin " +
                        std::to_string(k) + " (under-sampled)");
    }
    const double diff = static_cast<double>(observed[k]) - expected[k];
    stat += diff * diff / expected[k];
    r.sample_size += observed[k];
  }
  r.statistic = stat;
  r.p_value = chi_square_sf(stat, static_cast<double>(observed.size() - 1));
  return r;
}

StatReport chi_square_cdf(std::span<const double> samples, double lo, double hi, std::size_t bins,
                          const std::function<double(double)>& cdf, std::string test_name) {
  if (bins < 2) throw DomainError("chi_square: need at least 2 bins");
  check_range(samples, lo, hi);
  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<std::uint64_t> observed(bins, 0);
  for (double v : samples) {
    auto k = static_cast<std::size_t>((v - lo) / width);
    ++observed[std::min(k, bins - 1)];
  }
  std::vector<double> expected(bins);
  const double n = static_cast<double>(samples.size());
  for (std::size_t k = 0; k < bins; ++k) {
    const double a = lo + width * static_cast<double>(k);
    const double b = k + 1 == bins ? hi : a + width;
    expected[k] = n * (cdf(b) - cdf(a));
  }
  return chi_square_counts(std::move(test_name), observed, expected);
}

StatReport chi_square_uniform(std::span<const double> samples, double lo, double hi, std::size_t bins,
                              std::string test_name) {
  check_range(samples, lo, hi);
  return chi_square_cdf(samples, lo, hi, bins, [lo, hi](double x) { return (x - lo) / (hi - lo); },
                        std::move(test_name));
}

StatReport ks_test(std::span<const double> samples, const std::function<double(double)>& cdf,
                   std::string test_name) {
  if (samples.size() < 10) throw DomainError("ks_test: need at least 10 samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, (static_cast<double>(i) + 1) / n - f, f - static_cast<double>(i) / n});
  }
  StatReport r;
  r.test_name = std::move(test_name);
  r.sample_size = sorted.size();
  r.statistic = d;
  const double root = std::sqrt(n);
  r.p_value = kolmogorov_sf((root + 0.12 + 0.11 / root) * d);
  return r;
}

StatReport ks_uniform(std::span<const double> samples, double lo, double hi, std::string test_name) {
  check_range(samples, lo, hi);
  return ks_test(samples, [lo, hi](double x) { return (x - lo) / (hi - lo); }, std::move(test_name));
}

}  // namespace residue
