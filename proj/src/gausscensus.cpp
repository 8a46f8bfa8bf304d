#include "residue/gausscensus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "residue/detail/arith.hpp"
#include "residue/detail/parallel.hpp"
#include "residue/error.hpp"
#include "residue/export.hpp"
#include "residue/modmath.hpp"
#include "residue/twosquares.hpp"

namespace residue {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

bool census_order(const GaussianInteger& x, const GaussianInteger& y) {
  return x.norm != y.norm ? x.norm < y.norm : x.arg < y.arg;
}

}  // namespace

GaussianInteger GaussianInteger::make(std::int64_t re, std::int64_t im) {
  GaussianInteger g;
  g.re = re;
  g.im = im;
  g.norm = static_cast<std::uint64_t>(re * re) + static_cast<std::uint64_t>(im * im);
  g.arg = std::atan2(static_cast<double>(im), static_cast<double>(re));
  if (g.arg < 0) g.arg += 2 * std::numbers::pi;
  return g;
}

std::vector<GaussianInteger> enumerate_gaussian_primes(std::uint64_t x_limit, unsigned workers) {
  if (x_limit < 2) throw DomainError("enumerate_gaussian_primes: x_limit must be at least 2");

  std::vector<std::uint64_t> split;
  std::vector<GaussianInteger> out;
  const std::uint64_t inert_limit = detail::isqrt(x_limit);
  for_each_prime(2, x_limit, [&](std::uint64_t p) {
    if (p == 2) {
      out.push_back(GaussianInteger::make(1, 1));
    } else if (p % 4 == 1) {
      split.push_back(p);
    } else if (p <= inert_limit) {
      out.push_back(GaussianInteger::make(static_cast<std::int64_t>(p), 0));
    }
  });

  std::vector<GaussianInteger> pairs(2 * split.size());
  detail::parallel_chunks(split.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto d = decompose(Prime4m1(Natural(split[i])));
      const auto s = static_cast<std::int64_t>(d.s.to_u64());
      const auto t = static_cast<std::int64_t>(d.t.to_u64());
      pairs[2 * i] = GaussianInteger::make(s, t);
      pairs[2 * i + 1] = GaussianInteger::make(t, s);
    }
  });
  out.insert(out.end(), pairs.begin(), pairs.end());
  std::sort(out.begin(), out.end(), census_order);
  return out;
}

GaussianPrimeCount count_pi_zi(std::uint64_t x_limit, unsigned workers) {
  if (x_limit < 3) throw DomainError("count_pi_zi: x_limit must be at least 3");
  const auto census = enumerate_gaussian_primes(x_limit, workers);
  const double x = static_cast<double>(x_limit);
  return {census.size(), static_cast<double>(census.size()) * std::log(x) / x};
}

std::uint64_t sector_count(std::span<const GaussianInteger> census, double theta1, double theta2) {
  if (!(theta1 < theta2)) throw DomainError("sector_count: theta1 must be below theta2");
  if (theta1 < 0 || theta2 > kHalfPi) throw DomainError("sector_count: sector must lie in [0, pi/2]");
  return static_cast<std::uint64_t>(std::count_if(census.begin(), census.end(), [&](const auto& g) {
    return theta1 <= g.arg && g.arg <= theta2;
  }));
}

std::uint64_t sector_count(std::uint64_t x_limit, double theta1, double theta2, unsigned workers) {
  if (!(theta1 < theta2)) throw DomainError("sector_count: theta1 must be below theta2");
  return sector_count(enumerate_gaussian_primes(x_limit, workers), theta1, theta2);
}

double expected_sector_count(std::uint64_t x_limit, double theta1, double theta2) {
  const double x = static_cast<double>(x_limit);
  return (2 / std::numbers::pi) * (theta2 - theta1) * x / std::log(x);
}

double SectorHistogram::expected(std::size_t k) const {
  const double width = bin_edges.at(k + 1) - bin_edges.at(k);
  return static_cast<double>(total) * width / kHalfPi;
}

SectorHistogram sector_histogram(std::span<const GaussianInteger> census, std::uint64_t x_limit,
                                 std::size_t bins, bool exclude_axis) {
  if (bins < 2) throw DomainError("sector_histogram: need at least 2 bins");
  SectorHistogram h;
  h.x_limit = x_limit;
  h.bin_edges.resize(bins + 1);
  for (std::size_t k = 0; k <= bins; ++k) {
    h.bin_edges[k] = kHalfPi * static_cast<double>(k) / static_cast<double>(bins);
  }
  h.bin_edges.back() = kHalfPi;
  h.counts.assign(bins, 0);

  const auto upper = std::span(h.bin_edges).subspan(1);
  for (const auto& g : census) {
    if (g.norm > x_limit) continue;
    if (exclude_axis && g.arg == 0.0) continue;
    auto k = static_cast<std::size_t>(std::lower_bound(upper.begin(), upper.end(), g.arg) - upper.begin());
    ++h.counts[std::min(k, bins - 1)];
    ++h.total;
  }
  return h;
}

SectorHistogram sector_histogram(std::uint64_t x_limit, std::size_t bins, HistogramOptions opts) {
  if (bins < 2) throw DomainError("sector_histogram: need at least 2 bins");
  return sector_histogram(enumerate_gaussian_primes(x_limit, opts.workers), x_limit, bins, opts.exclude_axis);
}

void write_census_csv(std::ostream& out, std::span<const GaussianInteger> census) {
  out << "re,im,norm,arg\n";
  for (const auto& g : census) {
    out << g.re << ',' << g.im << ',' << g.norm << ',' << format_real(g.arg) << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const SectorHistogram& hist) {
  out << "bin_lo,bin_hi,count,expected\n";
  for (std::size_t k = 0; k < hist.bins(); ++k) {
    out << format_real(hist.bin_edges[k]) << ',' << format_real(hist.bin_edges[k + 1]) << ',' << hist.counts[k] << ','
        << format_real(hist.expected(k)) << '\n';
  }
}

}  // namespace residue
