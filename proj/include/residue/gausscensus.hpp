#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace residue {

/// Element re + im*i of Z[i] with its norm and argument in [0, 2*pi).
struct GaussianInteger {
  std::int64_t re = 0;
  std::int64_t im = 0;
  std::uint64_t norm = 0;
  double arg = 0.0;

  static GaussianInteger make(std::int64_t re, std::int64_t im);
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

/// Gaussian primes of norm <= x_limit, one per associate class (the
/// representative with arg in [0, pi/2)), ordered by norm then arg:
///   1 + i; s + ti and t + si for each p = s^2 + t^2 = 1 (mod 4);
///   q (arg 0) for each q = 3 (mod 4) with q^2 <= x_limit.
/// Split primes come from twosquares::decompose. `workers` threads share the
/// decomposition work; the output does not depend on it.
std::vector<GaussianInteger> enumerate_gaussian_primes(std::uint64_t x_limit, unsigned workers = 1);

struct GaussianPrimeCount {
  std::uint64_t count = 0;
  double ratio = 0.0;  ///< count * log(x) / x
};

/// pi(x, Z[i]) and its ratio to x / log x. Requires x_limit >= 3.
GaussianPrimeCount count_pi_zi(std::uint64_t x_limit, unsigned workers = 1);

/// Census primes with theta1 <= arg <= theta2 (both ends inclusive).
/// Requires 0 <= theta1 < theta2 <= pi/2.
std::uint64_t sector_count(std::uint64_t x_limit, double theta1, double theta2, unsigned workers = 1);
std::uint64_t sector_count(std::span<const GaussianInteger> census, double theta1, double theta2);

/// Asymptotic sector share (2/pi) * (theta2 - theta1) * x / log x.
double expected_sector_count(std::uint64_t x_limit, double theta1, double theta2);

struct SectorHistogram {
  std::uint64_t x_limit = 0;
  std::vector<double> bin_edges;      ///< bins + 1 ascending edges, 0 .. pi/2
  std::vector<std::uint64_t> counts;  ///< one per bin
  std::uint64_t total = 0;

  std::size_t bins() const { return counts.size(); }
  /// Uniform share of the observed total for bin k.
  double expected(std::size_t k) const;
};

struct HistogramOptions {
  /// Drop the inert primes sitting exactly at arg 0.
  bool exclude_axis = false;
  unsigned workers = 1;
};

/// Equal-width bins over [0, pi/2). An arg landing exactly on an interior
/// edge is counted in the lower bin. Requires bins >= 2.
SectorHistogram sector_histogram(std::uint64_t x_limit, std::size_t bins, HistogramOptions opts = {});
SectorHistogram sector_histogram(std::span<const GaussianInteger> census, std::uint64_t x_limit,
                                 std::size_t bins, bool exclude_axis = false);

/// `re,im,norm,arg` with arg to 12 significant digits.
void write_census_csv(std::ostream& out, std::span<const GaussianInteger> census);
/// `bin_lo,bin_hi,count,expected`.
void write_histogram_csv(std::ostream& out, const SectorHistogram& hist);

}  // namespace residue
