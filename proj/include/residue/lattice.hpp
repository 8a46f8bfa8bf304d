#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace residue {

/// Lattice points of the closed disc of radius r, exact and by the
/// floor(pi r^2) estimate.
struct DiscCount {
  std::uint64_t exact = 0;
  std::uint64_t approx = 0;
  std::int64_t difference = 0;  ///< exact - approx
};

/// r^2 is snapped to the nearest integer when within rounding error of it,
/// so count_disc(std::sqrt(R)) counts x^2 + y^2 <= R.
DiscCount count_disc(double r, unsigned workers = 1);

/// #{(x, y) in Z^2 : x^2 + y^2 <= R}, all signs.
std::uint64_t count_disc_squared(std::uint64_t R, unsigned workers = 1);

/// #{x >= y > 0 : x^2 + y^2 <= R}, diagonal included.
std::uint64_t count_octant(std::uint64_t R, unsigned workers = 1);

/// #{x > y > 0 : x^2 + y^2 <= R}.
std::uint64_t count_octant_strict(std::uint64_t R, unsigned workers = 1);

/// Least-squares c in count_octant(R) ~ pi R / 8 - c sqrt(R).
struct OctantFit {
  double c = 0.0;
  std::vector<std::uint64_t> R;
  /// (N0(R) - (pi R / 8 - c sqrt(R))) / sqrt(R), per grid point.
  std::vector<double> residuals;
  /// (pi R / 8 - N0(R)) / sqrt(R), the single-point constant.
  std::vector<double> point_constants;
};

/// Requires at least 3 values, each >= 100.
OctantFit fit_octant_constant(std::span<const std::uint64_t> R_values, unsigned workers = 1);

/// #{x >= y > 0 : x^2 + y^2 = R}. Requires R >= 1.
std::uint64_t on_circle_count(std::uint64_t R);

struct PrimePointRatio {
  std::uint64_t R = 0;
  std::uint64_t N = 0;   ///< primes p <= R with p = 2 or p = 1 (mod 4)
  std::uint64_t N0 = 0;  ///< count_octant(R)
  double ratio = 0.0;      ///< N / N0
  double predicted = 0.0;  ///< 4 / (pi log R)
  double estimate_half_pi = 0.0;  ///< pi(R) / 2 + 1
  double estimate_log = 0.0;      ///< R / (2 log R)
};

/// Requires R >= 2.
PrimePointRatio prime_point_ratio(std::uint64_t R, unsigned workers = 1);

struct LatticeCensus {
  std::uint64_t R = 0;
  std::uint64_t n_disc = 0;
  std::uint64_t n_octant = 0;
  std::uint64_t n_prime_points = 0;
  double c_fit = 0.0;  ///< single-point constant (pi R / 8 - n_octant) / sqrt(R)

  double ratio() const;
  double predicted() const;
};

LatticeCensus lattice_census(std::uint64_t R, unsigned workers = 1);

/// `R,n_disc,n_octant,N,ratio,predicted`.
void write_lattice_csv(std::ostream& out, std::span<const LatticeCensus> rows);
/// `R,N,N0,ratio,predicted,estimate_half_pi,estimate_log`.
void write_ratio_csv(std::ostream& out, std::span<const PrimePointRatio> rows);

}  // namespace residue
