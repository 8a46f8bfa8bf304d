#include "residue/lattice.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <ostream>

#include "residue/detail/arith.hpp"
#include "residue/detail/parallel.hpp"
#include "residue/error.hpp"
#include "residue/export.hpp"
#include "residue/modmath.hpp"

namespace residue {
namespace {

using detail::isqrt;

/// Sums fn(y) for y in [first, last], partitioned across workers.
template <class Fn>
std::uint64_t parallel_sum(std::uint64_t first, std::uint64_t last, unsigned workers, Fn fn) {
  if (last < first) return 0;
  std::atomic<std::uint64_t> total{0};
  detail::parallel_chunks(last - first + 1, workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::uint64_t local = 0;
    for (std::size_t i = begin; i < end; ++i) local += fn(first + i);
    total += local;
  });
  return total.load();
}

}  // namespace

DiscCount count_disc(double r, unsigned workers) {
  if (!(r >= 0)) throw DomainError("count_disc: radius must be nonnegative");
  const long double r2 = static_cast<long double>(r) * r;
  auto R = static_cast<std::uint64_t>(std::floor(r2));
  if (static_cast<long double>(R + 1) - r2 <= 1e-9L * (r2 + 1)) ++R;

  DiscCount out;
  out.exact = count_disc_squared(R, workers);
  out.approx = static_cast<std::uint64_t>(std::floor(std::numbers::pi_v<long double> * r2));
  out.difference = static_cast<std::int64_t>(out.exact) - static_cast<std::int64_t>(out.approx);
  return out;
}

std::uint64_t count_disc_squared(std::uint64_t R, unsigned workers) {
  const std::uint64_t X = isqrt(R);
  const std::uint64_t off_axis =
      parallel_sum(1, X, workers, [R](std::uint64_t x) { return 2 * isqrt(R - x * x) + 1; });
  return (2 * X + 1) + 2 * off_axis;
}

std::uint64_t count_octant(std::uint64_t R, unsigned workers) {
  return parallel_sum(1, isqrt(R / 2), workers, [R](std::uint64_t y) { return isqrt(R - y * y) - y + 1; });
}

std::uint64_t count_octant_strict(std::uint64_t R, unsigned workers) {
  // x > y forces 2y^2 < R.
  const std::uint64_t y_max = R == 0 ? 0 : isqrt((R - 1) / 2);
  return parallel_sum(1, y_max, workers, [R](std::uint64_t y) {
    const std::uint64_t x = isqrt(R - y * y);
    return x > y ? x - y : 0;
  });
}

OctantFit fit_octant_constant(std::span<const std::uint64_t> R_values, unsigned workers) {
  if (R_values.size() < 3) throw DomainError("fit_octant_constant: need at least 3 grid points");
  for (auto R : R_values) {
    if (R < 100) throw DomainError("fit_octant_constant: grid values must be >= 100");
  }
  // Minimise sum (piR/8 - N0 - c sqrt R)^2: c = sum d_i sqrt(R_i) / sum R_i.
  std::vector<double> gap;
  double num = 0;
  double den = 0;
  for (auto R : R_values) {
    const double r = static_cast<double>(R);
    const double d = std::numbers::pi * r / 8 - static_cast<double>(count_octant(R, workers));
    gap.push_back(d);
    num += d * std::sqrt(r);
    den += r;
  }
  OctantFit fit;
  fit.c = num / den;
  fit.R.assign(R_values.begin(), R_values.end());
  for (std::size_t i = 0; i < gap.size(); ++i) {
    const double root = std::sqrt(static_cast<double>(R_values[i]));
    fit.residuals.push_back((fit.c * root - gap[i]) / root);
    fit.point_constants.push_back(gap[i] / root);
  }
  return fit;
}

std::uint64_t on_circle_count(std::uint64_t R) {
  if (R < 1) throw DomainError("on_circle_count: R must be at least 1");
  std::uint64_t count = 0;
  for (std::uint64_t y = 1; 2 * y * y <= R; ++y) {
    const std::uint64_t rest = R - y * y;
    const std::uint64_t x = isqrt(rest);
    if (x * x == rest && x >= y) ++count;
  }
  return count;
}

PrimePointRatio prime_point_ratio(std::uint64_t R, unsigned workers) {
  if (R < 2) throw DomainError("prime_point_ratio: R must be at least 2");
  PrimePointRatio out;
  out.R = R;
  std::uint64_t pi_R = 0;
  for_each_prime(2, R, [&](std::uint64_t p) {
    ++pi_R;
    if (p == 2 || p % 4 == 1) ++out.N;
  });
  out.N0 = count_octant(R, workers);
  const double r = static_cast<double>(R);
  out.ratio = static_cast<double>(out.N) / static_cast<double>(out.N0);
  out.predicted = 4 / (std::numbers::pi * std::log(r));
  out.estimate_half_pi = static_cast<double>(pi_R) / 2 + 1;
  out.estimate_log = r / (2 * std::log(r));
  return out;
}

double LatticeCensus::ratio() const {
  return n_octant == 0 ? 0.0 : static_cast<double>(n_prime_points) / static_cast<double>(n_octant);
}

double LatticeCensus::predicted() const {
  return R < 2 ? 0.0 : 4 / (std::numbers::pi * std::log(static_cast<double>(R)));
}

LatticeCensus lattice_census(std::uint64_t R, unsigned workers) {
  LatticeCensus c;
  c.R = R;
  c.n_disc = count_disc_squared(R, workers);
  c.n_octant = count_octant(R, workers);
  for_each_prime(2, R, [&](std::uint64_t p) {
    if (p == 2 || p % 4 == 1) ++c.n_prime_points;
  });
  if (R > 0) {
    const double r = static_cast<double>(R);
    c.c_fit = (std::numbers::pi * r / 8 - static_cast<double>(c.n_octant)) / std::sqrt(r);
  }
  return c;
}

void write_lattice_csv(std::ostream& out, std::span<const LatticeCensus> rows) {
  out << "R,n_disc,n_octant,N,ratio,predicted\n";
  for (const auto& c : rows) {
    out << c.R << ',' << c.n_disc << ',' << c.n_octant << ',' << c.n_prime_points << ','
        << format_real(c.ratio()) << ',' << format_real(c.predicted()) << '\n';
  }
}

void write_ratio_csv(std::ostream& out, std::span<const PrimePointRatio> rows) {
  out << "R,N,N0,ratio,predicted,estimate_half_pi,estimate_log\n";
  for (const auto& r : rows) {
    out << r.R << ',' << r.N << ',' << r.N0 << ',' << format_real(r.ratio) << ','
        << format_real(r.predicted) << ',' << format_real(r.estimate_half_pi) << ','
        << format_real(r.estimate_log) << '\n';
  }
}

}  // namespace residue
