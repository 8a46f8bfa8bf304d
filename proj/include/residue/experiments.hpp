#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "residue/modmath.hpp"
#include "residue/quadcong.hpp"
#include "residue/stats.hpp"

namespace residue {

struct RandomnessOptions {
  std::size_t bins = 16;
  /// Forwarded to the Gaussian sector histogram.
  bool exclude_axis = false;
  unsigned workers = 1;
};

/// Equidistribution checks over all p = 1 (mod 4), p <= p_limit:
///   two_square_angle_*  theta = atan(t / s) on [0, pi/4], uniform;
///   s_over_sqrt_p_*     s / sqrt(p) on [1/sqrt 2, 1] against the law
///                       implied by uniform theta, F(v) = 1 - 4 acos(v) / pi;
///   wilson_root_*       min(w, p - w) / p on [0, 1/2], uniform;
///   gaussian_sector_chi2 and gaussian_arg_ks over the census to p_limit.
/// The Wilson roots are the smaller root of -1 from sqrt_mod_prime, which
/// coincides with min(w, p - w) for the half factorial w.
/// Deterministic in p_limit. Requires p_limit >= 10^4.
std::vector<StatReport> randomness_suite(std::uint64_t p_limit, RandomnessOptions opts = {});

/// One timed measurement. wall_time_ns is the median over repetitions;
/// op_count comes from an instrumented run and is machine independent.
struct BenchSample {
  std::string op_label;
  std::uint64_t input_magnitude = 0;
  std::uint64_t wall_time_ns = 0;
  std::uint64_t op_count = 0;
  std::uint64_t repetitions = 0;
};

struct ScalingFit {
  std::string op_label;
  double op_slope = 0.0;    ///< d log(op_count) / d log(p)
  double time_slope = 0.0;  ///< d log(wall_time_ns) / d log(p)
};

struct SqrtBenchmark {
  std::vector<BenchSample> samples;
  std::vector<ScalingFit> fits;

  /// Throws std::out_of_range for an unknown label.
  const ScalingFit& fit(const std::string& op_label) const;
};

/// Operation labels used by bench_sqrt_methods.
inline constexpr const char* kOpWilson = "wilson_sqrt_minus_one";
inline constexpr const char* kOpTonelli = "sqrt_mod_prime";
inline constexpr const char* kOpDecompose = "decompose";
inline constexpr const char* kOpDecomposeBrute = "decompose_brute";
inline constexpr const char* kOpBruteForce = "brute_force";

/// Times the half-factorial root, Tonelli-Shanks on p - 1, Euclidean
/// descent and the brute-force two-square scan on every grid prime, single
/// threaded, and fits log-log slopes per method. Requires an ascending grid
/// of at least 4 primes whose decimal lengths span 3 or more decades, and
/// reps >= 5.
SqrtBenchmark bench_sqrt_methods(std::span<const Prime4m1> prime_grid, std::size_t reps);

/// First p = 1 (mod 4) prime at or above 10^k for k = first..last.
std::vector<Prime4m1> decade_prime_grid(unsigned first_exponent, unsigned last_exponent);

/// Visited counts of brute_force per instance (input_magnitude = b).
/// Each instance needs c >= 2 so the scan is nonempty.
std::vector<BenchSample> bench_search_cost(std::span<const QCInstance> instances, std::size_t reps = 1);

/// Random prime moduli 3 <= b <= b_max with a uniformly random non-residue
/// a and c uniform in [2, 2b]. Deterministic in seed.
std::vector<QCInstance> sample_nonresidue_instances(std::size_t count, std::uint64_t b_max, std::uint64_t seed);

/// (x^2 mod b, b, b) for uniformly random x in [1, b - 1].
std::vector<QCInstance> sample_satisfiable_instances(const Prime& b, std::size_t count, std::uint64_t seed);

/// Ordinary least-squares slope of log(y) against log(x).
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// JSON array of {test_name, n, statistic, p_value}.
void write_reports_json(std::ostream& out, std::span<const StatReport> reports);
/// `test_name,n,statistic,p_value`.
void write_reports_csv(std::ostream& out, std::span<const StatReport> reports);
/// `op,p,ns_median,op_count,reps`.
void write_bench_csv(std::ostream& out, std::span<const BenchSample> samples);
/// JSON array of {op, p, ns_median, op_count, reps}.
void write_bench_json(std::ostream& out, std::span<const BenchSample> samples);

}  // namespace residue
