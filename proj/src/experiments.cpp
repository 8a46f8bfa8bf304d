#include "residue/experiments.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "residue/detail/parallel.hpp"
#include "residue/export.hpp"
#include "residue/gausscensus.hpp"
#include "residue/twosquares.hpp"

namespace residue {
namespace {

using Clock = std::chrono::steady_clock;

volatile std::uint64_t g_sink = 0;

std::uint64_t median(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

/// Runs `op` once instrumented for its op count, then `reps` times under
/// the clock.
BenchSample measure(const std::string& label, std::uint64_t magnitude, std::size_t reps,
                    const std::function<std::uint64_t(OpCount*)>& op) {
  OpCount ops;
  g_sink = g_sink + op(&ops);
  std::vector<std::uint64_t> times;
  times.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    g_sink = g_sink + op(nullptr);
    const auto t1 = Clock::now();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    times.push_back(static_cast<std::uint64_t>(std::max<std::int64_t>(ns, 1)));
  }
  return BenchSample{label, magnitude, median(std::move(times)), ops.multiplications, reps};
}

}  // namespace

std::vector<StatReport> randomness_suite(std::uint64_t p_limit, RandomnessOptions opts) {
  if (p_limit < 10000) throw DomainError("randomness_suite: p_limit must be at least 10^4");

  const auto primes = primes_in_class(p_limit, 1, 4);
  std::vector<double> theta(primes.size());
  std::vector<double> s_norm(primes.size());
  std::vector<double> wilson(primes.size());
  detail::parallel_chunks(primes.size(), opts.workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Prime4m1 p{Natural(primes[i])};
      const auto d = decompose(p);
      const double pd = static_cast<double>(primes[i]);
      theta[i] = d.theta;
      s_norm[i] = std::clamp(d.s.to_double() / std::sqrt(pd), std::numbers::sqrt2 / 2, 1.0);
      const auto roots = sqrt_mod_prime(p.value() - Natural(1), p);
      wilson[i] = roots->lo.to_double() / pd;
    }
  });

  const double quarter_pi = std::numbers::pi / 4;
  const auto s_law = [](double v) { return std::clamp(1.0 - 4.0 * std::acos(v) / std::numbers::pi, 0.0, 1.0); };

  std::vector<StatReport> reports;
  reports.push_back(chi_square_uniform(theta, 0.0, quarter_pi, opts.bins, "two_square_angle_chi2"));
  reports.push_back(ks_uniform(theta, 0.0, quarter_pi, "two_square_angle_ks"));
  reports.push_back(chi_square_cdf(s_norm, std::numbers::sqrt2 / 2, 1.0, opts.bins, s_law, "s_over_sqrt_p_chi2"));
  reports.push_back(ks_test(s_norm, s_law, "s_over_sqrt_p_ks"));
  reports.push_back(chi_square_uniform(wilson, 0.0, 0.5, opts.bins, "wilson_root_chi2"));
  reports.push_back(ks_uniform(wilson, 0.0, 0.5, "wilson_root_ks"));

  const auto census = enumerate_gaussian_primes(p_limit, opts.workers);
  auto hist = sector_histogram(census, p_limit, opts.bins, opts.exclude_axis);
  std::vector<double> expected(hist.bins());
  for (std::size_t k = 0; k < hist.bins(); ++k) expected[k] = hist.expected(k);
  auto sector = chi_square_counts("gaussian_sector_chi2", hist.counts, expected);
  sector.bins = std::move(hist);
  reports.push_back(std::move(sector));

  std::vector<double> args;
  args.reserve(census.size());
  for (const auto& g : census) {
    if (opts.exclude_axis && g.arg == 0.0) continue;
    args.push_back(g.arg);
  }
  reports.push_back(ks_uniform(args, 0.0, std::numbers::pi / 2, "gaussian_arg_ks"));
  return reports;
}

const ScalingFit& SqrtBenchmark::fit(const std::string& op_label) const {
  for (const auto& f : fits) {
    if (f.op_label == op_label) return f;
  }
  throw std::out_of_range("no scaling fit for " + op_label);
}

SqrtBenchmark bench_sqrt_methods(std::span<const Prime4m1> prime_grid, std::size_t reps) {
  if (prime_grid.size() < 4) throw DomainError("bench_sqrt_methods: grid needs at least 4 primes");
  if (reps < 5) throw DomainError("bench_sqrt_methods: need at least 5 repetitions");
  std::vector<std::uint64_t> ps;
  for (const auto& p : prime_grid) ps.push_back(p.value().to_u64());
  if (!std::is_sorted(ps.begin(), ps.end()) || std::adjacent_find(ps.begin(), ps.end()) != ps.end()) {
    throw DomainError("bench_sqrt_methods: grid must be strictly ascending");
  }
  // Decades counted by decimal length, so 10^4 + beta .. 10^7 + beta qualifies.
  if (std::to_string(ps.back()).size() < std::to_string(ps.front()).size() + 3) {
    throw DomainError("bench_sqrt_methods: grid must span at least 3 decades");
  }

  SqrtBenchmark out;
  const std::vector<std::pair<std::string, std::function<std::uint64_t(const Prime4m1&, OpCount*)>>> methods = {
      {kOpWilson, [](const Prime4m1& p, OpCount* ops) { return wilson_sqrt_minus_one(p, ops).mod_u64(1ULL << 32); }},
      {kOpTonelli,
       [](const Prime4m1& p, OpCount* ops) {
         return sqrt_mod_prime(p.value() - Natural(1), p, ops)->lo.mod_u64(1ULL << 32);
       }},
      {kOpDecompose, [](const Prime4m1& p, OpCount* ops) { return decompose(p, ops).s.mod_u64(1ULL << 32); }},
      {kOpDecomposeBrute,
       [](const Prime4m1& p, OpCount* ops) {
         const auto r = decompose_brute(p);
         if (ops != nullptr) ops->multiplications += r.visited;
         return r.decomposition.s.mod_u64(1ULL << 32);
       }},
  };

  for (const auto& [label, fn] : methods) {
    std::vector<double> xs, op_counts, times;
    for (std::size_t i = 0; i < prime_grid.size(); ++i) {
      const auto& p = prime_grid[i];
      auto sample = measure(label, ps[i], reps, [&](OpCount* ops) { return fn(p, ops); });
      xs.push_back(static_cast<double>(ps[i]));
      op_counts.push_back(static_cast<double>(std::max<std::uint64_t>(sample.op_count, 1)));
      times.push_back(static_cast<double>(sample.wall_time_ns));
      out.samples.push_back(std::move(sample));
    }
    out.fits.push_back(ScalingFit{label, fit_loglog_slope(xs, op_counts), fit_loglog_slope(xs, times)});
  }
  return out;
}

std::vector<Prime4m1> decade_prime_grid(unsigned first_exponent, unsigned last_exponent) {
  std::vector<Prime4m1> grid;
  for (unsigned k = first_exponent; k <= last_exponent; ++k) {
    const auto base = static_cast<std::uint64_t>(std::llround(std::pow(10.0, k)));
    grid.emplace_back(Natural(next_prime_4m1(base)));
  }
  return grid;
}

std::vector<BenchSample> bench_search_cost(std::span<const QCInstance> instances, std::size_t reps) {
  if (instances.empty()) throw DomainError("bench_search_cost: no instances");
  if (reps < 1) throw DomainError("bench_search_cost: need at least one repetition");
  std::vector<BenchSample> out;
  out.reserve(instances.size());
  for (const auto& inst : instances) {
    if (inst.c() < Natural(2)) throw DomainError("bench_search_cost: instance has an empty search range (c < 2)");
    out.push_back(measure(kOpBruteForce, inst.b().to_u64(), reps, [&](OpCount* ops) {
      const auto r = brute_force(inst);
      if (ops != nullptr) ops->multiplications += r.visited;
      return r.visited;
    }));
  }
  return out;
}

std::vector<QCInstance> sample_nonresidue_instances(std::size_t count, std::uint64_t b_max, std::uint64_t seed) {
  const auto primes = [&] {
    auto all = primes_up_to(b_max);
    all.erase(all.begin());  // drop 2: every residue mod 2 is a square
    return all;
  }();
  if (primes.empty()) throw DomainError("sample_nonresidue_instances: b_max must be at least 3");
  std::mt19937_64 rng(seed);
  std::vector<QCInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t b = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
    const Prime p{Natural(b)};
    std::uniform_int_distribution<std::uint64_t> pick_a(1, b - 1);
    std::uint64_t a = pick_a(rng);
    while (legendre_symbol(Natural(a), p) != -1) a = pick_a(rng);
    const std::uint64_t c = std::uniform_int_distribution<std::uint64_t>(2, 2 * b)(rng);
    out.emplace_back(Natural(a), Natural(b), Natural(c));
  }
  return out;
}

std::vector<QCInstance> sample_satisfiable_instances(const Prime& b, std::size_t count, std::uint64_t seed) {
  const std::uint64_t m = b.value().to_u64();
  if (m < 3) throw DomainError("sample_satisfiable_instances: modulus must be an odd prime");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, m - 1);
  std::vector<QCInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t x = pick(rng);
    out.emplace_back(Natural(x) * Natural(x), b.value(), b.value());
  }
  return out;
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("fit_loglog_slope: need >= 2 paired points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw DomainError("fit_loglog_slope: values must be positive");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw DomainError("fit_loglog_slope: x values are all equal");
  return sxy / sxx;
}

void write_reports_json(std::ostream& out, std::span<const StatReport> reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    arr.push_back({{"test_name", r.test_name}, {"n", r.sample_size}, {"statistic", r.statistic}, {"p_value", r.p_value}});
  }
  out << arr.dump(2) << '\n';
}

void write_reports_csv(std::ostream& out, std::span<const StatReport> reports) {
  out << "test_name,n,statistic,p_value\n";
  for (const auto& r : reports) {
    out << r.test_name << ',' << r.sample_size << ',' << format_real(r.statistic) << ',' << format_real(r.p_value)
        << '\n';
  }
}

void write_bench_csv(std::ostream& out, std::span<const BenchSample> samples) {
  out << "op,p,ns_median,op_count,reps\n";
  for (const auto& s : samples) {
    out << s.op_label << ',' << s.input_magnitude << ',' << s.wall_time_ns << ',' << s.op_count << ','
        << s.repetitions << '\n';
  }
}

void write_bench_json(std::ostream& out, std::span<const BenchSample> samples) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : samples) {
    arr.push_back({{"op", s.op_label},
                   {"p", s.input_magnitude},
                   {"ns_median", s.wall_time_ns},
                   {"op_count", s.op_count},
                   {"reps", s.repetitions}});
  }
  out << arr.dump(2) << '\n';
}

}  // namespace residue
