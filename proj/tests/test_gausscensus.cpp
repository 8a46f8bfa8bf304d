#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "residue/gausscensus.hpp"
#include "residue/twosquares.hpp"

using namespace residue;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;

std::vector<std::pair<std::int64_t, std::int64_t>> coords(const std::vector<GaussianInteger>& v) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& g : v) out.emplace_back(g.re, g.im);
  return out;
}
}  // namespace

TEST(GaussianInteger, NormAndArg) {
  const auto g = GaussianInteger::make(3, -4);
  EXPECT_EQ(g.norm, 25U);
  EXPECT_NEAR(g.arg, 2 * std::numbers::pi - std::atan2(4.0, 3.0), 1e-15);
  EXPECT_EQ(GaussianInteger::make(-1, 0).arg, std::numbers::pi);
  EXPECT_EQ(GaussianInteger::make(2, 0).arg, 0.0);
}

TEST(Enumerate, Examples) {
  const std::vector<std::pair<std::int64_t, std::int64_t>> want{{1, 1}, {2, 1}, {1, 2}, {3, 0},
                                                                {3, 2}, {2, 3}, {4, 1}, {1, 4}};
  EXPECT_EQ(coords(enumerate_gaussian_primes(25)), want);
  EXPECT_EQ(enumerate_gaussian_primes(100).size(), 25U);
  EXPECT_EQ(coords(enumerate_gaussian_primes(2)), (std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}}));
  EXPECT_THROW(enumerate_gaussian_primes(1), DomainError);
}

TEST(Enumerate, MatchesLatticeScan) {
  for (std::uint64_t x : {2ULL, 3ULL, 9ULL, 10ULL, 49ULL, 500ULL, 5000ULL, 20000ULL}) {
    auto got = coords(enumerate_gaussian_primes(x));
    std::vector<std::pair<std::int64_t, std::int64_t>> want;
    for (const auto& g : oracle::gaussian_primes_scan(x)) want.emplace_back(g.re, g.im);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << x;
  }
}

TEST(Enumerate, OrderedByNormThenArg) {
  const auto v = enumerate_gaussian_primes(100000);
  for (std::size_t i = 1; i < v.size(); ++i) {
    ASSERT_TRUE(v[i - 1].norm < v[i].norm || (v[i - 1].norm == v[i].norm && v[i - 1].arg < v[i].arg)) << i;
  }
  for (const auto& g : v) {
    ASSERT_EQ(g.norm, static_cast<std::uint64_t>(g.re * g.re + g.im * g.im));
    ASSERT_GE(g.arg, 0.0);
    ASSERT_LT(g.arg, kHalfPi);
  }
}

TEST(Enumerate, CountFormula) {
  for (std::uint64_t x : {2ULL, 3ULL, 8ULL, 9ULL, 100ULL, 1000ULL, 123457ULL}) {
    const std::uint64_t split = primes_in_class(x, 1, 4).size();
    const std::uint64_t inert = primes_in_class(static_cast<std::uint64_t>(std::sqrt(double(x))), 3, 4).size();
    EXPECT_EQ(enumerate_gaussian_primes(x).size(), 1 + 2 * split + inert) << x;
  }
}

TEST(Enumerate, LinkedToDecomposition) {
  for (const auto& g : enumerate_gaussian_primes(20000)) {
    if (g.im == 0 || g.re == g.im) continue;
    const auto d = decompose(Prime4m1(Natural(g.norm)));
    const auto hi = static_cast<std::uint64_t>(std::max(g.re, g.im));
    const auto lo = static_cast<std::uint64_t>(std::min(g.re, g.im));
    ASSERT_EQ(d.s, Natural(hi));
    ASSERT_EQ(d.t, Natural(lo));
  }
}

TEST(Enumerate, IndependentOfWorkerCount) {
  const auto one = enumerate_gaussian_primes(300000, 1);
  for (unsigned w : {2U, 3U, 8U}) EXPECT_EQ(enumerate_gaussian_primes(300000, w), one) << w;
}

TEST(CountPiZi, Examples) {
  const auto c25 = count_pi_zi(25);
  EXPECT_EQ(c25.count, 8U);
  EXPECT_NEAR(c25.ratio, 1.030, 5e-4);
  const auto c100 = count_pi_zi(100);
  EXPECT_EQ(c100.count, 25U);
  EXPECT_NEAR(c100.ratio, 1.151, 5e-4);
  EXPECT_THROW(count_pi_zi(2), DomainError);
}

TEST(SectorCount, Examples) {
  EXPECT_EQ(sector_count(25, 0.0, kHalfPi), 8U);
  EXPECT_EQ(sector_count(25, 0.0, 0.1), 1U);
  EXPECT_EQ(sector_count(25, std::numbers::pi / 4, std::numbers::pi / 4 + 1e-9), 1U);
  EXPECT_THROW(sector_count(25, 0.5, 0.5), DomainError);
  EXPECT_THROW(sector_count(25, 0.6, 0.5), DomainError);
  EXPECT_THROW(sector_count(25, -0.1, 0.5), DomainError);
}

TEST(SectorCount, Additivity) {
  const auto census = enumerate_gaussian_primes(50000);
  for (double mid : {0.1, 0.3, 0.7, std::numbers::pi / 4, 1.2}) {
    const double next = std::nextafter(mid, 10.0);
    for (const auto& g : census) ASSERT_FALSE(g.arg > mid && g.arg < next);
    EXPECT_EQ(sector_count(census, 0.0, mid) + sector_count(census, next, kHalfPi),
              sector_count(census, 0.0, kHalfPi));
  }
}

TEST(SectorCount, ExpectedShare) {
  EXPECT_NEAR(expected_sector_count(1000000, 0.0, kHalfPi), 1e6 / std::log(1e6), 1e-6);
  EXPECT_GT(expected_sector_count(1000, 0.1, 0.2), 0.0);
}

TEST(SectorHistogram, SmallExample) {
  const auto h = sector_histogram(25, 2);
  EXPECT_EQ(h.counts, (std::vector<std::uint64_t>{5, 3}));
  EXPECT_EQ(h.total, 8U);
  ASSERT_EQ(h.bin_edges.size(), 3U);
  EXPECT_EQ(h.bin_edges.front(), 0.0);
  EXPECT_EQ(h.bin_edges.back(), kHalfPi);
  EXPECT_DOUBLE_EQ(h.expected(0), 4.0);
  EXPECT_THROW(sector_histogram(25, 1), DomainError);
}

TEST(SectorHistogram, ConservationAndAxisExclusion) {
  for (std::uint64_t x : {25ULL, 1000ULL, 77777ULL}) {
    for (std::size_t bins : {2U, 5U, 16U, 33U}) {
      const auto h = sector_histogram(x, bins);
      std::uint64_t sum = 0;
      for (auto c : h.counts) sum += c;
      ASSERT_EQ(sum, h.total);
      ASSERT_EQ(h.total, enumerate_gaussian_primes(x).size());
      for (std::size_t k = 1; k < h.bin_edges.size(); ++k) ASSERT_LT(h.bin_edges[k - 1], h.bin_edges[k]);

      const auto ex = sector_histogram(x, bins, {.exclude_axis = true});
      const auto inert = primes_in_class(static_cast<std::uint64_t>(std::sqrt(double(x))), 3, 4).size();
      ASSERT_EQ(ex.total + inert, h.total);
      ASSERT_EQ(ex.counts[0] + inert, h.counts[0]);
    }
  }
}

TEST(SectorHistogram, IndependentOfWorkerCount) {
  const auto one = sector_histogram(200000, 16, {.workers = 1});
  const auto many = sector_histogram(200000, 16, {.workers = 6});
  EXPECT_EQ(one.counts, many.counts);
}

TEST(CensusCsv, Format) {
  std::ostringstream out;
  const auto census = enumerate_gaussian_primes(5);
  write_census_csv(out, census);
  EXPECT_EQ(out.str(),
            "re,im,norm,arg\n"
            "1,1,2,0.785398163397\n"
            "2,1,5,0.463647609001\n"
            "1,2,5,1.10714871779\n");
}

TEST(HistogramCsv, Format) {
  std::ostringstream out;
  write_histogram_csv(out, sector_histogram(25, 2));
  EXPECT_EQ(out.str(),
            "bin_lo,bin_hi,count,expected\n"
            "0,0.785398163397,5,4\n"
            "0.785398163397,1.57079632679,3,4\n");
}
