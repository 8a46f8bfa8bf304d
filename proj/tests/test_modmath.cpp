#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "residue/modmath.hpp"

using namespace residue;

namespace {
Natural N(std::uint64_t v) { return Natural(v); }
}  // namespace

TEST(ModPow, Examples) {
  EXPECT_EQ(mod_pow(N(2), N(10), N(1000)), N(24));
  EXPECT_EQ(mod_pow(N(7), N(1), N(13)), N(7));
  EXPECT_EQ(mod_pow(N(3), N(5), N(5)), N(3));
  EXPECT_EQ(mod_pow(N(5), N(0), N(1)), N(0));
  EXPECT_THROW(mod_pow(N(2), N(3), N(0)), DomainError);
}

TEST(ModPow, MatchesRepeatedMultiplication) {
  for (std::uint64_t m = 1; m < 60; ++m) {
    for (std::uint64_t b = 0; b < 30; ++b) {
      for (std::uint64_t e = 0; e < 25; ++e) {
        ASSERT_EQ(mod_pow(N(b), N(e), N(m)), N(oracle::pow_mod(b, e, m))) << b << '^' << e << " mod " << m;
      }
    }
  }
}

TEST(ModPow, MultiplicationCountIsLogarithmic) {
  OpCount ops;
  mod_pow(N(3), N((1ULL << 40) - 1), N(1000003), &ops);
  // 40 set bits: 40 multiplies + 39 squarings.
  EXPECT_EQ(ops.multiplications, 79U);
}

TEST(ModPow, BigModulus) {
  const Natural m = Natural::parse("170141183460469231731687303715884105727");  // 2^127 - 1
  EXPECT_EQ(mod_pow(N(2), N(127), m), N(1));
  EXPECT_EQ(mod_pow(N(3), m, m), N(3));
}

TEST(ModPow, FermatLittleTheorem) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 200) {
    const std::uint64_t p = rng() % 1000000;
    if (!oracle::is_prime(p)) continue;
    const std::uint64_t n = rng();
    EXPECT_EQ(mod_pow(N(n), N(p), N(p)), N(n % p)) << "n=" << n << " p=" << p;
    ++checked;
  }
}

TEST(ModPow, SquaresArePeriodicModP) {
  for (std::uint64_t p = 2; p <= 1000; ++p) {
    if (!oracle::is_prime(p)) continue;
    for (std::uint64_t x = 0; x < p; ++x) {
      ASSERT_EQ(mod_pow(N(x + p), N(2), N(p)), mod_pow(N(x), N(2), N(p)));
    }
  }
}

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(Natural(13)));
  EXPECT_FALSE(is_prime(Natural(1)));
  EXPECT_FALSE(is_prime(Natural(0)));
  EXPECT_FALSE(is_prime(Natural(561)));
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 100000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
}

TEST(IsPrime, HardCompositesAndLargePrimes) {
  for (std::uint64_t c : {561ULL, 1105ULL, 1729ULL, 2465ULL, 3215031751ULL, 2152302898747ULL,
                          3825123056546413051ULL}) {
    EXPECT_FALSE(is_prime(c)) << c;
  }
  EXPECT_TRUE(is_prime(std::uint64_t{2305843009213693951ULL}));   // 2^61 - 1
  EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ULL}));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(std::uint64_t{18446744073709551615ULL}));

  EXPECT_TRUE(is_prime(Natural::parse("618970019642690137449562111")));             // 2^89 - 1
  EXPECT_FALSE(is_prime(Natural::parse("147573952589676412927")));                  // 2^67 - 1
  EXPECT_FALSE(is_prime(Natural::parse("318665857834031151167461")));               // strong psp, 12 bases
  EXPECT_TRUE(is_prime(Natural::parse("170141183460469231731687303715884105727"), 12345));
}

TEST(Prime, ConstructionValidates) {
  EXPECT_NO_THROW(Prime(N(2)));
  EXPECT_THROW(Prime(N(1)), DomainError);
  EXPECT_THROW(Prime(N(91)), DomainError);
  EXPECT_NO_THROW(Prime4m1(N(5)));
  EXPECT_THROW(Prime4m1(N(2)), DomainError);
  EXPECT_THROW(Prime4m1(N(7)), DomainError);
  EXPECT_THROW(Prime4m1(N(25)), DomainError);
}

TEST(PrimesInClass, Examples) {
  EXPECT_EQ(primes_in_class(30, 1, 4), (std::vector<std::uint64_t>{5, 13, 17, 29}));
  EXPECT_EQ(primes_in_class(30, 3, 4), (std::vector<std::uint64_t>{3, 7, 11, 19, 23}));
  EXPECT_TRUE(primes_in_class(2, 1, 4).empty());
  EXPECT_THROW(primes_in_class(30, 4, 4), DomainError);
  EXPECT_THROW(primes_in_class(30, 0, 0), DomainError);
}

TEST(PrimesInClass, AgreesWithTrialDivision) {
  for (std::uint64_t m : {1ULL, 4ULL, 10ULL}) {
    for (std::uint64_t r = 0; r < m; ++r) {
      EXPECT_EQ(primes_in_class(20000, r, m), oracle::primes_in_class(20000, r, m)) << r << " mod " << m;
    }
  }
}

TEST(PrimesInClass, SegmentBoundaries) {
  // Crosses several sieve segments; compare a window against trial division.
  std::vector<std::uint64_t> got;
  for_each_prime(999000, 1001000, [&](std::uint64_t p) { got.push_back(p); });
  std::vector<std::uint64_t> want;
  for (std::uint64_t n = 999000; n <= 1001000; ++n) {
    if (oracle::is_prime(n)) want.push_back(n);
  }
  EXPECT_EQ(got, want);
  EXPECT_EQ(primes_up_to(1000000).size(), 78498U);
}

TEST(FactorialMod, Examples) {
  EXPECT_EQ(factorial_mod(N(4), N(5)), N(4));
  EXPECT_EQ(factorial_mod(N(6), N(13)), N(5));
  EXPECT_EQ(factorial_mod(N(0), N(7)), N(1));
  EXPECT_EQ(factorial_mod(N(3), N(1)), N(0));
  EXPECT_THROW(factorial_mod(N(3), N(0)), DomainError);
}

TEST(FactorialMod, MultiplicationCountIsExact) {
  for (std::uint64_t n : {0ULL, 1ULL, 2ULL, 3ULL, 10ULL, 1000ULL}) {
    OpCount ops;
    factorial_mod(N(n), N(1000003), &ops);
    EXPECT_EQ(ops.multiplications, n == 0 ? 0 : n - 1) << n;
  }
  // No early exit once the product collapses to zero.
  OpCount ops;
  EXPECT_EQ(factorial_mod(N(100), N(7), &ops), N(0));
  EXPECT_EQ(ops.multiplications, 99U);
}

TEST(FactorialMod, AgreesWithDirectProductOnBothPaths) {
  const Natural big = Natural::parse("618970019642690137449562111");
  for (std::uint64_t m = 1; m < 80; ++m) {
    for (std::uint64_t n = 0; n < 40; ++n) {
      ASSERT_EQ(factorial_mod(N(n), N(m)), N(oracle::factorial_mod(n, m)));
    }
  }
  // 25! < 2^89 - 1, so the reduction is the identity and the product is exact.
  Natural exact(1);
  for (std::uint64_t k = 2; k <= 25; ++k) exact *= N(k);
  EXPECT_EQ(factorial_mod(N(25), big), exact);
}

TEST(Wilson, Examples) {
  EXPECT_EQ(wilson_sqrt_minus_one(Prime4m1(N(5))), N(2));
  EXPECT_EQ(wilson_sqrt_minus_one(Prime4m1(N(13))), N(5));
  EXPECT_EQ(wilson_sqrt_minus_one(Prime4m1(N(17))), N(13));
}

TEST(Wilson, OperationCount) {
  for (std::uint64_t p : {5ULL, 13ULL, 10009ULL}) {
    OpCount ops;
    wilson_sqrt_minus_one(Prime4m1(N(p)), &ops);
    EXPECT_EQ(ops.multiplications, (p - 1) / 2 - 1);
  }
}

TEST(Wilson, TheoremHoldsForAllPrimesBelow10k) {
  for (std::uint64_t p : primes_up_to(10000)) {
    ASSERT_EQ(factorial_mod(N(p - 1), N(p)), N(p - 1)) << p;
  }
}

TEST(Wilson, HalfFactorialSquaresToMinusOneAndMatchesTonelli) {
  for (std::uint64_t p : primes_in_class(10000, 1, 4)) {
    const Prime4m1 q{N(p)};
    const Natural w = wilson_sqrt_minus_one(q);
    ASSERT_GT(w, N(0));
    ASSERT_LT(w, N(p));
    ASSERT_EQ((w * w) % N(p), N(p - 1)) << p;
    const auto roots = sqrt_mod_prime(N(p - 1), q);
    ASSERT_TRUE(roots.has_value());
    ASSERT_TRUE(w == roots->lo || w == roots->hi) << p;
  }
}

TEST(SqrtModPrime, Examples) {
  EXPECT_EQ(sqrt_mod_prime(N(4), Prime(N(5))), (RootPair{N(2), N(3)}));
  EXPECT_EQ(sqrt_mod_prime(N(12), Prime(N(13))), (RootPair{N(5), N(8)}));
  EXPECT_FALSE(sqrt_mod_prime(N(2), Prime(N(5))).has_value());
  EXPECT_EQ(sqrt_mod_prime(N(0), Prime(N(7))), (RootPair{N(0), N(0)}));
  EXPECT_EQ(sqrt_mod_prime(N(1), Prime(N(2))), (RootPair{N(1), N(1)}));
  EXPECT_THROW(sqrt_mod_prime(N(5), Prime(N(5))), DomainError);
}

TEST(SqrtModPrime, AgreesWithEnumeration) {
  for (std::uint64_t p = 2; p < 600; ++p) {
    if (!oracle::is_prime(p)) continue;
    const Prime q{N(p)};
    for (std::uint64_t a = 0; a < p; ++a) {
      const auto want = oracle::square_roots(a, p);
      const auto got = sqrt_mod_prime(N(a), q);
      ASSERT_EQ(got.has_value(), !want.empty()) << a << " mod " << p;
      if (got) {
        ASSERT_EQ(got->lo, N(want.front()));
        ASSERT_EQ(got->hi, a == 0 ? N(0) : N(want.back()));
      }
    }
  }
}

TEST(SqrtModPrime, BigPrimesWithDeepTwoAdicValuation) {
  // p - 1 divisible by 2^70 drives the Tonelli-Shanks loop through many rounds.
  Natural p = Natural::parse("1180591620717411303424");  // 2^70
  Natural k(1);
  while (!is_prime(p * k + Natural(1))) k += Natural(1);
  const Prime q{p * k + Natural(1)};
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    const Natural x = Natural(rng()) * Natural(rng()) % q.value();
    const Natural a = x * x % q.value();
    const auto roots = sqrt_mod_prime(a, q);
    ASSERT_TRUE(roots.has_value());
    EXPECT_EQ(roots->lo * roots->lo % q.value(), a);
    EXPECT_EQ(roots->lo + roots->hi, a.is_zero() ? Natural(0) : q.value());
    EXPECT_TRUE(roots->lo == x || roots->hi == x);
  }
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre_symbol(N(4), Prime(N(5))), 1);
  EXPECT_EQ(legendre_symbol(N(0), Prime(N(7))), 0);
  EXPECT_EQ(legendre_symbol(N(2), Prime(N(5))), -1);
  EXPECT_THROW(legendre_symbol(N(1), Prime(N(2))), DomainError);
}

TEST(Legendre, MatchesRootExistence) {
  // Nonzero residues: symbol 1 exactly when roots exist. Zero: symbol 0 and
  // the lone root 0.
  for (std::uint64_t p = 3; p <= 541; ++p) {
    if (!oracle::is_prime(p)) continue;
    const Prime q{N(p)};
    for (std::uint64_t a = 0; a < p; ++a) {
      const int symbol = legendre_symbol(N(a), q);
      const auto roots = sqrt_mod_prime(N(a), q);
      if (a == 0) {
        ASSERT_EQ(symbol, 0);
        ASSERT_EQ(roots, (RootPair{N(0), N(0)}));
      } else {
        ASSERT_EQ(symbol == 1, roots.has_value()) << a << " mod " << p;
      }
    }
  }
}

TEST(NextPrime4m1, FindsSmallestAtOrAbove) {
  EXPECT_EQ(next_prime_4m1(0), 5U);
  EXPECT_EQ(next_prime_4m1(6), 13U);
  EXPECT_EQ(next_prime_4m1(13), 13U);
  EXPECT_EQ(next_prime_4m1(10000), 10009U);
}
