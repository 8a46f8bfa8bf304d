#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "residue/natural.hpp"

namespace residue {

/// Tally of modular multiplications performed by an operation. Every
/// counted routine takes an optional `OpCount*` and adds to it.
struct OpCount {
  std::uint64_t multiplications = 0;
};

/// Seed for the randomized Miller-Rabin rounds used above 2^64. Results
/// below 2^64 never depend on it.
inline constexpr std::uint64_t kDefaultPrimalitySeed = 0x9e3779b97f4a7c15ULL;

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Deterministic below 2^64; 64 seeded random Miller-Rabin rounds above
/// (error probability < 2^-128).
bool is_prime(const Natural& n, std::uint64_t seed = kDefaultPrimalitySeed);

/// A natural number that passed is_prime at construction.
class Prime {
 public:
  explicit Prime(Natural value, std::uint64_t seed = kDefaultPrimalitySeed);
  const Natural& value() const { return value_; }
  operator const Natural&() const { return value_; }  // NOLINT(implicit)

 private:
  Natural value_;
};

/// A prime congruent to 1 mod 4. The prime 2 is excluded.
class Prime4m1 {
 public:
  explicit Prime4m1(Natural value, std::uint64_t seed = kDefaultPrimalitySeed);
  explicit Prime4m1(const Prime& p);
  const Prime& prime() const { return prime_; }
  const Natural& value() const { return prime_.value(); }
  operator const Prime&() const { return prime_; }  // NOLINT(implicit)

 private:
  Prime prime_;
};

/// base^exp mod modulus by square-and-multiply, O(log exp) multiplications.
/// Throws DomainError for modulus 0.
Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus,
                OpCount* ops = nullptr);

/// n! mod modulus as the straight product 2 * 3 * ... * n. Performs exactly
/// max(n - 1, 0) modular multiplications and takes no shortcuts, even when
/// the product has already collapsed to zero.
Natural factorial_mod(const Natural& n, const Natural& modulus, OpCount* ops = nullptr);

/// ((p - 1) / 2)! mod p, a square root of -1 modulo p. The factorial value
/// is returned as computed; it may be either of the two roots.
Natural wilson_sqrt_minus_one(const Prime4m1& p, OpCount* ops = nullptr);

/// The two square roots {lo, hi} of a residue, lo <= hi, hi = p - lo.
/// For a = 0 both members are 0.
struct RootPair {
  Natural lo;
  Natural hi;
  friend bool operator==(const RootPair&, const RootPair&) = default;
};

/// Square root modulo a prime (Tonelli-Shanks); empty for non-residues.
/// Requires a < p.
std::optional<RootPair> sqrt_mod_prime(const Natural& a, const Prime& p, OpCount* ops = nullptr);

/// Legendre symbol (a/p) via Euler's criterion. p must be odd.
int legendre_symbol(const Natural& a, const Prime& p, OpCount* ops = nullptr);

// Prime streams (segmented sieve of Eratosthenes).

/// Calls `fn` for every prime in [lo, hi], ascending.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// All primes p <= limit with p = residue (mod modulus), ascending.
std::vector<std::uint64_t> primes_in_class(std::uint64_t limit, std::uint64_t residue,
                                           std::uint64_t modulus);

/// Smallest prime p >= from with p = 1 (mod 4).
std::uint64_t next_prime_4m1(std::uint64_t from);

}  // namespace residue
