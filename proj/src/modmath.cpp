#include "residue/modmath.hpp"

#include <array>
#include <random>

#include "residue/detail/arith.hpp"

namespace residue {
namespace {

constexpr std::array<std::uint64_t, 12> kWitnesses64 = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::array<unsigned, 11> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

template <class Int>
bool miller_rabin_round(const Int& n, const Int& d, unsigned s, const Int& witness) {
  std::uint64_t unused = 0;
  const Int n_minus_1 = n - 1;
  Int x = detail::pow_mod<Int>(witness, d, n, unused);
  if (x == Int(1) || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = detail::mul_mod(x, x, n);
    if (x == n_minus_1) return true;
  }
  return false;
}

std::uint64_t add_ops(OpCount* ops, std::uint64_t n) {
  if (ops != nullptr) ops->multiplications += n;
  return n;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses64) {
    if (!miller_rabin_round<std::uint64_t>(n, d, s, a % n)) return false;
  }
  return true;
}

bool is_prime(const Natural& n, std::uint64_t seed) {
  if (n.fits_u64()) return is_prime(n.to_u64());
  const mpz_class& v = n.mpz();
  for (unsigned p : kSmallPrimes) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), p) != 0) return false;
  }
  mpz_class d = v - 1;
  unsigned s = 0;
  while (!detail::is_odd(d)) {
    d >>= 1;
    ++s;
  }
  // Bases drawn uniformly from [2, n - 2].
  std::mt19937_64 rng(seed);
  const mpz_class span = v - 3;
  const std::size_t words = mpz_sizeinbase(span.get_mpz_t(), 2) / 64 + 2;
  for (int round = 0; round < 64; ++round) {
    mpz_class witness = 0;
    for (std::size_t w = 0; w < words; ++w) {
      witness <<= 64;
      witness += static_cast<unsigned long>(rng());
    }
    witness %= span;
    witness += 2;
    if (!miller_rabin_round<mpz_class>(v, d, s, witness)) return false;
  }
  return true;
}

Prime::Prime(Natural value, std::uint64_t seed) : value_(std::move(value)) {
  if (!is_prime(value_, seed)) throw DomainError(value_.str() + " is not prime");
}

Prime4m1::Prime4m1(Natural value, std::uint64_t seed) : prime_(std::move(value), seed) {
  if (prime_.value().mod_u64(4) != 1) {
    throw DomainError(prime_.value().str() + " is not congruent to 1 mod 4");
  }
}

Prime4m1::Prime4m1(const Prime& p) : prime_(p) {
  if (prime_.value().mod_u64(4) != 1) {
    throw DomainError(prime_.value().str() + " is not congruent to 1 mod 4");
  }
}

Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus, OpCount* ops) {
  if (modulus.is_zero()) throw DomainError("mod_pow: modulus is zero");
  std::uint64_t mults = 0;
  Natural out;
  if (modulus.fits_u64() && exp.fits_u64()) {
    const std::uint64_t m = modulus.to_u64();
    out = detail::pow_mod<std::uint64_t>(base.mod_u64(m), exp.to_u64(), m, mults);
  } else {
    out = Natural::from_mpz(detail::pow_mod<mpz_class>(base.mpz(), exp.mpz(), modulus.mpz(), mults));
  }
  add_ops(ops, mults);
  return out;
}

Natural factorial_mod(const Natural& n, const Natural& modulus, OpCount* ops) {
  if (modulus.is_zero()) throw DomainError("factorial_mod: modulus is zero");
  if (!n.fits_u64()) throw DomainError("factorial_mod: n = " + n.str() + " is too large to iterate");
  const std::uint64_t count = n.to_u64();
  std::uint64_t mults = 0;
  Natural out;
  if (modulus.fits_u64()) {
    const std::uint64_t m = modulus.to_u64();
    std::uint64_t acc = 1 % m;
    for (std::uint64_t k = 2; k <= count; ++k) {
      acc = detail::mul_mod(acc, k % m, m);
      ++mults;
    }
    out = acc;
  } else {
    const mpz_class& m = modulus.mpz();
    mpz_class acc = 1;
    mpz_class factor;
    for (std::uint64_t k = 2; k <= count; ++k) {
      factor = static_cast<unsigned long>(k);
      acc = detail::mul_mod(acc, factor, m);
      ++mults;
    }
    out = Natural::from_mpz(acc);
  }
  add_ops(ops, mults);
  return out;
}

Natural wilson_sqrt_minus_one(const Prime4m1& p, OpCount* ops) {
  const Natural half = (p.value() - Natural(1)) / Natural(2);
  return factorial_mod(half, p.value(), ops);
}

int legendre_symbol(const Natural& a, const Prime& p, OpCount* ops) {
  if (!p.value().is_odd()) throw DomainError("legendre_symbol: p must be an odd prime");
  std::uint64_t mults = 0;
  int symbol = 0;
  if (p.value().fits_u64()) {
    const std::uint64_t m = p.value().to_u64();
    const std::uint64_t e = detail::euler_criterion<std::uint64_t>(a.mod_u64(m), m, mults);
    symbol = e == 0 ? 0 : (e == 1 ? 1 : -1);
  } else {
    const mpz_class& m = p.value().mpz();
    const mpz_class e = detail::euler_criterion<mpz_class>(mpz_class(a.mpz() % m), m, mults);
    symbol = sgn(e) == 0 ? 0 : (e == 1 ? 1 : -1);
  }
  add_ops(ops, mults);
  return symbol;
}

std::optional<RootPair> sqrt_mod_prime(const Natural& a, const Prime& p, OpCount* ops) {
  const Natural& pv = p.value();
  if (a >= pv) throw DomainError("sqrt_mod_prime: a = " + a.str() + " is not below p = " + pv.str());
  if (a.is_zero()) return RootPair{Natural(0), Natural(0)};
  if (pv == Natural(2)) return RootPair{Natural(1), Natural(1)};
  if (legendre_symbol(a, p, ops) != 1) return std::nullopt;

  std::uint64_t mults = 0;
  Natural root;
  if (pv.fits_u64()) {
    root = detail::tonelli_shanks<std::uint64_t>(a.to_u64(), pv.to_u64(), mults);
  } else {
    root = Natural::from_mpz(detail::tonelli_shanks<mpz_class>(a.mpz(), pv.mpz(), mults));
  }
  add_ops(ops, mults);
  Natural other = pv - root;
  if (other < root) std::swap(root, other);
  return RootPair{std::move(root), std::move(other)};
}

std::uint64_t next_prime_4m1(std::uint64_t from) {
  std::uint64_t n = from <= 5 ? 5 : from;
  while (n % 4 != 1) ++n;
  while (!is_prime(n)) n += 4;
  return n;
}

}  // namespace residue
