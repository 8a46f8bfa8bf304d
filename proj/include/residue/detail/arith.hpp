#pragma once

// Word-size and GMP kernels shared by the modular-arithmetic routines. Each
// algorithm is written once as a template and instantiated for std::uint64_t
// (128-bit intermediate products) and mpz_class.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>

namespace residue::detail {

__extension__ using u128 = unsigned __int128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline mpz_class mul_mod(const mpz_class& a, const mpz_class& b, const mpz_class& m) {
  mpz_class r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_odd(std::uint64_t x) { return (x & 1U) != 0; }
inline bool is_odd(const mpz_class& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }
inline bool is_zero(std::uint64_t x) { return x == 0; }
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline void halve(std::uint64_t& x) { x >>= 1; }
inline void halve(mpz_class& x) { x >>= 1; }

/// Floor square root of a 64-bit value, exact.
inline std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

/// Right-to-left square-and-multiply. Every modular multiplication,
/// squarings included, is added to `mults`.
template <class Int>
Int pow_mod(Int base, Int exp, const Int& m, std::uint64_t& mults) {
  Int result = Int(1) % m;
  base %= m;
  while (!is_zero(exp)) {
    if (is_odd(exp)) {
      result = mul_mod(result, base, m);
      ++mults;
    }
    halve(exp);
    if (!is_zero(exp)) {
      base = mul_mod(base, base, m);
      ++mults;
    }
  }
  return result;
}

/// Euler's criterion for an odd prime p: returns 0, 1 or p-1.
template <class Int>
Int euler_criterion(const Int& a, const Int& p, std::uint64_t& mults) {
  Int e = p - 1;
  halve(e);
  return pow_mod<Int>(Int(a % p), e, p, mults);
}

/// Square root of a nonzero quadratic residue `a` modulo an odd prime `p`
/// (Tonelli-Shanks). The caller has already established that a root exists.
template <class Int>
Int tonelli_shanks(const Int& a, const Int& p, std::uint64_t& mults) {
  const Int one(1);
  const Int p_minus_1 = p - 1;
  if (Int(p % 4) == Int(3)) {
    Int e = p + 1;
    halve(e);
    halve(e);
    return pow_mod<Int>(a, e, p, mults);
  }

  Int q = p_minus_1;
  unsigned s = 0;
  while (!is_odd(q)) {
    halve(q);
    ++s;
  }

  // Smallest quadratic non-residue.
  Int z(2);
  while (euler_criterion<Int>(z, p, mults) != p_minus_1) z += 1;

  Int c = pow_mod<Int>(z, q, p, mults);
  Int half_q_plus = q + 1;
  halve(half_q_plus);
  Int r = pow_mod<Int>(a, half_q_plus, p, mults);
  Int t = pow_mod<Int>(a, q, p, mults);
  unsigned m = s;

  while (t != one) {
    unsigned i = 0;
    Int probe = t;
    while (probe != one) {
      probe = mul_mod(probe, probe, p);
      ++mults;
      ++i;
    }
    Int b = c;
    for (unsigned k = 0; k + i + 1 < m; ++k) {
      b = mul_mod(b, b, p);
      ++mults;
    }
    r = mul_mod(r, b, p);
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    mults += 3;
    m = i;
  }
  return r;
}

}  // namespace residue::detail
