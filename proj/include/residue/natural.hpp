#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "residue/error.hpp"

namespace residue {

/// Arbitrary-precision nonnegative integer.
///
/// Thin value wrapper over a GMP integer that refuses to go negative:
/// subtraction below zero, division by zero and negative construction all
/// throw DomainError. Round-trips losslessly through decimal text.
class Natural {
 public:
  Natural() = default;

  template <std::unsigned_integral T>
  Natural(T v) : v_(static_cast<unsigned long>(v)) {  // NOLINT(implicit)
    static_assert(sizeof(T) <= sizeof(unsigned long));
  }

  template <std::signed_integral T>
  Natural(T v) {  // NOLINT(implicit)
    if (v < 0) throw DomainError("Natural: negative value " + std::to_string(v));
    v_ = static_cast<unsigned long>(v);
  }

  /// Parses plain decimal digits; no sign, no whitespace.
  static Natural parse(std::string_view text);

  /// Adopts a GMP value; throws if negative.
  static Natural from_mpz(mpz_class v);

  std::string str() const { return v_.get_str(10); }

  bool fits_u64() const { return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64; }
  /// Throws DomainError if the value does not fit.
  std::uint64_t to_u64() const;
  double to_double() const { return v_.get_d(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  std::size_t bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
  }
  /// Residue of this value modulo a small modulus.
  std::uint64_t mod_u64(std::uint64_t m) const;

  const mpz_class& mpz() const { return v_; }

  Natural& operator+=(const Natural& o);
  Natural& operator-=(const Natural& o);
  Natural& operator*=(const Natural& o);
  Natural& operator/=(const Natural& o);
  Natural& operator%=(const Natural& o);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n);

 private:
  mpz_class v_{0};
};

/// Floor square root.
Natural isqrt(const Natural& n);
bool is_perfect_square(const Natural& n);

}  // namespace residue
