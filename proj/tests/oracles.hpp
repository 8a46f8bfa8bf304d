#pragma once

// Reference implementations used only by the tests. Each one is the naive
// definition (trial division, enumeration, direct products, double loops)
// and shares no code path with the library.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_in_class(std::uint64_t limit, std::uint64_t r, std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (n % m == r && is_prime(n)) out.push_back(n);
  }
  return out;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) r = r * (b % m) % m;
  return r;
}

inline std::uint64_t factorial_mod(std::uint64_t n, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t k = 1; k <= n; ++k) r = r * k % m;
  return r;
}

/// All x in [0, m) with x^2 = a (mod m).
inline std::vector<std::uint64_t> square_roots(std::uint64_t a, std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < m; ++x) {
    if (x * x % m == a % m) out.push_back(x);
  }
  return out;
}

/// Smallest 0 < x < c with x^2 = a (mod b), or 0 when none exists.
inline std::uint64_t smallest_witness(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  for (std::uint64_t x = 1; x < c; ++x) {
    if (x * x % b == a % b) return x;
  }
  return 0;
}

/// All (s, t) with s > t > 0 and s^2 + t^2 = n.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> two_squares(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t s = 1; s * s < n; ++s) {
    for (std::uint64_t t = 1; t < s; ++t) {
      if (s * s + t * t == n) out.emplace_back(s, t);
    }
  }
  return out;
}

struct GaussPoint {
  std::int64_t re;
  std::int64_t im;
};

/// Gaussian primes a + bi with a > 0, b >= 0 and norm <= x, found by testing
/// every lattice point of the quarter disc.
inline std::vector<GaussPoint> gaussian_primes_scan(std::uint64_t x) {
  std::vector<GaussPoint> out;
  for (std::int64_t a = 1; static_cast<std::uint64_t>(a * a) <= x; ++a) {
    for (std::int64_t b = 0; static_cast<std::uint64_t>(a * a + b * b) <= x; ++b) {
      const auto norm = static_cast<std::uint64_t>(a * a + b * b);
      const bool prime = b == 0 ? (is_prime(static_cast<std::uint64_t>(a)) && a % 4 == 3) : is_prime(norm);
      if (prime) out.push_back({a, b});
    }
  }
  return out;
}

inline std::uint64_t disc_points(std::int64_t R) {
  std::int64_t X = 0;
  while ((X + 1) * (X + 1) <= R) ++X;
  std::uint64_t n = 0;
  for (std::int64_t x = -X; x <= X; ++x) {
    for (std::int64_t y = -X; y <= X; ++y) {
      if (x * x + y * y <= R) ++n;
    }
  }
  return n;
}

inline std::uint64_t octant_points(std::int64_t R, bool strict) {
  std::uint64_t n = 0;
  for (std::int64_t x = 1; x * x <= R; ++x) {
    for (std::int64_t y = 1; y <= x; ++y) {
      if (strict && y == x) continue;
      if (x * x + y * y <= R) ++n;
    }
  }
  return n;
}

}  // namespace oracle
