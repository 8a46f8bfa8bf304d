#include "residue/twosquares.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "residue/detail/arith.hpp"
#include "residue/export.hpp"

namespace residue {
namespace {

bool square_exceeds(std::uint64_t b, std::uint64_t p) {
  return static_cast<detail::u128>(b) * b > p;
}
bool square_exceeds(const mpz_class& b, const mpz_class& p) { return b * b > p; }

template <class Int>
std::pair<Int, Int> euclid_descent(const Int& p, const Int& z, std::uint64_t& steps) {
  Int a = p;
  Int b = z;
  while (square_exceeds(b, p)) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
    ++steps;
  }
  Int t = a % b;
  ++steps;
  return {b, t};
}

TwoSquareDecomposition make(const Prime4m1& p, Natural s, Natural t) {
  if (s < t) std::swap(s, t);
  const double theta = std::atan2(t.to_double(), s.to_double());
  return TwoSquareDecomposition{p, std::move(s), std::move(t), theta};
}

bool is_square_u64(std::uint64_t n) {
  const std::uint64_t r = detail::isqrt(n);
  return r * r == n;
}

}  // namespace

TwoSquareDecomposition decompose(const Prime4m1& p, OpCount* ops) {
  const Natural& pv = p.value();
  const auto roots = sqrt_mod_prime(pv - Natural(1), p, ops);
  if (!roots) throw std::logic_error("decompose: -1 has no square root modulo " + pv.str());

  std::uint64_t steps = 0;
  Natural s;
  Natural t;
  if (pv.fits_u64()) {
    const auto [s64, t64] = euclid_descent<std::uint64_t>(pv.to_u64(), roots->lo.to_u64(), steps);
    s = s64;
    t = t64;
  } else {
    auto [sm, tm] = euclid_descent<mpz_class>(pv.mpz(), roots->lo.mpz(), steps);
    s = Natural::from_mpz(std::move(sm));
    t = Natural::from_mpz(std::move(tm));
  }
  if (ops != nullptr) ops->multiplications += steps;
  if (s * s + t * t != pv || t.is_zero()) {
    throw std::logic_error("decompose: descent failed for p = " + pv.str());
  }
  return make(p, std::move(s), std::move(t));
}

BruteDecomposition decompose_brute(const Prime4m1& p) {
  const Natural& pv = p.value();
  std::uint64_t visited = 0;
  if (pv.fits_u64()) {
    const std::uint64_t n = pv.to_u64();
    for (std::uint64_t t = 1; 2 * static_cast<detail::u128>(t) * t < n; ++t) {
      ++visited;
      const std::uint64_t rest = n - t * t;
      if (is_square_u64(rest)) {
        return {make(p, Natural(detail::isqrt(rest)), Natural(t)), visited};
      }
    }
  } else {
    for (Natural t(1); Natural(2) * t * t < pv; t += Natural(1)) {
      ++visited;
      const Natural rest = pv - t * t;
      if (is_perfect_square(rest)) return {make(p, isqrt(rest), t), visited};
    }
  }
  throw std::logic_error("decompose_brute: no representation found for " + pv.str());
}

bool verify_congruence_form(const TwoSquareDecomposition& d) {
  const Natural& p = d.p.value();
  const Natural lhs = (d.s * d.s) % p;
  const Natural rhs = (p - (d.t * d.t) % p) % p;
  return lhs == rhs;
}

std::uint64_t uniqueness_check(const Prime4m1& p) {
  const Natural& pv = p.value();
  std::uint64_t count = 0;
  if (pv.fits_u64()) {
    const std::uint64_t n = pv.to_u64();
    for (std::uint64_t t = 1; 2 * static_cast<detail::u128>(t) * t < n; ++t) {
      if (is_square_u64(n - t * t)) ++count;
    }
  } else {
    for (Natural t(1); Natural(2) * t * t < pv; t += Natural(1)) {
      if (is_perfect_square(pv - t * t)) ++count;
    }
  }
  return count;
}

void write_decompositions_csv(std::ostream& out, std::span<const TwoSquareDecomposition> rows) {
  out << "p,s,t,theta\n";
  for (const auto& d : rows) {
    out << d.p.value() << ',' << d.s << ',' << d.t << ',' << format_real(d.theta) << '\n';
  }
}

}  // namespace residue
