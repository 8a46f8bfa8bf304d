#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>

#include "residue/modmath.hpp"
#include "residue/natural.hpp"

namespace residue {

/// p = s^2 + t^2 with s > t > 0; theta = atan(t / s) in (0, pi/4).
struct TwoSquareDecomposition {
  Prime4m1 p;
  Natural s;
  Natural t;
  double theta = 0.0;
};

/// Hermite-Serret descent: take z with z^2 = -1 (mod p) from sqrt_mod_prime,
/// run Euclid on (p, z) and stop at the first two remainders below sqrt(p).
/// Multiplications and division steps are added to `ops`.
TwoSquareDecomposition decompose(const Prime4m1& p, OpCount* ops = nullptr);

struct BruteDecomposition {
  TwoSquareDecomposition decomposition;
  std::uint64_t visited = 0;
};

/// Scans t = 1, 2, ... until p - t^2 is a perfect square.
BruteDecomposition decompose_brute(const Prime4m1& p);

/// s^2 = p - t^2 (mod p), the congruence restatement of p = s^2 + t^2.
bool verify_congruence_form(const TwoSquareDecomposition& d);

/// Number of pairs s > t > 0 with s^2 + t^2 = p, by exhaustive scan.
std::uint64_t uniqueness_check(const Prime4m1& p);

/// CSV with header `p,s,t,theta`; theta to 12 significant digits.
void write_decompositions_csv(std::ostream& out, std::span<const TwoSquareDecomposition> rows);

}  // namespace residue
