#include <algorithm>
#include <vector>

#include "residue/detail/arith.hpp"
#include "residue/modmath.hpp"

namespace residue {
namespace {

constexpr std::uint64_t kSegmentSize = 1U << 18;

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn) {
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi < lo) return;
  const auto base = base_primes(detail::isqrt(hi));
  std::vector<char> segment;
  for (std::uint64_t seg_lo = lo; seg_lo <= hi;) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegmentSize - 1);
    segment.assign(seg_hi - seg_lo + 1, 1);
    for (std::uint64_t p : base) {
      if (p * p > seg_hi) break;
      std::uint64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= seg_hi; j += p) segment[j - seg_lo] = 0;
    }
    for (std::uint64_t i = 0; i < segment.size(); ++i) {
      if (segment[i] != 0) fn(seg_lo + i);
    }
    if (seg_hi == hi) break;
    seg_lo = seg_hi + 1;
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for_each_prime(2, limit, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

std::vector<std::uint64_t> primes_in_class(std::uint64_t limit, std::uint64_t residue,
                                           std::uint64_t modulus) {
  if (modulus == 0) throw DomainError("primes_in_class: modulus is zero");
  if (residue >= modulus) throw DomainError("primes_in_class: residue must be below modulus");
  std::vector<std::uint64_t> out;
  for_each_prime(2, limit, [&](std::uint64_t p) {
    if (p % modulus == residue) out.push_back(p);
  });
  return out;
}

}  // namespace residue
