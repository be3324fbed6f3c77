#include "delange/primes.hpp"

#include <algorithm>
#include <cmath>

namespace delange {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = std::uint64_t(std::sqrt(double(n)));
  while (r > 0 && (r > n / r)) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  const std::uint64_t root = isqrt(limit);

  // small primes for striking segments
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }

  constexpr std::uint64_t kSegment = 1u << 20;
  std::vector<char> seg(kSegment);
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min(limit, lo + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t m = start; m <= hi; m += p) seg[m - lo] = 0;
    }
    for (std::uint64_t n = lo; n <= hi; ++n)
      if (seg[n - lo]) out.push_back(n);
  }
  return out;
}

}  // namespace delange
