#pragma once

#include <cstdint>
#include <vector>

namespace delange {

struct PrimePower {
  std::uint64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// floor(sqrt(n)) exactly.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace delange
