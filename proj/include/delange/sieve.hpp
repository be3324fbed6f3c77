#pragma once

// Segmented sieve over short windows (x, x+y].

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "delange/error.hpp"
#include "delange/primes.hpp"

namespace delange {

class ArithmeticFamily;

inline constexpr std::uint64_t kMaxWindowLength = 100000000;
inline constexpr std::size_t kSieveChunk = std::size_t(1) << 20;

struct Window {
  std::uint64_t x = 0;
  std::uint64_t y = 1;

  std::uint64_t first() const noexcept { return x + 1; }
  std::uint64_t last() const noexcept { return x + y; }
  // InvalidWindow for y = 0 or overflow, WindowTooLarge beyond 1e8.
  void validate() const;
};

struct SieveOptions {
  // 0 means hardware concurrency. Chunk boundaries and the reduction order
  // do not depend on it.
  unsigned workers = 0;
};

class FactoredWindow {
 public:
  FactoredWindow(std::uint64_t offset, std::vector<std::size_t> starts, std::vector<PrimePower> entries);

  std::uint64_t offset() const noexcept { return offset_; }
  std::size_t size() const noexcept { return starts_.size() - 1; }
  // Factorization of offset + 1 + i, primes ascending.
  std::span<const PrimePower> factors(std::size_t i) const;
  // Product of p^a for entry i (wraps on overflow, which cannot happen for
  // a valid factorization).
  std::uint64_t reconstruct(std::size_t i) const;

 private:
  std::uint64_t offset_;
  std::vector<std::size_t> starts_;
  std::vector<PrimePower> entries_;
};

FactoredWindow factor_window(const Window& win, const SieveOptions& opts = {});

// Calls visit(n, factorization) for every n in the window, ascending.
void for_each_factorization(const Window& win,
                            const std::function<void(std::uint64_t, std::span<const PrimePower>)>& visit,
                            const SieveOptions& opts = {});

Complex exact_sum(const ArithmeticFamily& family, const Window& win, const SieveOptions& opts = {});

// Reference factorization by trial division.
std::vector<PrimePower> trial_division(std::uint64_t n);

}  // namespace delange
