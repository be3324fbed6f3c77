#include "delange/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

#include "delange/families.hpp"

namespace delange {

void Window::validate() const {
  if (y == 0) fail(ErrorCode::InvalidWindow, "window length y must be at least 1");
  if (x > std::uint64_t(std::numeric_limits<std::int64_t>::max()) - y)
    fail(ErrorCode::InvalidWindow, "x + y exceeds 2^63 - 1");
  if (y > kMaxWindowLength) {
    std::ostringstream msg;
    msg << "window length " << y << " exceeds " << kMaxWindowLength;
    fail(ErrorCode::WindowTooLarge, msg.str());
  }
}

FactoredWindow::FactoredWindow(std::uint64_t offset, std::vector<std::size_t> starts,
                               std::vector<PrimePower> entries)
    : offset_(offset), starts_(std::move(starts)), entries_(std::move(entries)) {}

std::span<const PrimePower> FactoredWindow::factors(std::size_t i) const {
  if (i >= size()) fail(ErrorCode::ParameterOutOfRange, "index outside the window");
  return std::span<const PrimePower>(entries_).subspan(starts_[i], starts_[i + 1] - starts_[i]);
}

std::uint64_t FactoredWindow::reconstruct(std::size_t i) const {
  std::uint64_t n = 1;
  for (const auto& pp : factors(i))
    for (int k = 0; k < pp.exponent; ++k) n *= pp.prime;
  return n;
}

namespace {

struct Plan {
  Window win;
  std::vector<std::uint64_t> base;
  std::size_t chunks = 0;

  std::uint64_t chunk_lo(std::size_t c) const { return win.first() + std::uint64_t(c) * kSieveChunk; }
  std::size_t chunk_len(std::size_t c) const {
    std::uint64_t lo = chunk_lo(c);
    return std::size_t(std::min<std::uint64_t>(kSieveChunk, win.last() - lo + 1));
  }
};

Plan make_plan(const Window& win) {
  win.validate();
  Plan plan;
  plan.win = win;
  plan.base = primes_up_to(isqrt(win.last()));
  plan.chunks = std::size_t((win.y + kSieveChunk - 1) / kSieveChunk);
  return plan;
}

// Strikes every base prime through [lo, lo+len); calls hit(i, p, e) in
// ascending p for each index, then leaves the prime cofactor in rem.
template <class Hit>
void strike(const std::vector<std::uint64_t>& base, std::uint64_t lo, std::size_t len, std::vector<std::uint64_t>& rem,
            Hit&& hit) {
  rem.resize(len);
  for (std::size_t i = 0; i < len; ++i) rem[i] = lo + i;
  const std::uint64_t hi = lo + len - 1;
  for (std::uint64_t p : base) {
    if (p > hi / p) break;
    std::uint64_t start = (lo + p - 1) / p * p;
    for (std::uint64_t m = start; m <= hi; m += p) {
      std::size_t i = std::size_t(m - lo);
      int e = 0;
      do {
        rem[i] /= p;
        ++e;
      } while (rem[i] % p == 0);
      hit(i, p, e);
    }
  }
}

void factor_chunk(const Plan& plan, std::size_t c, std::vector<std::size_t>& starts, std::vector<PrimePower>& entries) {
  const std::uint64_t lo = plan.chunk_lo(c);
  const std::size_t len = plan.chunk_len(c);
  std::vector<std::uint64_t> rem;
  std::vector<std::pair<std::uint32_t, PrimePower>> raw;
  raw.reserve(len * 3);
  strike(plan.base, lo, len, rem, [&](std::size_t i, std::uint64_t p, int e) {
    raw.push_back({std::uint32_t(i), PrimePower{p, e}});
  });
  for (std::size_t i = 0; i < len; ++i)
    if (rem[i] > 1) raw.push_back({std::uint32_t(i), PrimePower{rem[i], 1}});

  // stable counting sort by index
  starts.assign(len + 1, 0);
  for (const auto& r : raw) ++starts[r.first + 1];
  for (std::size_t i = 0; i < len; ++i) starts[i + 1] += starts[i];
  entries.resize(raw.size());
  std::vector<std::size_t> cursor(starts.begin(), starts.end() - 1);
  for (const auto& r : raw) entries[cursor[r.first]++] = r.second;
}

Complex pairwise_sum(const Complex* v, std::size_t n) {
  if (n <= 8) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += v[i];
    return acc;
  }
  std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

Complex sum_chunk(const ArithmeticFamily& family, const Plan& plan, std::size_t c) {
  const std::uint64_t lo = plan.chunk_lo(c);
  const std::size_t len = plan.chunk_len(c);
  std::vector<std::uint64_t> rem;
  std::vector<Complex> vals(len, Complex(1.0));
  strike(plan.base, lo, len, rem,
         [&](std::size_t i, std::uint64_t p, int e) { vals[i] *= family.local_factor(p, e); });
  for (std::size_t i = 0; i < len; ++i)
    if (rem[i] > 1) vals[i] *= family.local_factor(rem[i], 1);
  return pairwise_sum(vals.data(), len);
}

unsigned worker_count(const SieveOptions& opts, std::size_t chunks) {
  unsigned w = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  return unsigned(std::min<std::size_t>(w, std::max<std::size_t>(chunks, 1)));
}

// Runs job(c) for every chunk on a pool; exceptions are rethrown on the caller.
template <class Job>
void run_chunks(std::size_t chunks, unsigned workers, Job&& job) {
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) job(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t c; (c = next.fetch_add(1)) < chunks;) job(c);
      } catch (...) {
        errors[t] = std::current_exception();
        next = chunks;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

FactoredWindow factor_window(const Window& win, const SieveOptions& opts) {
  const Plan plan = make_plan(win);
  std::vector<std::vector<std::size_t>> starts(plan.chunks);
  std::vector<std::vector<PrimePower>> entries(plan.chunks);
  run_chunks(plan.chunks, worker_count(opts, plan.chunks),
             [&](std::size_t c) { factor_chunk(plan, c, starts[c], entries[c]); });

  std::vector<std::size_t> all_starts;
  std::vector<PrimePower> all_entries;
  all_starts.reserve(std::size_t(win.y) + 1);
  all_starts.push_back(0);
  for (std::size_t c = 0; c < plan.chunks; ++c) {
    const std::size_t base = all_entries.size();
    for (std::size_t i = 1; i < starts[c].size(); ++i) all_starts.push_back(base + starts[c][i]);
    all_entries.insert(all_entries.end(), entries[c].begin(), entries[c].end());
    std::vector<std::size_t>().swap(starts[c]);
    std::vector<PrimePower>().swap(entries[c]);
  }
  return FactoredWindow(win.x, std::move(all_starts), std::move(all_entries));
}

void for_each_factorization(const Window& win,
                            const std::function<void(std::uint64_t, std::span<const PrimePower>)>& visit,
                            const SieveOptions&) {
  const Plan plan = make_plan(win);
  std::vector<std::size_t> starts;
  std::vector<PrimePower> entries;
  for (std::size_t c = 0; c < plan.chunks; ++c) {
    factor_chunk(plan, c, starts, entries);
    const std::uint64_t lo = plan.chunk_lo(c);
    for (std::size_t i = 0; i + 1 < starts.size(); ++i)
      visit(lo + i, std::span<const PrimePower>(entries).subspan(starts[i], starts[i + 1] - starts[i]));
  }
}

Complex exact_sum(const ArithmeticFamily& family, const Window& win, const SieveOptions& opts) {
  const Plan plan = make_plan(win);
  std::vector<Complex> partial(plan.chunks);
  run_chunks(plan.chunks, worker_count(opts, plan.chunks),
             [&](std::size_t c) { partial[c] = sum_chunk(family, plan, c); });
  Complex total = 0.0;
  for (const auto& v : partial) total += v;
  return total;
}

std::vector<PrimePower> trial_division(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

}  // namespace delange
