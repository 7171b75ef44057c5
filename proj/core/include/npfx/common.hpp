#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace npfx {

// Error taxonomy. The CLI maps these onto exit codes, so throw the most
// specific one that applies.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Violated operation contract (shapes, preconditions).
struct ShapeError : Error {
  using Error::Error;
};
// Bad files, bad containers, bad datasets.
struct DataError : Error {
  using Error::Error;
};
// Solver/optimization did not reach its target.
struct NumericError : Error {
  using Error::Error;
};
// Invalid configuration (unknown keys, out-of-range values).
struct ConfigError : Error {
  using Error::Error;
};

// Deterministic, platform-independent RNG (splitmix64 core). All randomness
// in the project flows through this so runs are reproducible bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    // Modulo bias is negligible for n << 2^64.
    return n == 0 ? 0 : next_u64() % n;
  }

  // Standard normal via Box-Muller (one draw per pair, spare discarded so the
  // stream layout stays trivially predictable).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Derive a decorrelated child seed from a parent seed and a stream tag.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ull * (tag + 1)));
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
};

// FNV-1a over raw bytes; used to fingerprint masks and parameter blocks.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

// Runs fn(i) for i in [0,n) on up to `jobs` threads. Work items must be
// independent; callers that need a deterministic result combine per-index
// outputs in index order afterwards.
inline void parallel_for(std::size_t n, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
  if (jobs == 0) jobs = std::thread::hardware_concurrency();
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  unsigned workers = unsigned(std::min<std::size_t>(jobs, n));
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace npfx
