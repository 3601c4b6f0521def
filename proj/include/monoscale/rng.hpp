#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "monoscale/common.hpp"

namespace monoscale {

// splitmix64 finalizer; mixes seed material into stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives a child seed from a root seed, a purpose label and up to three
// indices. Every random draw in the pipeline comes from a stream seeded this
// way, so results never depend on worker count or call interleaving.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view purpose,
                                 std::uint64_t a = 0, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
  std::uint64_t h = fnv1a64(purpose.data(), purpose.size(), root ^ 0x9e3779b97f4a7c15ull);
  h = mix64(h ^ mix64(a));
  h = mix64(h ^ mix64(b + 0x632be59bd9b4e019ull));
  h = mix64(h ^ mix64(c + 0xd6e8feb86659fd93ull));
  return h;
}

// Deterministic random stream. The engine is std::mt19937_64 (its output
// sequence is fixed by the standard); the mappings to floats are done by
// hand so draws are identical across standard library implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // Multiply-shift; bias is negligible for n << 2^64.
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller, one value per call (the spare is discarded to keep the
  // draw count per sample predictable).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Normal truncated to +/- 2 sigma by resampling.
  double truncated_normal(double stddev) {
    double z = normal();
    while (std::fabs(z) > 2.0) z = normal();
    return z * stddev;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace monoscale
