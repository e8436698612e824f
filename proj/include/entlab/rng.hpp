/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

namespace entlab {

/// SplitMix64: a counter-based 64-bit generator (Steele, Lea, Flood 2014).
/// Every output is a pure mix of seed + n * golden gamma, so substreams can
/// be derived by hashing and trials replay identically in any order.
/// Connected std:: engines are avoided on purpose: their distributions are
/// implementation-defined, and the harness promises byte-identical runs.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1): never returns an exact 0 (safe under log).
  double next_open() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal pair (Box-Muller).
  std::pair<double, double> next_gaussian_pair();

  /// Uniform integer in [0, n).
  uint64_t next_below(uint64_t n) { return next_u64() % n; }

 private:
  uint64_t state_;
};

/// Seed for the substream of (seed, stream id, trial index); runs SplitMix64
/// over an FNV-1a hash of the id folded with seed and index.
uint64_t substream_seed(uint64_t seed, std::string_view stream_id, uint64_t index);

}  // namespace entlab
