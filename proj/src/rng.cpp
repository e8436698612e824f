/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "entlab/rng.hpp"

#include <cmath>

namespace entlab {

std::pair<double, double> SplitMix64::next_gaussian_pair() {
  const double u1 = next_open();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 6.283185307179586476925286766559 * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

uint64_t substream_seed(uint64_t seed, std::string_view stream_id, uint64_t index) {
  uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the stream id
  for (char c : stream_id) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  SplitMix64 mix(seed ^ h);
  mix.next_u64();
  SplitMix64 mix2(mix.next_u64() ^ (index * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
  return mix2.next_u64();
}

}  // namespace entlab
