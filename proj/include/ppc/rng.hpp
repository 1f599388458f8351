// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>

namespace ppc {

// Identifies one random stream. (master_seed, stream_index, draw index)
// -> value is a pure function, so replicates can be generated in any order,
// on any number of threads, with identical results.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

// SplitMix64 finalizer (Steele/Lea/Flood; constants due to Vigna).
// Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based stream on top of the SplitMix64 sequence: the state walks by
// a fixed odd increment and each output is mix64 of the state word. Streams
// are keyed by hashing (master_seed, stream_index); substream(child) re-keys
// with a child index, giving a deterministic tree of streams.
class SplitStream {
 public:
  SplitStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept
      : key_(derive_key(master_seed, stream_index)), state_(key_) {}

  explicit SplitStream(SeedSpec seed) noexcept
      : SplitStream(seed.master_seed, seed.stream_index) {}

  std::uint64_t next_u64() noexcept {
    state_ += kGolden;
    return mix64(state_);
  }

  // Uniform on [0,1) with 53 random bits.
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased integer in [0, bound). Lemire's multiply-shift with rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    using u128 = unsigned __int128;
    u128 m = static_cast<u128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t cutoff = (0 - bound) % bound;
      while (lo < cutoff) {
        m = static_cast<u128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Independent child stream; does not disturb this stream's draw counter.
  SplitStream substream(std::uint64_t child) const noexcept {
    return SplitStream(mix64(key_ ^ mix64(child + kChildSalt)));
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
  static constexpr std::uint64_t kStreamSalt = 0x8bb84b93962eacc9ull;
  static constexpr std::uint64_t kChildSalt = 0x2545f4914f6cdd1dull;

  explicit SplitStream(std::uint64_t key) noexcept : key_(key), state_(key) {}

  static constexpr std::uint64_t derive_key(std::uint64_t master,
                                            std::uint64_t stream) noexcept {
    return mix64(mix64(master + kGolden) ^ mix64(stream ^ kStreamSalt));
  }

  std::uint64_t key_;
  std::uint64_t state_;
};

}  // namespace ppc
