#ifndef JOINTINFO_RNG_HPP_
#define JOINTINFO_RNG_HPP_

#include <cstdint>
#include <limits>

namespace jointinfo {

/// SplitMix64 finalizer (Stafford variant 13 constants).
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// xoshiro256** 1.0 (Blackman & Vigna), state filled from a SplitMix64 sequence.
class Xoshiro256 {
public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t s_[4];
};

/// Seeding for a study. Replicate (or trace point) i draws from stream i,
/// whose seed is mix64(mix64(master_seed) ^ mix64(i ^ kStreamSalt)); draws
/// therefore depend only on (master_seed, i), never on scheduling.
struct RngSpec {
  static constexpr std::uint64_t kStreamSalt = 0xd1b54a32d192ed03ULL;

  std::uint64_t master_seed = 0;

  std::uint64_t stream_seed(std::uint64_t stream) const noexcept {
    return mix64(mix64(master_seed) ^ mix64(stream ^ kStreamSalt));
  }
  Xoshiro256 engine(std::uint64_t stream) const noexcept {
    return Xoshiro256(stream_seed(stream));
  }
};

} // namespace jointinfo

#endif // JOINTINFO_RNG_HPP_
