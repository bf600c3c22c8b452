#include "jointinfo/rng.hpp"

namespace jointinfo {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

} // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) noexcept {
  for (auto &word : s_) {
    seed += 0x9e3779b97f4a7c15ULL;
    word = mix64(seed);
  }
}

Xoshiro256::result_type Xoshiro256::operator()() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

} // namespace jointinfo
