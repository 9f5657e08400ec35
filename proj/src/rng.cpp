#include "gammagen/rng.hpp"

namespace gammagen {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

UniformSource::UniformSource(std::uint64_t seed) : seed_(seed) {
  std::uint64_t s = seed;
  for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t UniformSource::next_u64() {
  // xoshiro256++ step.
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double UniformSource::next() {
  // (k + 0.5) / 2^53 with k in [0, 2^53), so the value is in (0,1) strictly.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

UniformSource UniformSource::substream(std::uint64_t index) const {
  std::uint64_t s = seed_ ^ (kGolden * (index + 1));
  std::uint64_t derived = splitmix64(s);
  return UniformSource(derived ^ splitmix64(s));
}

}  // namespace gammagen
