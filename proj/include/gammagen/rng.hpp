#ifndef GAMMAGEN_RNG_HPP
#define GAMMAGEN_RNG_HPP

#include <array>
#include <cstdint>

namespace gammagen {

/// Seedable source of uniform variates on the open interval (0,1).
///
/// The underlying generator is xoshiro256++ (period 2^256 - 1), seeded
/// through a splitmix64 expansion so that any 64-bit seed, including 0,
/// yields a well-mixed state. Substreams are derived by remixing
/// (seed, index), so workers can be given independent streams without
/// jump-ahead bookkeeping.
///
/// A UniformSource is single-owner: it is cheap to copy, but two copies
/// advance independently. Share work across threads by giving each worker
/// its own substream, never the same object.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed);

  /// Next uniform, strictly inside (0,1). The 53 high bits of the raw
  /// output form the mantissa, offset by half an ulp so 0 is unreachable
  /// and ln(next()) is always finite.
  double next();

  /// Raw 64-bit generator output.
  std::uint64_t next_u64();

  /// Independent stream derived from (seed, index). Pure function of the
  /// original seed; draws taken from this source do not affect it.
  UniformSource substream(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

}  // namespace gammagen

#endif
