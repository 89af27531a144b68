#pragma once

#include <array>
#include <cstdint>
#include <limits>

#include <gmpxx.h>

namespace pkgenus {

/// Counter-based generator (Philox4x32-10). The 64-bit seed is the key and
/// the stream id occupies the upper half of the 128-bit counter, so
/// independent substreams come from split() without any shared state.
/// Satisfies UniformRandomBitGenerator.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed = 0, std::uint64_t stream = 0) noexcept
      : seed_(seed), stream_(stream) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// A generator on substream `stream` of the same seed.
  RandomSource split(std::uint64_t stream) const noexcept { return RandomSource(seed_, stream); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;

  /// Uniform integer in [0, bound) of arbitrary size, by rejection.
  mpz_class uniform_below(const mpz_class& bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() noexcept;

  /// One Philox4x32-10 block, exposed for known-answer tests.
  static std::array<std::uint32_t, 4> philox(std::array<std::uint32_t, 4> counter,
                                             std::array<std::uint32_t, 2> key) noexcept;

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

}  // namespace pkgenus
