#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace hve {

/// Source of uniformly random bytes. Stateful: one per thread.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

/// Operating-system entropy (getrandom / urandom through libsodium).
class OsRandom final : public RandomSource {
 public:
  OsRandom();
  void fill(std::span<std::uint8_t> out) override;
};

/// ChaCha20 keystream keyed from a seed. Reproducible; for tests and
/// test-mode CLI runs only.
class DeterministicRandom final : public RandomSource {
 public:
  explicit DeterministicRandom(std::uint64_t seed);
  explicit DeterministicRandom(std::span<const std::uint8_t, 32> seed);

  void fill(std::span<std::uint8_t> out) override;

 private:
  void refill();

  std::array<std::uint8_t, 32> key_{};
  std::array<std::uint8_t, 64> block_{};
  std::size_t used_ = 64;
  std::uint32_t counter_ = 0;
  std::uint32_t stream_ = 0;
};

}  // namespace hve
