#include "hve/core/random.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include <sodium.h>

namespace hve {
namespace {

void ensure_sodium() {
  if (sodium_init() < 0) throw std::runtime_error("libsodium initialisation failed");
}

}  // namespace

OsRandom::OsRandom() { ensure_sodium(); }

void OsRandom::fill(std::span<std::uint8_t> out) { randombytes_buf(out.data(), out.size()); }

DeterministicRandom::DeterministicRandom(std::uint64_t seed) {
  ensure_sodium();
  std::uint8_t seed_bytes[8];
  for (int i = 0; i < 8; ++i) seed_bytes[i] = static_cast<std::uint8_t>(seed >> (8 * i));
  static constexpr char kTag[] = "hve/deterministic-random/v1";
  crypto_generichash(key_.data(), key_.size(), seed_bytes, sizeof seed_bytes,
                     reinterpret_cast<const unsigned char*>(kTag), sizeof kTag - 1);
}

DeterministicRandom::DeterministicRandom(std::span<const std::uint8_t, 32> seed) {
  ensure_sodium();
  std::copy(seed.begin(), seed.end(), key_.begin());
}

void DeterministicRandom::refill() {
  std::uint8_t nonce[crypto_stream_chacha20_ietf_NONCEBYTES] = {};
  std::memcpy(nonce, &stream_, sizeof stream_);
  block_.fill(0);
  crypto_stream_chacha20_ietf_xor_ic(block_.data(), block_.data(), block_.size(), nonce,
                                     counter_, key_.data());
  if (++counter_ == 0) ++stream_;
  used_ = 0;
}

void DeterministicRandom::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (used_ == block_.size()) refill();
    const std::size_t take = std::min(out.size() - done, block_.size() - used_);
    std::memcpy(out.data() + done, block_.data() + used_, take);
    used_ += take;
    done += take;
  }
}

}  // namespace hve
