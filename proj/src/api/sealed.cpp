#include "hve/api/sealed.hpp"

#include <array>

#include <sodium.h>

#include "hve/core/error.hpp"

namespace hve {
namespace {

constexpr char kKdfTag[] = "hve/seal/kdf/v1";
constexpr char kAssociated[] = "hve/seal/v1";

static_assert(kSealNonceBytes == crypto_aead_xchacha20poly1305_ietf_NPUBBYTES);
static_assert(kSealTagBytes == crypto_aead_xchacha20poly1305_ietf_ABYTES);

std::array<std::uint8_t, crypto_aead_xchacha20poly1305_ietf_KEYBYTES> derive_key(const GT& mask) {
  const Bytes m = mask.serialize();
  std::array<std::uint8_t, crypto_aead_xchacha20poly1305_ietf_KEYBYTES> key;
  crypto_generichash_state st;
  crypto_generichash_init(&st, nullptr, 0, key.size());
  crypto_generichash_update(&st, reinterpret_cast<const unsigned char*>(kKdfTag),
                            sizeof kKdfTag - 1);
  crypto_generichash_update(&st, m.data(), m.size());
  crypto_generichash_final(&st, key.data(), key.size());
  return key;
}

}  // namespace

SealedPayload seal_with_mask(RandomSource& rng, const GT& mask,
                             std::span<const std::uint8_t> payload, std::size_t max_payload) {
  if (payload.size() > max_payload)
    throw UsageError("payload of " + std::to_string(payload.size()) + " bytes exceeds limit of " +
                     std::to_string(max_payload));
  auto key = derive_key(mask);
  SealedPayload out;
  out.blob.resize(kSealNonceBytes + payload.size() + kSealTagBytes);
  rng.fill(std::span(out.blob.data(), kSealNonceBytes));
  unsigned long long clen = 0;
  crypto_aead_xchacha20poly1305_ietf_encrypt(
      out.blob.data() + kSealNonceBytes, &clen, payload.data(), payload.size(),
      reinterpret_cast<const unsigned char*>(kAssociated), sizeof kAssociated - 1, nullptr,
      out.blob.data(), key.data());
  sodium_memzero(key.data(), key.size());
  return out;
}

Sealing seal(RandomSource& rng, std::span<const std::uint8_t> payload, std::size_t max_payload) {
  if (payload.size() > max_payload)
    throw UsageError("payload of " + std::to_string(payload.size()) + " bytes exceeds limit of " +
                     std::to_string(max_payload));
  GT mask = GT::random(rng);
  SealedPayload sealed = seal_with_mask(rng, mask, payload, max_payload);
  return {std::move(mask), std::move(sealed)};
}

MatchResult open(const GT& candidate_mask, const SealedPayload& sealed) {
  if (sealed.blob.size() < kSealNonceBytes + kSealTagBytes) return MatchResult::no_match();
  auto key = derive_key(candidate_mask);
  const std::size_t clen = sealed.blob.size() - kSealNonceBytes;
  Bytes plain(clen - kSealTagBytes);
  unsigned long long plen = 0;
  const int rc = crypto_aead_xchacha20poly1305_ietf_decrypt(
      plain.data(), &plen, nullptr, sealed.blob.data() + kSealNonceBytes, clen,
      reinterpret_cast<const unsigned char*>(kAssociated), sizeof kAssociated - 1,
      sealed.blob.data(), key.data());
  sodium_memzero(key.data(), key.size());
  if (rc != 0) return MatchResult::no_match();
  plain.resize(plen);
  return MatchResult::matched(std::move(plain));
}

}  // namespace hve
